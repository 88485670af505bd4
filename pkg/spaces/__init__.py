from .monomial import *
from .generators import *
from .search import *
