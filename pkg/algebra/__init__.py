from .fitting import *
from .relations import *
from .closure import *
