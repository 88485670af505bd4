from .quasipoly import *
from .diffop import *
