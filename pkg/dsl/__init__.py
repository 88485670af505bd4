from .ast import *
from .parser import *
from .printer import *
from .evaluator import *
