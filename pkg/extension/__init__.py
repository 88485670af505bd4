from .quad_space import *
from .matop import *
from .invariance import *
from .lame import *
