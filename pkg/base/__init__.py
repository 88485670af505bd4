from .base_errors import *
from .base_space import *
from .base_runner import *
