from .params import *
from .arithmetic import *
from .recursion import *
from .pfaffian import *
from .distribution import *
