from .record import *
from .writer import *
