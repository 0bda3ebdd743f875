from .common import *
from .cdf import *
from .quantile import *
from .table import *
from .curve import *
from .mc import *
from .bench import *
