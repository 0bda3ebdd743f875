from .errors import *
from .config import *
from .constants import *

from .auto_numbered import *
