from .version import __version__
from .helper import *
from .special import *
from .exact import *
from .approx import *
from .montecarlo import *
from .core import *
