from .accuracy import *
from .gamma import *
from .beta import *
