from .tracy_widom import *
