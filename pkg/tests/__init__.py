import os
import sys

PROJECT_PATH = os.getcwd()
sys.path.insert(0, PROJECT_PATH)
