from .report import *
from .config import *
