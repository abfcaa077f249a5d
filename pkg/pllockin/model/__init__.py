from .loop       import *
from .equilibria import *
