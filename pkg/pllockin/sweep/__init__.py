from .grid   import *
from .report import *
from .table  import *
