from .series    import *
from .estimates import *
