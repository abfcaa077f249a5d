from .trace  import *
from .lockin import *
from .oracle import *
