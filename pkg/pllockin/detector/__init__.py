from .waveform import *
from .pd_char  import *
