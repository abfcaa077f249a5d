name = "pllockin"
__version__ = "0.1"

from .errors     import *
from .model      import *
from .detector   import *
from .integrate  import *
from .separatrix import *
from .approx     import *
from .sweep      import *
from .utils      import *
