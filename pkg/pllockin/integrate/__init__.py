from .rk4      import *
from .lyapunov import *
from .simulate import *
