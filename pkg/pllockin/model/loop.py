# External imports
import math
import numpy as np

from dataclasses import dataclass
from typing      import NamedTuple

# Local imports
from ..errors import ParameterError

__all__ = ["LoopParams", "XState", "YState", "wrap_phase", "vector_field_x", "vector_field_y",
           "x_to_y", "y_to_x", "x_equilibrium"]

@dataclass(frozen=True)
class LoopParams:
    """Loop gain and active PI filter time constants of the averaged PLL model.

    The model works in the normalized coordinates where the PD gain has already
    been absorbed into the filter state, so only K0 = Kv*Kd appears.
    """
    k0:   float
    tau1: float
    tau2: float

    def __post_init__(self):
        for name in ("k0", "tau1", "tau2"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ParameterError(name, "must be finite, got {!r}".format(value))

        if self.k0 <= 0:
            raise ParameterError("k0", "loop gain must be positive, got {}".format(self.k0))
        if self.tau1 <= 0:
            raise ParameterError("tau1", "integrator time constant must be positive, got {}".format(self.tau1))
        if self.tau2 < 0:
            raise ParameterError("tau2", "proportional time constant must be non-negative, got {}".format(self.tau2))

    @property
    def a(self):
        return self.tau2 / self.tau1

    @property
    def b(self):
        return 1.0 / self.tau1

    @property
    def ratio(self):
        # K0/tau1, the X-axis of the lock-in diagram
        return self.k0 / self.tau1

    @property
    def natural_frequency(self):
        return math.sqrt(self.k0 / self.tau1)

    @classmethod
    def from_dict(cls, d):
        missing = [key for key in ("k0", "tau1", "tau2") if key not in d]
        if missing:
            raise ParameterError(missing[0], "missing from loop parameters")

        try:
            return cls(float(d["k0"]), float(d["tau1"]), float(d["tau2"]))
        except (TypeError, ValueError) as e:
            if isinstance(e, ParameterError):
                raise
            raise ParameterError("loop parameters", str(e))

    def to_dict(self):
        return {"k0": self.k0, "tau1": self.tau1, "tau2": self.tau2}

class XState(NamedTuple):
    theta_delta: float
    x:           float

    def wrapped(self):
        return XState(wrap_phase(self.theta_delta), self.x)

class YState(NamedTuple):
    theta_delta: float
    y:           float

    def wrapped(self):
        return YState(wrap_phase(self.theta_delta), self.y)

def wrap_phase(theta):
    """Map a phase to (-pi, pi]. Works elementwise on arrays."""
    wrapped = np.pi - np.mod(np.pi - np.asarray(theta, dtype=float), 2 * np.pi)
    if np.ndim(wrapped) == 0:
        return float(wrapped)
    return wrapped

def vector_field_x(p, omega, s):
    """Right-hand side of the loop equations in filter-state coordinates.

    Returns (dx/dt, dtheta/dt):
        dx/dt     = sin(theta)
        dtheta/dt = omega - (K0/tau1) (x + tau2 sin(theta))
    """
    theta, x = s
    sin_theta = np.sin(theta)

    dx     = sin_theta
    dtheta = omega - p.k0 / p.tau1 * (x + p.tau2 * sin_theta)

    return dx, dtheta

def vector_field_y(p, s):
    """Right-hand side of the reduced system (theta, y = dtheta/dt).

    Returns (dtheta/dt, dy/dt). The frequency deviation does not enter.
    """
    theta, y = s

    dtheta = y
    dy     = -p.a * p.k0 * np.cos(theta) * y - p.b * p.k0 * np.sin(theta)

    return dtheta, dy

def x_to_y(p, omega, s):
    theta, x = s
    y = omega - p.b * p.k0 * x - p.a * p.k0 * np.sin(theta)
    return YState(theta, y)

def y_to_x(p, omega, s):
    theta, y = s
    x = (omega - y - p.a * p.k0 * np.sin(theta)) / (p.b * p.k0)
    return XState(theta, x)

def x_equilibrium(p, omega):
    return omega * p.tau1 / p.k0
