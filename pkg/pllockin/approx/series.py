# External imports
import math
import numpy as np

from dataclasses import dataclass

# Local imports
from ..errors import DomainError, ParameterError

__all__ = ["SERIES_THETA_MAX", "SeriesOrder", "s0", "s1", "s1_integral_form", "s2",
           "series_separatrix", "q_hat"]

# s1 and s2 are 0/0 forms at pi
SERIES_THETA_MAX = math.pi - 1e-6

@dataclass(frozen=True)
class SeriesOrder:
    order: int

    def __post_init__(self):
        if self.order not in (0, 1, 2):
            raise ParameterError("order", "series order must be 0, 1 or 2, got {!r}".format(self.order))

def _as_order(order):
    return order if isinstance(order, SeriesOrder) else SeriesOrder(order)

def _check_theta(theta, closed_upper=None):
    theta = np.asarray(theta, dtype=float)
    if np.any(theta < 0):
        raise DomainError("theta must be >= 0")

    if closed_upper is None:
        if np.any(theta >= math.pi):
            raise DomainError("theta must lie in [0, pi)")
    elif np.any(theta > closed_upper):
        raise DomainError("theta must lie in [0, pi - 1e-6] for the first- and second-order terms")

    return theta

def _out(values):
    if np.ndim(values) == 0:
        return float(values)
    return values

def _g(half):
    # S0*S1 / (2 K0 sqrt(b K0))
    return 2.0 / 3.0 - np.sin(half) - np.sin(3 * half) / 3.0

def s0(p, theta):
    """Zeroth-order separatrix (pendulum), 2 sqrt(b K0) cos(theta/2)."""
    theta = _check_theta(theta)
    return _out(2 * math.sqrt(p.b * p.k0) * np.cos(theta / 2))

def s1(p, theta):
    theta = _check_theta(theta, SERIES_THETA_MAX)
    half = theta / 2
    return _out(p.k0 * _g(half) / np.cos(half))

def s1_integral_form(p, theta):
    """S1 before simplification: K0 int_theta^pi cos(t) S0(t) dt / S0(theta)."""
    theta = _check_theta(theta, SERIES_THETA_MAX)
    bk0 = p.b * p.k0
    c = np.cos(theta)

    numerator = p.k0 * math.sqrt(2 * bk0) * (2 * math.sqrt(2) / 3 - 2.0 / 3.0 * (2 + c) * np.sqrt(1 - c))
    return _out(numerator / np.sqrt(2 * bk0 * (1 + c)))

def s2(p, theta):
    theta = _check_theta(theta, SERIES_THETA_MAX)
    half = theta / 2
    sin_half = np.sin(half)
    cos_half = np.cos(half)
    root = math.sqrt(p.b * p.k0)
    k0_sq = p.k0 ** 2

    antiderivative = 8 * sin_half - 4 * np.log1p(sin_half) + 0.5 * np.cos(2 * theta) + 2 * np.cos(theta)
    integral_term = k0_sq * ((6.5 - 4 * math.log(2)) - antiderivative) / (6 * root * cos_half)
    square_term = k0_sq * _g(half) ** 2 / (4 * root * cos_half ** 3)

    return _out(integral_term - square_term)

def series_separatrix(p, theta, order=2):
    """Separatrix expanded in a = tau2/tau1: S0 + a S1 + a^2 S2, truncated at `order`."""
    order = _as_order(order).order

    value = np.asarray(s0(p, theta))
    if order >= 1:
        value = value + p.a * np.asarray(s1(p, theta))
    if order >= 2:
        value = value + p.a ** 2 * np.asarray(s2(p, theta))

    return _out(value)

def q_hat(p, theta, order=2):
    # Lower separatrix: the series with the sign of the x-plane boundary
    return _out(-np.asarray(series_separatrix(p, theta, order)))
