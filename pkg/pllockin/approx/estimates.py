# External imports
import math

# Local imports
from .series  import series_separatrix
from ..errors import DomainError, ParameterError

__all__ = ["S2_AT_ZERO_COEFF", "GARDNER_FACTOR", "omega_l_series", "omega_l_series_as_printed",
           "gardner_pull_out"]

# Coefficient of tau2^2 L^3 in the second-order lock-in estimate
S2_AT_ZERO_COEFF = (5 - 6 * math.log(2)) / 18
GARDNER_FACTOR   = 1.85

def _check_estimate_order(order):
    if order not in (1, 2):
        raise ParameterError("order", "lock-in estimate order must be 1 or 2, got {!r}".format(order))

def omega_l_series(p, order=2):
    """Series estimate of the lock-in frequency, (S0(0) + a S1(0) [+ a^2 S2(0)]) / 2.

    In closed form: L + tau2 L^2 / 3 [+ (5 - 6 ln 2)/18 tau2^2 L^3], L = sqrt(K0/tau1).
    """
    _check_estimate_order(order)
    return series_separatrix(p, 0.0, order) / 2

def omega_l_series_as_printed(p, order=2):
    """The same estimate with the x-plane scaling K0/tau1 applied on top."""
    _check_estimate_order(order)
    L = math.sqrt(p.k0 / p.tau1)

    value = p.k0 * L / p.tau1 + p.k0 ** 2 * p.tau2 / (3 * p.tau1 ** 2)
    if order == 2:
        value += S2_AT_ZERO_COEFF * p.tau2 ** 2 * L ** 5
    return value

def gardner_pull_out(p):
    """Empirical pull-out estimate 1.85 (1/2 + tau1 / (K0 tau2^2))."""
    if p.tau2 == 0:
        raise DomainError("empirical pull-out estimate needs tau2 > 0")
    return GARDNER_FACTOR * (0.5 + p.tau1 / (p.k0 * p.tau2 ** 2))
