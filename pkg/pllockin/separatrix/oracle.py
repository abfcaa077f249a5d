# External imports
import logging

from dataclasses import dataclass

# Local imports
from ..errors    import ParameterError
from ..integrate import IntegratorConfig, simulate
from ..model     import XState, x_equilibrium

__all__ = ["worst_case_init", "lock_in_trial", "frequency_step", "SlipBracket", "bisect_slip_boundary",
           "slip_boundary_lock_in", "slip_boundary_pull_out"]

logger = logging.getLogger(__name__)

def _oracle_config(p, cfg):
    if cfg is None:
        return IntegratorConfig.for_params(p, stop_on_slip=True, stop_on_converge=True)
    return cfg

def worst_case_init(p, omega):
    # Locked state of the opposite deviation: the farthest equilibrium from the new one
    return XState(0.0, x_equilibrium(p, -omega))

def lock_in_trial(p, omega, cfg=None):
    """Acquisition from (0, x_eq(-omega)) under deviation +omega."""
    return simulate(p, omega, worst_case_init(p, omega), _oracle_config(p, cfg))

def frequency_step(p, omega_before, step, cfg=None):
    """Locked at omega_before, the deviation jumps by `step`."""
    init = XState(0.0, x_equilibrium(p, omega_before))
    return simulate(p, omega_before + step, init, _oracle_config(p, cfg))

@dataclass(frozen=True)
class SlipBracket:
    lo:         float
    hi:         float
    iterations: int

    @property
    def estimate(self):
        return 0.5 * (self.lo + self.hi)

    def contains(self, value):
        return self.lo <= value <= self.hi

def bisect_slip_boundary(slips, lo, hi, rel_tol=0.005, max_iter=60):
    """Bisect a monotone slip predicate: slips(lo) is False and slips(hi) is True."""
    if not 0 < lo < hi:
        raise ParameterError("bracket", "need 0 < lo < hi, got ({}, {})".format(lo, hi))
    if slips(lo):
        raise ParameterError("bracket", "trajectory already slips at the lower end {}".format(lo))
    if not slips(hi):
        raise ParameterError("bracket", "no slip at the upper end {}".format(hi))

    iterations = 0
    while (hi - lo) > rel_tol * hi and iterations < max_iter:
        mid = 0.5 * (lo + hi)
        if slips(mid):
            hi = mid
        else:
            lo = mid
        iterations += 1
        logger.debug("Slip bracket [%.9g, %.9g] after %d bisections", lo, hi, iterations)

    return SlipBracket(lo, hi, iterations)

def slip_boundary_lock_in(p, lo, hi, rel_tol=0.005, cfg=None):
    cfg = _oracle_config(p, cfg)
    return bisect_slip_boundary(lambda omega: lock_in_trial(p, omega, cfg).slipped, lo, hi, rel_tol)

def slip_boundary_pull_out(p, lo, hi, omega_before=0.0, rel_tol=0.005, cfg=None):
    cfg = _oracle_config(p, cfg)
    return bisect_slip_boundary(lambda step: frequency_step(p, omega_before, step, cfg).slipped, lo, hi, rel_tol)
