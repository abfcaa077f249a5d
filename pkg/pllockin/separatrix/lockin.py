# External imports
import numpy as np

from dataclasses import dataclass

# Local imports
from .trace   import DEFAULT_EPS, DEFAULT_H_THETA, trace
from ..errors import DomainError
from ..model  import y_to_x

__all__ = ["lock_in_frequency", "pull_out_frequency", "DomainBoundary", "lock_in_domain_boundary_x"]

def lock_in_frequency(p, eps=DEFAULT_EPS, h_theta=DEFAULT_H_THETA, curve=None):
    """Lock-in frequency: half the separatrix value at the stable equilibrium phase.

    The worst post-step state (0, x_eq(-w)) sits at y = 2w in the reduced plane,
    so lock is acquired without slipping exactly while 2w < S(0).
    """
    if curve is None:
        curve = trace(p, eps, h_theta)
    return curve.y_at_zero / 2

def pull_out_frequency(p, eps=DEFAULT_EPS, h_theta=DEFAULT_H_THETA, curve=None):
    # A frequency step d from a locked state lands at y = d, so the limit is S(0) = 2 w_l
    return 2 * lock_in_frequency(p, eps, h_theta, curve)

@dataclass(frozen=True, eq=False)
class DomainBoundary:
    """Lock-in domain boundary in filter-state coordinates at deviation `omega`.

    `lower` is the image of the traced separatrix over `thetas` (large y maps to
    small x); `upper` is its symmetric image (theta, y) -> (-theta, -y),
    evaluated at `upper_thetas` = -thetas.
    """
    omega:        float
    thetas:       np.ndarray
    lower:        np.ndarray
    upper_thetas: np.ndarray
    upper:        np.ndarray

def lock_in_domain_boundary_x(p, omega, theta_grid, curve=None, eps=DEFAULT_EPS, h_theta=DEFAULT_H_THETA):
    thetas = np.asarray(theta_grid, dtype=float)
    if np.any(thetas < 0) or np.any(thetas >= np.pi):
        raise DomainError("boundary grid must lie in [0, pi)")

    if curve is None:
        curve = trace(p, eps, h_theta)

    ys = curve.evaluate(thetas)

    lower = y_to_x(p, omega, (thetas, ys)).x
    upper = y_to_x(p, omega, (-thetas, -ys)).x

    return DomainBoundary(omega, thetas, np.asarray(lower), -thetas, np.asarray(upper))
