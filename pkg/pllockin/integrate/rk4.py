# External imports
import numpy as np

# Local imports
from ..errors import IntegrationError

__all__ = ["rk4_step"]

def rk4_step(field, state, h):
    """One classical fourth-order Runge-Kutta step of an autonomous field.

    `field` maps a state array to its time derivative (same shape). Scalars and
    arrays of any shape are accepted; the result has the shape of `state`.
    """
    if not h > 0:
        raise IntegrationError("step must be positive, got {}".format(h))

    state = np.asarray(state, dtype=float)
    if not np.all(np.isfinite(state)):
        raise IntegrationError("non-finite state {}".format(state))

    k1 = np.asarray(field(state), dtype=float)
    k2 = np.asarray(field(state + 0.5 * h * k1), dtype=float)
    k3 = np.asarray(field(state + 0.5 * h * k2), dtype=float)
    k4 = np.asarray(field(state + h * k3), dtype=float)

    next_state = state + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.all(np.isfinite(next_state)):
        raise IntegrationError("integration diverged from state {}".format(state))

    return next_state
