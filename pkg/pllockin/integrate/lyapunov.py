# External imports
import numpy as np

__all__ = ["lyapunov_v", "lyapunov_vdot", "pendulum_energy"]

def lyapunov_v(p, omega, s):
    """V = 1/2 (x - tau1 omega/K0)^2 + (2 tau1/K0) sin^2(theta/2) >= 0."""
    theta, x = s
    return 0.5 * (x - p.tau1 * omega / p.k0)**2 + 2 * p.tau1 / p.k0 * np.sin(theta / 2)**2

def lyapunov_vdot(p, s):
    """Derivative of V along the loop equations: -tau2 sin^2(theta) <= 0.

    Independent of the frequency deviation and of the filter state.
    """
    theta = s[0]
    return -p.tau2 * np.sin(theta)**2

def pendulum_energy(p, s):
    # Conserved by the reduced system when tau2 = 0
    theta, y = s
    return 0.5 * y**2 - p.b * p.k0 * np.cos(theta)
