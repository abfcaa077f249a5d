# External imports
import math
import numpy as np

from dataclasses import dataclass
from enum        import Enum

# Local imports
from .loop import x_equilibrium

__all__ = ["EquilibriumKind", "Equilibrium", "Classification", "discriminant", "classify",
           "saddle_eigenvalues", "equilibria", "equilibrium_lattice", "reduced_equilibria",
           "jacobian_x", "jacobian_y"]

# Relative tolerance of the degenerate-node test, applied to (K0 tau2)^2
DEGENERATE_RTOL = 1e-12

class EquilibriumKind(Enum):
    STABLE_NODE            = "stable node"
    STABLE_DEGENERATE_NODE = "stable degenerate node"
    STABLE_FOCUS           = "stable focus"
    SADDLE                 = "saddle"
    # Only reachable with tau2 = 0, the conservative oracle case
    CENTER                 = "center"

    @property
    def is_stable(self):
        return self in (EquilibriumKind.STABLE_NODE, EquilibriumKind.STABLE_DEGENERATE_NODE, EquilibriumKind.STABLE_FOCUS)

@dataclass(frozen=True)
class Equilibrium:
    theta:       float
    x_eq:        float
    kind:        EquilibriumKind
    eigenvalues: tuple

@dataclass(frozen=True)
class Classification:
    stable_kind:        EquilibriumKind
    stable_eigenvalues: tuple
    saddle_eigenvalues: tuple

def discriminant(p):
    return (p.k0 * p.tau2)**2 - 4 * p.k0 * p.tau1

def classify(p):
    """Type and eigenvalues of the equilibria at theta = 0 and theta = pi.

    At theta = 0:  lambda^2 + (K0 tau2/tau1) lambda + K0/tau1 = 0
    At theta = pi: lambda^2 - (K0 tau2/tau1) lambda - K0/tau1 = 0
    """
    d = discriminant(p)
    re = -p.k0 * p.tau2 / (2 * p.tau1)

    if p.tau2 == 0:
        im = math.sqrt(4 * p.k0 * p.tau1) / (2 * p.tau1)
        kind = EquilibriumKind.CENTER
        stable = (complex(0.0, im), complex(0.0, -im))
    elif abs(d) <= DEGENERATE_RTOL * (p.k0 * p.tau2)**2:
        kind = EquilibriumKind.STABLE_DEGENERATE_NODE
        stable = (complex(re), complex(re))
    elif d > 0:
        kind = EquilibriumKind.STABLE_NODE
        root = math.sqrt(d) / (2 * p.tau1)
        stable = (complex(re + root), complex(re - root))
    else:
        kind = EquilibriumKind.STABLE_FOCUS
        root = math.sqrt(-d) / (2 * p.tau1)
        stable = (complex(re, root), complex(re, -root))

    return Classification(kind, stable, saddle_eigenvalues(p))

def saddle_eigenvalues(p):
    ak0 = p.a * p.k0
    root = math.sqrt(ak0**2 + 4 * p.b * p.k0)

    lambda_plus  = (ak0 + root) / 2
    lambda_minus = (ak0 - root) / 2

    return (complex(lambda_plus), complex(lambda_minus))

def equilibria(p, omega):
    return equilibrium_lattice(p, omega, 0)

def equilibrium_lattice(p, omega, k):
    """Stable equilibrium at 2 pi k and saddle at pi + 2 pi k."""
    c = classify(p)
    x_eq = x_equilibrium(p, omega)

    stable = Equilibrium(2 * math.pi * k, x_eq, c.stable_kind, c.stable_eigenvalues)
    saddle = Equilibrium(math.pi + 2 * math.pi * k, x_eq, EquilibriumKind.SADDLE, c.saddle_eigenvalues)

    return stable, saddle

def reduced_equilibria(p):
    # The change of variables preserves the type; only the second coordinate changes
    c = classify(p)

    stable = Equilibrium(0.0, 0.0, c.stable_kind, c.stable_eigenvalues)
    saddle = Equilibrium(math.pi, 0.0, EquilibriumKind.SADDLE, c.saddle_eigenvalues)

    return stable, saddle

def jacobian_x(p, theta):
    """Jacobian of (dtheta/dt, dx/dt) with respect to (theta, x)."""
    ak0 = p.a * p.k0
    bk0 = p.b * p.k0
    cos_theta = math.cos(theta)

    return np.array([[-ak0 * cos_theta, -bk0],
                     [cos_theta,         0.0]])

def jacobian_y(p, theta, y=0.0):
    """Jacobian of (dtheta/dt, dy/dt) with respect to (theta, y)."""
    ak0 = p.a * p.k0
    bk0 = p.b * p.k0

    return np.array([[0.0, 1.0],
                     [ak0 * math.sin(theta) * y - bk0 * math.cos(theta), -ak0 * math.cos(theta)]])
