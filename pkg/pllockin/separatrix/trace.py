# External imports
import logging
import math
import numpy as np

from dataclasses import dataclass, field
from functools   import cached_property

from scipy.interpolate import CubicHermiteSpline

# Local imports
from ..errors import DomainError, ParameterError, TracingError
from ..model  import saddle_eigenvalues

__all__ = ["DEFAULT_EPS", "DEFAULT_H_THETA", "MAX_EPS", "TraceConfig", "SeparatrixCurve",
           "stable_direction", "phase_plane_slope", "trace"]

logger = logging.getLogger(__name__)

DEFAULT_EPS     = 1e-8 * math.pi
DEFAULT_H_THETA = math.pi / 20000
MAX_EPS         = 1e-4

@dataclass(frozen=True)
class TraceConfig:
    eps:     float = DEFAULT_EPS
    h_theta: float = DEFAULT_H_THETA

    def __post_init__(self):
        if not (0 < self.eps <= MAX_EPS):
            raise ParameterError("eps", "launch offset must lie in (0, {}], got {}".format(MAX_EPS, self.eps))
        if not (math.isfinite(self.h_theta) and self.h_theta > 0):
            raise ParameterError("h-theta", "theta step must be positive, got {}".format(self.h_theta))

    def to_dict(self):
        return {"eps": self.eps, "h_theta": self.h_theta}

@dataclass(frozen=True, eq=False)
class SeparatrixCurve:
    """Stable-manifold branch of the saddle (pi, 0) lying in y > 0, traced down to theta = 0."""
    thetas:     np.ndarray
    ys:         np.ndarray
    slopes:     np.ndarray
    y_at_zero:  float
    # |lambda-|, slope of the branch at the saddle
    lambda_abs: float
    config:     TraceConfig = field(default_factory=TraceConfig)

    @cached_property
    def _spline(self):
        # Nodes are stored in descending theta
        return CubicHermiteSpline(self.thetas[::-1], self.ys[::-1], self.slopes[::-1])

    def evaluate(self, theta):
        """Separatrix value y(theta) for theta in [0, pi)."""
        theta = np.asarray(theta, dtype=float)
        if np.any(theta < 0) or np.any(theta >= math.pi):
            raise DomainError("separatrix is traced on [0, pi) only")

        ys = np.where(theta > self.thetas[0],
                      self.lambda_abs * (math.pi - theta),
                      self._spline(np.minimum(theta, self.thetas[0])))

        if ys.ndim == 0:
            return float(ys)
        return ys

def stable_direction(p):
    """Unit stable eigendirection of the saddle (pi, 0), pointing into theta < pi, y > 0."""
    lambda_minus = saddle_eigenvalues(p)[1].real

    v = np.array([-1.0, -lambda_minus])
    return v / np.linalg.norm(v)

def phase_plane_slope(p, theta, y):
    """dy/dtheta = -(a K0 cos(theta) y + b K0 sin(theta)) / y, valid off the line y = 0."""
    return -(p.a * p.k0 * np.cos(theta) * y + p.b * p.k0 * np.sin(theta)) / y

def trace(p, eps=DEFAULT_EPS, h_theta=DEFAULT_H_THETA):
    """Trace the separatrix from theta = pi - eps down to theta = 0.

    The branch is launched on the stable eigendirection and integrated in
    decreasing theta with RK4. Close to the saddle the slope equation is stiff
    (its y-derivative grows like r/(pi - theta), r = b K0 / lambda-^2), so the
    step there is graded as (pi - theta)/(1 + r) until it reaches h_theta.
    The last step is shortened to land on theta = 0 exactly.
    """
    config = TraceConfig(eps, h_theta)

    ak0 = p.a * p.k0
    bk0 = p.b * p.k0

    lambda_abs = -saddle_eigenvalues(p)[1].real
    r = bk0 / lambda_abs**2

    def slope(theta, y):
        return -(ak0 * math.cos(theta) * y + bk0 * math.sin(theta)) / y

    theta = math.pi - eps
    y = lambda_abs * eps

    thetas = [theta]
    ys     = [y]
    slopes = [slope(theta, y)]

    logger.debug("Tracing separatrix for %s from theta=pi-%.3g", p, eps)

    while theta > 0:
        # Integrate in decreasing theta: step of -h
        h = min(h_theta, (math.pi - theta) / (1 + r))
        if theta - h < 0.25 * h:
            h = theta

        # Scalar RK4 step in theta; rk4_step only takes autonomous array fields
        k1 = slopes[-1]
        k2 = slope(theta - 0.5 * h, y - 0.5 * h * k1)
        k3 = slope(theta - 0.5 * h, y - 0.5 * h * k2)
        k4 = slope(theta - h, y - h * k3)

        y = y - h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        theta = 0.0 if h == theta else theta - h

        if not (math.isfinite(y) and y > 0):
            raise TracingError("separatrix left the upper half plane at theta={:.6g} (y={})".format(theta, y))

        thetas.append(theta)
        ys.append(y)
        slopes.append(slope(theta, y))

    logger.debug("Traced %d nodes, S(0)=%.12g", len(thetas), y)

    return SeparatrixCurve(
        thetas=np.array(thetas),
        ys=np.array(ys),
        slopes=np.array(slopes),
        y_at_zero=y,
        lambda_abs=lambda_abs,
        config=config,
    )
