# External imports
import logging
import math
import numpy as np

from dataclasses import dataclass, field as dc_field

# Local imports
from .rk4         import rk4_step
from .lyapunov    import lyapunov_v
from ..errors     import ParameterError
from ..model      import XState, classify, x_equilibrium, x_to_y

__all__ = ["IntegratorConfig", "TrajectoryRecord", "simulate", "loop_field"]

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi

@dataclass(frozen=True)
class IntegratorConfig:
    h:                float
    t_max:            float
    eps_conv:         float = 1e-4
    settle_window:    float = 20.0
    stop_on_slip:     bool  = False
    stop_on_converge: bool  = True

    def __post_init__(self):
        if not (math.isfinite(self.h) and self.h > 0):
            raise ParameterError("h", "time step must be positive, got {}".format(self.h))
        if not (math.isfinite(self.t_max) and self.t_max > self.h):
            raise ParameterError("tmax", "horizon must exceed the time step, got {}".format(self.t_max))
        if not self.eps_conv > 0:
            raise ParameterError("eps_conv", "convergence radius must be positive, got {}".format(self.eps_conv))
        if not self.settle_window >= 0:
            raise ParameterError("settle_window", "must be non-negative, got {}".format(self.settle_window))

    @classmethod
    def for_params(cls, p, **overrides):
        """Defaults scaled to the natural frequency sqrt(K0/tau1) of the loop."""
        wn = p.natural_frequency

        settings = {
            "h":             0.01 / wn,
            "eps_conv":      1e-4,
            "settle_window": 20.0 / wn,
        }
        settings.update({k: v for k, v in overrides.items() if v is not None and k != "t_max"})

        t_max = overrides.get("t_max")
        if t_max is None:
            t_max = settings["settle_window"] + default_horizon(p)

        return cls(t_max=t_max, **settings)

def default_horizon(p):
    # Enough time for the slowest eigenmode to decay by ~e^-30, never less than 100 natural periods' worth
    wn = p.natural_frequency
    decay = -max(ev.real for ev in classify(p).stable_eigenvalues)

    if decay <= 0:
        return 200.0 / wn
    return min(max(100.0 / wn, 30.0 / decay), 2000.0 / wn)

@dataclass(frozen=True)
class TrajectoryRecord:
    times:         np.ndarray
    states:        np.ndarray
    v_series:      np.ndarray
    slipped:       bool
    slip_count:    int
    converged:     bool
    max_excursion: float
    # Index k of the stable equilibrium 2 pi k the trajectory settled at, if any
    equilibrium_index: object = None
    metadata:      dict = dc_field(default_factory=dict)

    @property
    def samples(self):
        return [(float(t), XState(float(s[0]), float(s[1]))) for t, s in zip(self.times, self.states)]

    @property
    def thetas(self):
        return self.states[:, 0]

    @property
    def xs(self):
        return self.states[:, 1]

    @property
    def final_state(self):
        return XState(float(self.states[-1, 0]), float(self.states[-1, 1]))

    def ys(self, p, omega):
        return x_to_y(p, omega, (self.thetas, self.xs)).y

def loop_field(p, omega):
    """Loop equations as an array field over states ordered (theta, x)."""
    k0_tau1 = p.k0 / p.tau1
    tau2 = p.tau2

    def field(state):
        theta, x = state[0], state[1]
        sin_theta = np.sin(theta)
        return np.array([omega - k0_tau1 * (x + tau2 * sin_theta), sin_theta])

    return field

def simulate(p, omega, init, cfg):
    """Integrate the loop equations from `init` with unwrapped phase.

    A cycle slip is recorded once the phase has moved at least 2 pi away from
    its initial value. The trajectory has converged when it stays within
    eps_conv (weighted norm |dtheta| + sqrt(K0/tau1)|dx|) of a stable
    equilibrium 2 pi k for settle_window seconds; the limit point counts
    toward the excursion.
    """
    field = loop_field(p, omega)
    x_eq = x_equilibrium(p, omega)
    wn = p.natural_frequency

    theta0, x0 = float(init[0]), float(init[1])
    state = np.array([theta0, x0])

    n_steps = int(math.ceil(cfg.t_max / cfg.h))

    times  = [0.0]
    states = [state]

    max_excursion = 0.0
    inside_since = None
    converged = False
    equilibrium_index = None

    for step in range(1, n_steps + 1):
        state = rk4_step(field, state, cfg.h)
        t = step * cfg.h

        times.append(t)
        states.append(state)

        # Unwrapped phase excursion from the initial value
        excursion = abs(state[0] - theta0)
        if excursion > max_excursion:
            max_excursion = excursion
            if cfg.stop_on_slip and max_excursion >= TWO_PI:
                logger.debug("Slip at t=%.6g (excursion %.6g)", t, max_excursion)
                break

        # Distance to the nearest stable equilibrium 2 pi k
        k = round(state[0] / TWO_PI)
        distance = abs(state[0] - TWO_PI * k) + wn * abs(state[1] - x_eq)

        if distance < cfg.eps_conv:
            if inside_since is None:
                inside_since = (t, k)
            elif inside_since[1] != k:
                inside_since = (t, k)

            if t - inside_since[0] >= cfg.settle_window:
                converged = True
                equilibrium_index = int(k)
                if cfg.stop_on_converge:
                    break
        else:
            inside_since = None
            converged = False
            equilibrium_index = None

    if converged:
        max_excursion = max(max_excursion, abs(TWO_PI * equilibrium_index - theta0))

    times  = np.array(times)
    states = np.array(states)
    v_series = lyapunov_v(p, omega, (states[:, 0], states[:, 1]))

    slip_count = int(math.floor(max_excursion / TWO_PI))

    logger.debug("Simulated %d steps: converged=%s, slips=%d", len(times) - 1, converged, slip_count)

    return TrajectoryRecord(
        times=times,
        states=states,
        v_series=np.asarray(v_series),
        slipped=slip_count >= 1,
        slip_count=slip_count,
        converged=converged,
        max_excursion=max_excursion,
        equilibrium_index=equilibrium_index,
        metadata={"h": cfg.h, "t_max": cfg.t_max, "eps_conv": cfg.eps_conv, "settle_window": cfg.settle_window},
    )
