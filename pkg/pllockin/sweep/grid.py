# External imports
import math

from dataclasses import dataclass

# Local imports
from ..errors import ParameterError
from ..model  import LoopParams

__all__ = ["DEFAULT_RATIOS", "DEFAULT_TAU2S", "SweepGrid"]

DEFAULT_RATIOS = (0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0)
DEFAULT_TAU2S  = (0.05, 0.1, 0.2, 0.5)

@dataclass(frozen=True)
class SweepGrid:
    """K0/tau1 ratios and tau2 values of a lock-in sweep.

    Each ratio is realized with tau1 = tau1_fixed and K0 = ratio * tau1_fixed;
    the reduced dynamics depend on K0/tau1 and tau2 only.
    """
    ratio_values: tuple = DEFAULT_RATIOS
    tau2_values:  tuple = DEFAULT_TAU2S
    tau1_fixed:   float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "ratio_values", tuple(float(r) for r in self.ratio_values))
        object.__setattr__(self, "tau2_values", tuple(float(t) for t in self.tau2_values))

        if not self.ratio_values:
            raise ParameterError("ratio_values", "grid needs at least one ratio")
        if not self.tau2_values:
            raise ParameterError("tau2_values", "grid needs at least one tau2")

        if any(not (math.isfinite(r) and r > 0) for r in self.ratio_values):
            raise ParameterError("ratio_values", "ratios must be positive")
        if any(r1 >= r2 for r1, r2 in zip(self.ratio_values, self.ratio_values[1:])):
            raise ParameterError("ratio_values", "ratios must be strictly increasing")

        # tau2 = 0 is the conservative loop
        if any(not (math.isfinite(t) and t >= 0) for t in self.tau2_values):
            raise ParameterError("tau2_values", "tau2 values must be non-negative")
        if len(set(self.tau2_values)) != len(self.tau2_values):
            raise ParameterError("tau2_values", "tau2 values must be distinct")

        if not (math.isfinite(self.tau1_fixed) and self.tau1_fixed > 0):
            raise ParameterError("tau1_fixed", "must be positive, got {}".format(self.tau1_fixed))

    @classmethod
    def default(cls):
        return cls()

    def cells(self):
        """(ratio, tau2) pairs in table order."""
        return sorted((ratio, tau2) for ratio in self.ratio_values for tau2 in self.tau2_values)

    def params_for(self, ratio, tau2):
        return LoopParams(ratio * self.tau1_fixed, self.tau1_fixed, tau2)

    def to_dict(self):
        return {
            "ratio_values": list(self.ratio_values),
            "tau2_values":  list(self.tau2_values),
            "tau1_fixed":   self.tau1_fixed,
        }
