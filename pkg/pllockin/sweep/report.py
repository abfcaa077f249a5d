# External imports
import logging

from dataclasses import dataclass, field

# Local imports
from ..approx     import gardner_pull_out, omega_l_series, omega_l_series_as_printed
from ..errors     import TracingError
from ..model      import LoopParams
from ..separatrix import TraceConfig, lock_in_frequency

__all__ = ["LockInReport", "build_report", "SWEEP_COLUMNS", "COMPARE_COLUMNS"]

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ["ratio", "tau2", "omega_l_numeric", "omega_l_series1", "omega_l_series2", "omega_po_numeric",
                 "omega_po_gardner", "y_norm_consistent", "y_norm_as_printed"]

COMPARE_COLUMNS = ["ratio", "tau2", "omega_po_numeric", "omega_po_series1", "omega_po_series2", "omega_po_gardner",
                   "omega_po_series1_as_printed", "omega_po_series2_as_printed", "po_norm_consistent",
                   "po_norm_as_printed"]

def _times(factor, value):
    return None if value is None else factor * value

@dataclass(frozen=True)
class LockInReport:
    """Numeric and estimated lock-in/pull-out frequencies of one loop.

    omega_l_numeric is None when tracing failed; `error` then holds the reason.
    omega_po_gardner is None for tau2 = 0.
    """
    params:                     LoopParams
    omega_l_numeric:            object
    omega_l_series1:            float
    omega_l_series2:            float
    omega_l_series1_as_printed: float
    omega_l_series2_as_printed: float
    omega_po_gardner:           object = None
    metadata:                   dict   = field(default_factory=dict)
    error:                      object = None

    @property
    def omega_po_numeric(self):
        return _times(2, self.omega_l_numeric)

    @property
    def omega_po_series1(self):
        return 2 * self.omega_l_series1

    @property
    def omega_po_series2(self):
        return 2 * self.omega_l_series2

    @property
    def y_norm_consistent(self):
        return _times(1.0 / self.params.ratio, self.omega_l_numeric)

    @property
    def y_norm_as_printed(self):
        # (K0/tau1) omega_l read back on the printed axis, omega_l^printed / (K0/tau1)
        printed = _times(self.params.ratio, self.omega_l_numeric)
        return _times(1.0 / self.params.ratio, printed)

    def to_dict(self):
        return {
            "params":                     self.params.to_dict(),
            "omega_l_numeric":            self.omega_l_numeric,
            "omega_l_series1":            self.omega_l_series1,
            "omega_l_series2":            self.omega_l_series2,
            "omega_l_series1_as_printed": self.omega_l_series1_as_printed,
            "omega_l_series2_as_printed": self.omega_l_series2_as_printed,
            "omega_po":                   self.omega_po_numeric,
            "omega_po_gardner":           self.omega_po_gardner,
            "y_norm_consistent":          self.y_norm_consistent,
            "y_norm_as_printed":          self.y_norm_as_printed,
            "metadata":                   dict(self.metadata),
            "error":                      self.error,
        }

    def sweep_row(self):
        return {
            "ratio":             self.params.ratio,
            "tau2":              self.params.tau2,
            "omega_l_numeric":   self.omega_l_numeric,
            "omega_l_series1":   self.omega_l_series1,
            "omega_l_series2":   self.omega_l_series2,
            "omega_po_numeric":  self.omega_po_numeric,
            "omega_po_gardner":  self.omega_po_gardner,
            "y_norm_consistent": self.y_norm_consistent,
            "y_norm_as_printed": self.y_norm_as_printed,
        }

    def compare_row(self):
        return {
            "ratio":                       self.params.ratio,
            "tau2":                        self.params.tau2,
            "omega_po_numeric":            self.omega_po_numeric,
            "omega_po_series1":            self.omega_po_series1,
            "omega_po_series2":            self.omega_po_series2,
            "omega_po_gardner":            self.omega_po_gardner,
            "omega_po_series1_as_printed": 2 * self.omega_l_series1_as_printed,
            "omega_po_series2_as_printed": 2 * self.omega_l_series2_as_printed,
            "po_norm_consistent":          _times(2, self.y_norm_consistent),
            "po_norm_as_printed":          _times(2, self.y_norm_as_printed),
        }

def build_report(p, trace_config=None, curve=None):
    """Trace the separatrix of `p` and collect every lock-in estimate into one report.

    A tracing failure is recorded in the report rather than raised.
    """
    trace_config = trace_config or TraceConfig()

    omega_l, error = None, None
    try:
        omega_l = lock_in_frequency(p, trace_config.eps, trace_config.h_theta, curve)
    except TracingError as e:
        logger.warning("Tracing failed for k0=%g tau1=%g tau2=%g: %s", p.k0, p.tau1, p.tau2, e)
        error = str(e)

    return LockInReport(
        params=p,
        omega_l_numeric=omega_l,
        omega_l_series1=omega_l_series(p, 1),
        omega_l_series2=omega_l_series(p, 2),
        omega_l_series1_as_printed=omega_l_series_as_printed(p, 1),
        omega_l_series2_as_printed=omega_l_series_as_printed(p, 2),
        omega_po_gardner=gardner_pull_out(p) if p.tau2 > 0 else None,
        metadata=trace_config.to_dict(),
        error=error,
    )
