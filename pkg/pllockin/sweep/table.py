# External imports
import logging
import numpy as np

from concurrent.futures import ProcessPoolExecutor

# Local imports
from .grid        import SweepGrid
from .report      import build_report
from ..errors     import ParameterError, TableLookupError
from ..separatrix import TraceConfig

__all__ = ["sweep_lock_in", "lookup_lock_in", "compare_pull_out"]

logger = logging.getLogger(__name__)

def _sweep_cell(args):
    grid, ratio, tau2, trace_config = args
    return build_report(grid.params_for(ratio, tau2), trace_config)

def sweep_lock_in(grid=None, workers=1, trace_config=None):
    """One LockInReport per (ratio, tau2) cell, sorted by (ratio, tau2).

    Cells are independent; with workers > 1 they are spread over a process pool.
    """
    grid = grid or SweepGrid.default()
    trace_config = trace_config or TraceConfig()

    if int(workers) != workers or workers < 1:
        raise ParameterError("workers", "need a positive worker count, got {}".format(workers))

    jobs = [(grid, ratio, tau2, trace_config) for ratio, tau2 in grid.cells()]
    logger.info("Sweeping %d cells with %d worker(s)", len(jobs), workers)

    if workers == 1:
        table = [_sweep_cell(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=int(workers)) as pool:
            table = list(pool.map(_sweep_cell, jobs))

    table.sort(key=lambda report: (report.params.ratio, report.params.tau2))

    for report in table:
        logger.debug("Cell ratio=%g tau2=%g: omega_l=%s", report.params.ratio, report.params.tau2,
                     report.omega_l_numeric)

    return table

def lookup_lock_in(table, k0, tau1, tau2):
    """Lock-in frequency read off a sweep table: interpolate omega_l tau1/K0 at X = K0/tau1, then scale by X."""
    rows = [r for r in table if r.params.tau2 == tau2 and r.omega_l_numeric is not None]
    if not rows:
        raise TableLookupError("tau2={} is not tabulated".format(tau2))

    rows.sort(key=lambda r: r.params.ratio)
    xs = np.array([r.params.ratio for r in rows])
    ys = np.array([r.y_norm_consistent for r in rows])

    x = k0 / tau1
    if x < xs[0] or x > xs[-1]:
        raise TableLookupError("K0/tau1={} is outside the tabulated range [{}, {}]".format(x, xs[0], xs[-1]))

    exact = np.flatnonzero(xs == x)
    if exact.size:
        return rows[exact[0]].omega_l_numeric

    return float(np.interp(x, xs, ys)) * x

def compare_pull_out(grid=None, workers=1, trace_config=None):
    """Pull-out comparison rows: numeric, doubled series and empirical estimates."""
    return [report.compare_row() for report in sweep_lock_in(grid, workers, trace_config)]
