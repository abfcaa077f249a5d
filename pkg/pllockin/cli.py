# External imports
import sys
import logging
import argparse

import numpy as np

# Local imports
from .             import __version__
from .errors       import DomainError, ParameterError, PllockinError
from .model        import LoopParams, XState, x_equilibrium, y_to_x
from .detector     import pd_table
from .integrate    import IntegratorConfig, simulate
from .separatrix   import TraceConfig, trace
from .sweep        import COMPARE_COLUMNS, SWEEP_COLUMNS, SweepGrid, build_report, sweep_lock_in
from .utils        import emit, load_config, to_csv, to_json

__all__ = ["COMMANDS", "build_parser", "parse_and_run", "main"]

logger = logging.getLogger(__name__)

COMMANDS = ("lockin", "pullout", "separatrix", "simulate", "sweep", "estimate", "pd-table", "compare")

FLOAT_KEYS = ("k0", "tau1", "tau2", "omega", "theta0", "x0", "tmax", "h", "eps", "h_theta")

# Commands whose default output is a single JSON report
REPORT_COMMANDS = ("lockin", "pullout", "estimate")

def _flag(name):
    return "--" + name.replace("_", "-")

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--k0'     , type=float, default=None, help="Loop gain K0 [1/s]."                 )
    common.add_argument('--tau1'   , type=float, default=None, help="Filter integrator time constant [s].")
    common.add_argument('--tau2'   , type=float, default=None, help="Filter proportional time constant [s].")
    common.add_argument('--omega'  , type=float, default=None, help="Free-running frequency deviation [rad/s].")
    common.add_argument('--theta0' , type=float, default=None, help="Initial phase error [rad]."          )
    common.add_argument('--x0'     , type=float, default=None, help="Initial filter state."               )
    common.add_argument('--tmax'   , type=float, default=None, help="Simulation horizon [s]."             )
    common.add_argument('--h'      , type=float, default=None, help="Integration time step [s]."          )
    common.add_argument('--eps'    , type=float, default=None, help="Separatrix launch offset [rad]."     )
    common.add_argument('--h-theta', type=float, default=None, help="Separatrix theta step [rad]."        )
    common.add_argument('--format' , choices=("json", "csv"), default=None, help="Report format."         )
    common.add_argument('--config' , type=str,   default=None, help="JSON file with defaults for these flags.")
    common.add_argument('--out'    , type=str,   default=None, help="Write the report to this file."      )
    common.add_argument('--workers', type=int,   default=None, help="Worker processes for sweep/compare." )
    common.add_argument('-v', '--verbose', action="count", default=0, help="-v for info, -vv for debug logs.")

    parser = argparse.ArgumentParser(prog="pllockin", description="Lock-in range, pull-out frequency and separatrix toolkit for the PI-filter PLL.")
    parser.add_argument('--version', action="version", version="%(prog)s " + __version__)

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common])

    return parser

def _setup_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

def _resolve_settings(opt):
    """Merge the config file (if any) under the command-line flags."""
    settings = load_config(opt.config) if opt.config else {}

    for key in FLOAT_KEYS + ("format", "out", "workers"):
        value = getattr(opt, key)
        if value is not None:
            settings[key] = value

    for key in FLOAT_KEYS:
        if key in settings:
            value = settings[key]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParameterError(key, "expected a number, got {!r}".format(value))
            if not np.isfinite(value):
                raise ParameterError(key, "expected a finite number, got {!r}".format(value))
            settings[key] = float(value)

    if "workers" in settings:
        workers = settings["workers"]
        if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
            raise ParameterError("workers", "need a positive integer, got {!r}".format(workers))

    if settings.get("format", "json") not in ("json", "csv"):
        raise ParameterError("format", "must be json or csv, got {!r}".format(settings["format"]))

    return settings

def _loop_params(settings):
    for key in ("k0", "tau1", "tau2"):
        if key not in settings:
            raise ParameterError(key, "missing required parameter")
    return LoopParams(settings["k0"], settings["tau1"], settings["tau2"])

def _trace_config(settings):
    defaults = TraceConfig()
    return TraceConfig(settings.get("eps", defaults.eps), settings.get("h_theta", defaults.h_theta))

def _metadata(command, **extra):
    metadata = {"tool": "pllockin", "version": __version__, "command": command}
    metadata.update(extra)
    return metadata

def _table(fmt, columns, rows, metadata):
    if fmt == "csv":
        return to_csv(columns, rows)
    return to_json({"metadata": metadata, "rows": [{c: row.get(c) for c in columns} for row in rows]})

def _validate(command, settings):
    """Build every value object the command needs; raises before any computation."""
    job = {"settings": settings}

    if command in REPORT_COMMANDS + ("separatrix", "simulate"):
        job["params"] = _loop_params(settings)

    if command in REPORT_COMMANDS + ("separatrix", "sweep", "compare"):
        job["trace_config"] = _trace_config(settings)

    if command == "simulate":
        p = job["params"]
        job["config"] = IntegratorConfig.for_params(p, h=settings.get("h"), t_max=settings.get("tmax"),
                                                    stop_on_converge=True)

    if command in ("sweep", "compare"):
        job["grid"] = SweepGrid.default()

    return job

def _run_report(command, job, fmt):
    p = job["params"]
    trace_config = job["trace_config"]

    report = build_report(p, trace_config)
    if report.error is not None:
        raise PllockinError(report.error)

    if fmt == "csv":
        return to_csv(SWEEP_COLUMNS, [report.sweep_row()])

    d = report.to_dict()
    d["metadata"] = _metadata(command, **d["metadata"])
    return to_json(d)

def _run_separatrix(job, fmt):
    p = job["params"]
    trace_config = job["trace_config"]
    omega = job["settings"].get("omega")

    curve = trace(p, trace_config.eps, trace_config.h_theta)

    columns = ["theta", "y"]
    if omega is not None:
        columns.append("x_at_omega")
        xs = y_to_x(p, omega, (curve.thetas, curve.ys)).x
    else:
        xs = np.full(len(curve.thetas), None)

    rows = [{"theta": t, "y": y, "x_at_omega": x} for t, y, x in zip(curve.thetas, curve.ys, xs)]
    metadata = _metadata("separatrix", params=p.to_dict(), omega=omega, y_at_zero=curve.y_at_zero,
                         **trace_config.to_dict())

    return _table(fmt, columns, rows, metadata)

def _run_simulate(job, fmt):
    p = job["params"]
    cfg = job["config"]
    settings = job["settings"]

    omega = settings.get("omega", 0.0)
    init = XState(settings.get("theta0", 0.0), settings.get("x0", x_equilibrium(p, 0.0)))

    record = simulate(p, omega, init, cfg)

    ys = record.ys(p, omega)
    rows = [{"t": t, "theta_delta": s[0], "x": s[1], "y": y, "v": v}
            for t, s, y, v in zip(record.times, record.states, ys, record.v_series)]

    metadata = _metadata("simulate", params=p.to_dict(), omega=omega, init=list(init), slipped=record.slipped,
                         slip_count=record.slip_count, converged=record.converged, **record.metadata)

    return _table(fmt, ["t", "theta_delta", "x", "y", "v"], rows, metadata)

def _run_sweep(command, job, fmt):
    grid = job["grid"]
    trace_config = job["trace_config"]
    workers = job["settings"].get("workers", 1)

    table = sweep_lock_in(grid, workers, trace_config)

    if command == "compare":
        columns, rows = COMPARE_COLUMNS, [r.compare_row() for r in table]
    else:
        columns, rows = SWEEP_COLUMNS, [r.sweep_row() for r in table]

    failed = [r for r in table if r.error is not None]
    metadata = _metadata(command, grid=grid.to_dict(), failed_cells=len(failed), **trace_config.to_dict())

    return _table(fmt, columns, rows, metadata)

def _run_pd_table(fmt):
    columns = ["waveform_f1", "waveform_f2", "kd_recovered", "kd_expected"]
    return _table(fmt, columns, pd_table(), _metadata("pd-table", m=4096, n=4096))

def _run(command, job):
    settings = job["settings"]

    if command in REPORT_COMMANDS:
        return _run_report(command, job, settings.get("format", "json"))
    if command == "separatrix":
        return _run_separatrix(job, settings.get("format", "csv"))
    if command == "simulate":
        return _run_simulate(job, settings.get("format", "csv"))
    if command in ("sweep", "compare"):
        return _run_sweep(command, job, settings.get("format", "csv"))

    return _run_pd_table(settings.get("format", "csv"))

def parse_and_run(argv=None):
    """Parse `argv`, run one subcommand and return its exit status (0 ok, 1 computation error, 2 bad usage)."""
    parser = build_parser()

    try:
        opt = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    _setup_logging(opt.verbose)

    try:
        settings = _resolve_settings(opt)
        job = _validate(opt.command, settings)
    except ParameterError as e:
        sys.stderr.write("pllockin {}: error: {}: {}\n".format(opt.command, _flag(e.name), e.message))
        return 2
    except DomainError as e:
        sys.stderr.write("pllockin {}: error: {}\n".format(opt.command, e))
        return 2

    try:
        text = _run(opt.command, job)
    except PllockinError as e:
        logger.debug("Computation failed", exc_info=True)
        sys.stderr.write("pllockin {}: computation failed: {}\n".format(opt.command, e))
        return 1

    try:
        emit(text, settings.get("out"))
    except OSError as e:
        sys.stderr.write("pllockin {}: error: --out: cannot write report: {}\n".format(opt.command, e))
        return 1

    return 0

def main(argv=None):
    return parse_and_run(argv)
