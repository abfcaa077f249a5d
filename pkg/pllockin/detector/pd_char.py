# External imports
import logging
import numpy as np

# Local imports
from .waveform import load_waveform_with_type
from ..errors  import ParameterError

__all__ = ["MIN_SAMPLES", "MIN_PHASE_SAMPLES", "averaged_pd", "averaged_pd_curve", "fit_sine_gain",
           "two_phase_pd", "averaged_two_phase_pd", "fit_two_phase_gain", "TWO_PHASE", "QUADRATURE", "PD_TABLE",
           "pd_table"]

logger = logging.getLogger(__name__)

MIN_SAMPLES       = 64
MIN_PHASE_SAMPLES = 16

# Detector kinds and the gains they produce, keyed by waveform type names
TWO_PHASE  = "two_phase"
QUADRATURE = "quadrature"

PD_TABLE = [
    ("sine",      "cosine",           0.5),
    ("sine",      "square_of_cosine", 2 / np.pi),
    ("triangle",  "sine",             4 / np.pi**2),
    (TWO_PHASE,   QUADRATURE,         1.0),
]

def _check_samples(n, m=None):
    if int(n) != n or n < MIN_SAMPLES:
        raise ParameterError("n", "need an integer sample count >= {}, got {}".format(MIN_SAMPLES, n))
    if m is not None and (int(m) != m or m < MIN_PHASE_SAMPLES):
        raise ParameterError("m", "need an integer phase sample count >= {}, got {}".format(MIN_PHASE_SAMPLES, m))

def _grid(n):
    return 2 * np.pi * np.arange(n) / n

def averaged_pd(f1, f2, theta_delta, n=4096):
    """Mean of f1(s + theta_delta) f2(s) over one period, on a uniform grid of n points."""
    _check_samples(n)
    f1 = load_waveform_with_type(f1)
    f2 = load_waveform_with_type(f2)

    s = _grid(n)
    return float(np.mean(f1(s + theta_delta) * f2(s)))

def averaged_pd_curve(f1, f2, m, n=4096):
    """averaged_pd on the phase grid theta_j = 2 pi j / m, j = 0..m-1.

    When m divides n the grid shifts are whole sample shifts and the curve is
    one circular cross-correlation, computed with the FFT.
    """
    _check_samples(n, m)
    f1 = load_waveform_with_type(f1)
    f2 = load_waveform_with_type(f2)

    thetas = _grid(m)
    if n % m != 0:
        return thetas, np.array([averaged_pd(f1, f2, theta, n) for theta in thetas])

    s = _grid(n)
    u = f1(s)
    v = f2(s)

    # corr[k] = (1/n) sum_i u[(i + k) mod n] v[i]
    corr = np.fft.ifft(np.fft.fft(u) * np.conj(np.fft.fft(v))).real / n
    return thetas, corr[::n // m]

def fit_sine_gain(f1, f2, m=4096, n=4096):
    """Project the averaged PD characteristic onto sin(theta_delta)."""
    thetas, curve = averaged_pd_curve(f1, f2, m, n)
    return float(2.0 / m * np.sum(curve * np.sin(thetas)))

def two_phase_pd(theta1, theta2):
    # Quadrature mixer: sin(theta1) cos(theta2) - cos(theta1) sin(theta2)
    return np.sin(theta1) * np.cos(theta2) - np.cos(theta1) * np.sin(theta2)

def averaged_two_phase_pd(theta_delta, n=4096):
    _check_samples(n)
    s = _grid(n)
    return float(np.mean(two_phase_pd(s + theta_delta, s)))

def fit_two_phase_gain(m=4096, n=4096):
    _check_samples(n, m)
    thetas = _grid(m)
    curve = np.array([averaged_two_phase_pd(theta, n) for theta in thetas])

    return float(2.0 / m * np.sum(curve * np.sin(thetas)))

def pd_table(m=4096, n=4096):
    """Recovered gains for the tabulated waveform pairs.

    Returns a list of dicts with keys waveform_f1, waveform_f2, kd_recovered, kd_expected.
    """
    rows = []
    for f1, f2, kd_expected in PD_TABLE:
        if f1 == TWO_PHASE:
            kd = fit_two_phase_gain(m, n)
        else:
            kd = fit_sine_gain(f1, f2, m, n)

        logger.debug("PD gain %s x %s: %.6f (expected %.6f)", f1, f2, kd, kd_expected)
        rows.append({
            "waveform_f1":  f1,
            "waveform_f2":  f2,
            "kd_recovered": kd,
            "kd_expected":  kd_expected,
        })

    return rows
