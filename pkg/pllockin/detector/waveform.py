# External imports
import numpy as np

from abc import ABC, abstractmethod

__all__ = ["Waveform", "Sine", "Cosine", "SquareOfCosine", "Triangle", "load_waveform_with_type",
           "waveform_eval", "WAVEFORM_TYPES"]

class Waveform(ABC):
    """2pi-periodic real signal waveform evaluated as a function of phase."""

    @abstractmethod
    def type(self):
        pass

    @abstractmethod
    def __call__(self, theta):
        pass

    def __eq__(self, other):
        return isinstance(other, Waveform) and self.type() == other.type()

    def __hash__(self):
        return hash(self.type())

    def __repr__(self):
        return "{}()".format(self.__class__.__name__)

class Sine(Waveform):
    def type(self):
        return "sine"

    def __call__(self, theta):
        return np.sin(theta)

class Cosine(Waveform):
    def type(self):
        return "cosine"

    def __call__(self, theta):
        return np.cos(theta)

class SquareOfCosine(Waveform):
    # sign(cos(theta)); takes the midpoint value 0 on the jumps
    def type(self):
        return "square_of_cosine"

    def __call__(self, theta):
        return np.sign(np.cos(theta))

class Triangle(Waveform):
    """Piecewise-linear waveform on two branches:

        f(theta) = (2/pi) theta + 1,  theta in [0, pi]
        f(theta) = 1 - (2/pi) theta,  theta in (pi, 2pi)

    extended 2pi-periodically. These branches do not join continuously
    (f(0+) = 1, f(2pi-) = -3, f(pi) = 3, f(pi+) = -1), so unlike the other
    kinds the values span [-3, 3].
    """
    def type(self):
        return "triangle"

    def __call__(self, theta):
        phi = np.mod(theta, 2 * np.pi)
        return np.where(phi <= np.pi, 2 / np.pi * phi + 1, 1 - 2 / np.pi * phi)

WAVEFORM_TYPES = {
    "sine":             Sine,
    "cosine":           Cosine,
    "square_of_cosine": SquareOfCosine,
    "triangle":         Triangle,
}

def load_waveform_with_type(kind):
    if isinstance(kind, Waveform):
        return kind

    key = str(kind).lower().replace("-", "_")
    if key not in WAVEFORM_TYPES:
        raise ValueError("unknown waveform kind: {!r}".format(kind))

    return WAVEFORM_TYPES[key]()

def waveform_eval(w, theta):
    value = load_waveform_with_type(w)(theta)
    if np.ndim(value) == 0:
        return float(value)
    return value
