"""Finite Fourier carriers on the unit circle.

Coefficients are stored in numpy FFT order: index k holds mode n = k for
k < N/2 and n = k - N above, so the stored modes are n in [-N/2, N/2).
The n = -N/2 (Nyquist) coefficient stands for a cosine split evenly between
the modes -N/2 and +N/2, which keeps interpolants of real data real.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import Config
from utils.errors import InvalidParameter, NotRealValued
from utils.helpers import is_power_of_two, next_power_of_two

log = logging.getLogger("lumer.spectral")

# coefficients below ROUNDOFF * max(1, max|c_n|) count as zero
ROUNDOFF = 1e-13


def _check_size(n):
    if n < 8 or not is_power_of_two(n):
        raise InvalidParameter(f"sample count must be a power of two >= 8, got {n}")


def circle_nodes(n):
    """Uniform nodes theta_k = 2*pi*k/n"""
    return 2.0 * np.pi * np.arange(n) / n


def _frozen(array):
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class BoundarySamples:
    values: np.ndarray

    def __post_init__(self):
        values = _frozen(np.ravel(self.values))
        _check_size(values.size)
        object.__setattr__(self, "values", values)

    @property
    def size(self):
        return self.values.size

    @property
    def nodes(self):
        return circle_nodes(self.size)

    @classmethod
    def from_function(cls, f, size=None):
        """Sample f(z) at the N-th roots of unity"""
        size = size or Config.SAMPLE_COUNT
        return cls(f(np.exp(1j * circle_nodes(size))))


@dataclass(frozen=True, eq=False)
class TrigSeries:
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = _frozen(np.ravel(self.coeffs))
        _check_size(coeffs.size)
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction -----------------------------------------------------

    @classmethod
    def zeros(cls, size=None):
        return cls(np.zeros(size or Config.SAMPLE_COUNT, dtype=complex))

    @classmethod
    def constant(cls, value, size=None):
        return cls.from_modes({0: value}, size)

    @classmethod
    def from_modes(cls, modes, size=None):
        """Build a series from a mapping {n: c_n}"""
        size = size or Config.SAMPLE_COUNT
        _check_size(size)
        coeffs = np.zeros(size, dtype=complex)
        for n, c in modes.items():
            if not -size // 2 <= n < size // 2:
                raise InvalidParameter(f"mode {n} does not fit in {size} samples")
            coeffs[n % size] += c
        return cls(coeffs)

    @classmethod
    def from_function(cls, f, size=None):
        """Trigonometric interpolant of f on the unit circle"""
        return analyze(BoundarySamples.from_function(f, size))

    # -- structure --------------------------------------------------------

    @property
    def size(self):
        return self.coeffs.size

    @property
    def modes(self):
        return np.fft.fftfreq(self.size, d=1.0 / self.size).astype(int)

    @property
    def nyquist_index(self):
        return self.size // 2

    def coefficient(self, n):
        if not -self.size // 2 <= n < self.size // 2:
            raise InvalidParameter(f"mode {n} outside [-{self.size // 2}, {self.size // 2})")
        return complex(self.coeffs[n % self.size])

    def active_indices(self):
        """Storage indices of the coefficients above round-off"""
        magnitude = np.abs(self.coeffs)
        scale = max(1.0, float(magnitude.max(initial=0.0)))
        return np.flatnonzero(magnitude > ROUNDOFF * scale)

    @property
    def degree(self):
        nonzero = self.active_indices()
        if nonzero.size == 0:
            return 0
        return int(np.max(np.abs(self.modes[nonzero])))

    def is_zero(self):
        return self.active_indices().size == 0

    def symmetry_violation(self):
        """max |c_n - conj(c_-n)|; zero for real-valued functions"""
        mirror = self.coeffs[(-np.arange(self.size)) % self.size]
        return float(np.max(np.abs(self.coeffs - np.conj(mirror))))

    def is_real(self, tol=None):
        tol = Config.REAL_TOL if tol is None else tol
        return self.symmetry_violation() <= tol

    def require_real(self, tol=None):
        tol = Config.REAL_TOL if tol is None else tol
        violation = self.symmetry_violation()
        if violation > tol:
            raise NotRealValued(violation, tol)
        return self

    # -- evaluation -------------------------------------------------------

    def evaluate_on_circle(self, theta, r=1.0):
        """Sum c_n r^|n| e^{in theta} at arbitrary angles (vectorized over theta)"""
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        active = self.active_indices()
        if active.size == 0:
            return np.zeros(theta.shape, dtype=complex)
        modes = self.modes[active]
        weighted = self.coeffs[active] * float(r) ** np.abs(modes)
        basis = np.exp(1j * np.multiply.outer(theta, modes))
        is_nyquist = active == self.nyquist_index
        if np.any(is_nyquist):
            basis[..., is_nyquist] = np.cos(np.multiply.outer(theta, -modes[is_nyquist]))
        return basis @ weighted

    def padded(self, size):
        """The same trigonometric polynomial carried on a finer node set"""
        if size == self.size:
            return self
        _check_size(size)
        if size < self.size:
            raise InvalidParameter(f"cannot pad {self.size} coefficients down to {size}")
        coeffs = np.zeros(size, dtype=complex)
        modes = self.modes
        half = self.size // 2
        regular = modes != -half
        coeffs[modes[regular] % size] = self.coeffs[regular]
        nyquist = self.coeffs[self.nyquist_index]
        coeffs[-half % size] += nyquist / 2
        coeffs[half % size] += nyquist / 2
        return TrigSeries(coeffs)

    # -- arithmetic -------------------------------------------------------

    def _aligned(self, other):
        size = max(self.size, other.size)
        return self.padded(size).coeffs, other.padded(size).coeffs

    def __add__(self, other):
        if isinstance(other, TrigSeries):
            a, b = self._aligned(other)
            return TrigSeries(a + b)
        return self.shift(other)

    __radd__ = __add__

    def __neg__(self):
        return TrigSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, TrigSeries):
            return NotImplemented
        return TrigSeries(self.coeffs * scalar)

    __rmul__ = __mul__

    def shift(self, value):
        coeffs = self.coeffs.copy()
        coeffs[0] += value
        return TrigSeries(coeffs)

    @property
    def real_part(self):
        mirror = self.coeffs[(-np.arange(self.size)) % self.size]
        return TrigSeries((self.coeffs + np.conj(mirror)) / 2)

    def __repr__(self):
        return f"TrigSeries(size={self.size}, degree={self.degree})"


def analyze(samples):
    """Discrete Fourier analysis: the exact trigonometric interpolant of the samples"""
    if not isinstance(samples, BoundarySamples):
        samples = BoundarySamples(samples)
    return TrigSeries(np.fft.fft(samples.values) / samples.size)


def synthesize(series):
    """Values of the series at the nodes 2*pi*k/N"""
    return BoundarySamples(np.fft.ifft(series.coeffs) * series.size)


def random_real_series(rng, degree, size=None):
    """Real trig polynomial with independent standard-normal cos/sin coefficients.

    u = a_0 + sum_{n=1}^{degree} (a_n cos n*theta + b_n sin n*theta)
    """
    if degree < 0:
        raise InvalidParameter(f"degree must be >= 0, got {degree}")
    size = max(size or Config.SAMPLE_COUNT, next_power_of_two(4 * (degree + 1)), 8)
    a0 = rng.standard_normal()
    a = rng.standard_normal(degree)
    b = rng.standard_normal(degree)
    coeffs = np.zeros(size, dtype=complex)
    coeffs[0] = a0
    if degree:
        n = np.arange(1, degree + 1)
        coeffs[n] = (a - 1j * b) / 2
        coeffs[-n] = (a + 1j * b) / 2
    return TrigSeries(coeffs)
