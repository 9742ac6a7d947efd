"""Harmonic analysis on the disk for finite trigonometric series."""

import logging

import numpy as np

from config import Config
from spectral.series import TrigSeries
from utils.errors import InvalidParameter
from utils.helpers import next_power_of_two, require_exponent

log = logging.getLogger("lumer.spectral")


def is_even_integer(p):
    return float(p).is_integer() and int(p) % 2 == 0


def refine(sample, start, tol=None, cap=None, label="quadrature"):
    """Double the node count until two successive values agree.

    ``sample(n)`` returns the quantity (scalar or array) computed on n nodes.
    Stops when max|new - old| <= tol * max(1, max|new|) or when n reaches ``cap``.
    """
    tol = Config.REFINE_TOL if tol is None else tol
    cap = cap or Config.MAX_SAMPLE_COUNT
    n = min(start, cap)
    previous = sample(n)
    while n < cap:
        n *= 2
        current = sample(n)
        change = np.max(np.abs(np.subtract(current, previous)))
        if change <= tol * max(1.0, np.max(np.abs(current))):
            return current
        previous = current
    log.warning(f"⚠️ {label} refinement hit the node cap {cap}; returning last value")
    return previous


def circle_values(series, r, n_nodes):
    """Samples of the harmonic extension on the circle of radius r"""
    padded = series.padded(n_nodes)
    weighted = padded.coeffs * float(r) ** np.abs(padded.modes)
    return np.fft.ifft(weighted) * n_nodes


def exact_node_count(series, p):
    """Node count on which |u_r|^p is integrated exactly, or None when p is not an even integer"""
    if not is_even_integer(p):
        return None
    return max(series.size, next_power_of_two(int(p) * series.degree + 1))


def poisson_extend(series, r, theta):
    """Value of the harmonic extension at r*e^{i theta}"""
    if not 0.0 <= r < 1.0:
        raise InvalidParameter(f"radius must lie in [0, 1), got {r}")
    return complex(series.evaluate_on_circle(theta, r)[0])


def conjugate_series(series, tol=None):
    """Harmonic conjugate normalized by V(0) = 0 (multiplier -i*sgn(n))"""
    series.require_real(tol)
    multiplier = -1j * np.sign(series.modes)
    # the Nyquist cosine has no conjugate on N nodes
    multiplier[series.nyquist_index] = 0.0
    return TrigSeries(series.coeffs * multiplier)


def integral_mean(series, r, p, tol=None):
    """M_p(U, r): the L^p mean of the extension over the circle of radius r"""
    p = require_exponent(p)
    if not 0.0 <= r <= 1.0:
        raise InvalidParameter(f"radius must lie in [0, 1], got {r}")

    def mean_on(n_nodes):
        values = np.abs(circle_values(series, r, n_nodes))
        return float(np.mean(values ** p)) ** (1.0 / p)

    exact = exact_node_count(series, p)
    if exact is not None:
        return mean_on(exact)
    return refine(mean_on, 2 * series.size, tol=tol, label="integral mean")


def hardy_norm(series, p, tol=None):
    """||U||_p; trig polynomials are continuous on the closed disk, so the limit is the value at r = 1"""
    return integral_mean(series, 1.0, p, tol=tol)


def parseval_mean(series, r):
    """(sum |c_n|^2 r^{2|n|})^{1/2}, the p = 2 mean from the coefficients"""
    weights = float(r) ** (2 * np.abs(series.modes))
    return float(np.sqrt(np.sum(np.abs(series.coeffs) ** 2 * weights)))
