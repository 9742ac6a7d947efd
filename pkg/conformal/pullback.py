import logging
from typing import NamedTuple

import numpy as np

from config import Config
from conformal.maps import Identity, automorphism_to, domain_contains
from majorant.field import disk_majorant, lumer_norm
from riesz.engine import riesz_ratio_disk
from spectral.circle import refine
from spectral.series import TrigSeries
from utils.errors import DomainError, InvalidParameter
from utils.helpers import require_exponent

log = logging.getLogger("lumer.conformal")


class IsometryCheck(NamedTuple):
    norm_before: float
    norm_after: float
    discrepancy: float
    zeta_tilde: complex


class TransportedRatio(NamedTuple):
    direct: float
    transported: float
    discrepancy: float


def harmonic_evaluator(series):
    """z -> harmonic extension of the series at z, for |z| <= 1"""

    def evaluate(z):
        z = np.asarray(z, dtype=complex)
        flat = np.atleast_1d(z).ravel()
        values = np.array([series.evaluate_on_circle(np.angle(w), abs(w))[0] for w in flat])
        return values.reshape(z.shape) if z.shape else values[0]

    return evaluate


def pullback(u, conformal_map):
    """U o Phi as an evaluator on the map's source domain"""
    if isinstance(u, TrigSeries):
        if conformal_map.target != "disk":
            raise DomainError(f"a disk series cannot be pulled back through a map onto {conformal_map.target}")
        u = harmonic_evaluator(u)

    def pulled(z):
        z = np.asarray(z, dtype=complex)
        if not np.all(domain_contains(conformal_map.source, z)):
            raise DomainError(f"points outside the {conformal_map.source} where the pullback is defined")
        return u(conformal_map.forward(z))

    return pulled


def boundary_pullback(u, conformal_map, size):
    """Trigonometric interpolant of u o Phi on the unit circle, for disk automorphisms"""
    return TrigSeries.from_function(
        lambda z: u.evaluate_on_circle(np.angle(conformal_map.forward(z))),
        size,
    ).real_part


def _require_automorphism(conformal_map):
    if not conformal_map.is_disk_automorphism:
        raise InvalidParameter(
            f"{conformal_map.kind} maps {conformal_map.source} onto {conformal_map.target}; "
            "disk norms need a disk automorphism"
        )


def isometry_check(u, conformal_map, zeta0, p, n_samples=None, tol=None):
    """Lumer norms of u at zeta0 and of u o Phi at Phi^{-1}(zeta0), with their discrepancy"""
    p = require_exponent(p)
    _require_automorphism(conformal_map)
    u.require_real()
    zeta0 = complex(zeta0)
    zeta_tilde = complex(conformal_map.inverse(zeta0))
    before = lumer_norm(disk_majorant(u, p), zeta0)
    if isinstance(conformal_map, Identity):
        return IsometryCheck(before, before, 0.0, zeta_tilde)

    def norm_after(size):
        pulled = boundary_pullback(u, conformal_map, size)
        return lumer_norm(disk_majorant(pulled, p), zeta_tilde)

    start = max(n_samples or Config.SAMPLE_COUNT, u.size)
    after = float(refine(norm_after, start, tol=tol, label="pullback norm"))
    discrepancy = abs(after - before)
    log.debug(f"Isometry under {conformal_map.kind}: {before:.15f} vs {after:.15f} ({discrepancy:.2e})")
    return IsometryCheck(before, after, discrepancy, zeta_tilde)


def transported_ratio(u, zeta0, p=2.0, n_samples=None):
    """Riesz ratio at zeta0 against the ratio at 0 of the pullback by an automorphism with Phi(0) = zeta0"""
    p = require_exponent(p)
    u.require_real()
    conformal_map = automorphism_to(0.0, zeta0)
    size = max(n_samples or 8 * Config.SAMPLE_COUNT, u.size)
    direct = riesz_ratio_disk(u, zeta0, p).ratio
    transported = riesz_ratio_disk(boundary_pullback(u, conformal_map, size), 0.0, p).ratio
    return TransportedRatio(direct, transported, abs(direct - transported))


def discrete_laplacian(func, points, h):
    """5-point Laplacian of an evaluator at sample points"""
    points = np.asarray(points, dtype=complex)
    if h <= 0:
        raise InvalidParameter(f"stencil spacing must be positive, got {h}")
    total = func(points + h) + func(points - h) + func(points + 1j * h) + func(points - 1j * h)
    return (total - 4 * func(points)) / h ** 2
