import logging
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from config import Config
from conjugate.field import analytic_field, conjugate_on_grid
from grid.field import GridField
from majorant.disk import disk_majorant_value
from majorant.field import DISK_SPECTRAL, disk_majorant, lumer_norm
from majorant.solver import grid_majorant
from riesz.constants import verbitsky_constant
from spectral.circle import conjugate_series, poisson_extend
from spectral.series import TrigSeries
from utils.errors import DegenerateZero, DomainError, DomainMismatch, InvalidParameter
from utils.helpers import format_margin, next_power_of_two, require_exponent

log = logging.getLogger("lumer.riesz")

# evaluation points of the proof-majorant check on the disk
CHECK_RADII = (0.0, 0.25, 0.5, 0.75, 0.9)
CHECK_ANGLES = 32


@dataclass(frozen=True)
class RieszReport:
    """One ratio experiment: ||U + iV|| / ||U|| at zeta0 against c_p."""
    p: float
    norm_u: float
    norm_f: float
    ratio: float
    bound: float
    margin: float
    setting: str
    seed: int | None = None
    zeta0: complex = 0j

    @property
    def theorem_backed(self):
        return self.p == 2.0

    def within_bound(self, tol=None):
        tol = Config.BOUND_TOL if tol is None else tol
        return self.margin >= -tol


class ProofChain(NamedTuple):
    majorant_f: float
    constructive: float
    upper: float


def _report(p, norm_u, norm_f, setting, seed, zeta0):
    if norm_u <= 0.0:
        raise DegenerateZero(f"||U||_{{{p:g}, {zeta0}}} = 0 on {setting}; the ratio is undefined")
    bound = verbitsky_constant(p)
    ratio = norm_f / norm_u
    return RieszReport(
        p=p, norm_u=norm_u, norm_f=norm_f, ratio=ratio, bound=bound,
        margin=bound - ratio, setting=setting, seed=seed, zeta0=complex(zeta0),
    )


def _extend(series, points):
    """Harmonic extension of a series at points of the open disk"""
    points = np.atleast_1d(np.asarray(points, dtype=complex))
    if np.any(np.abs(points) >= 1.0):
        raise DomainError("evaluation points must lie in the open unit disk")
    return np.array([
        series.evaluate_on_circle(np.angle(z), abs(z))[0] for z in points
    ])


def normalized_conjugate(u, zeta0=0.0):
    """Conjugate of a real series shifted so that V(zeta0) = 0"""
    v = conjugate_series(u)
    zeta0 = complex(zeta0)
    if zeta0 == 0:
        return v
    value = poisson_extend(v, abs(zeta0), np.angle(zeta0))
    return v.shift(-value.real)


def analytic_series(u, zeta0=0.0):
    """F = U + iV with V(zeta0) = 0"""
    return u + normalized_conjugate(u, zeta0) * 1j


def _disk_check_points():
    angles = 2 * np.pi * np.arange(CHECK_ANGLES) / CHECK_ANGLES
    return np.concatenate([[0j]] + [r * np.exp(1j * angles) for r in CHECK_RADII if r > 0])


def proof_majorant_check(u, f, h_u, points=None):
    """min of 2 H_U - Re F^2 - |F|^2 over the evaluation nodes.

    Disk inputs (TrigSeries) are checked at ``points`` (a polar sample of the
    disk by default); grid inputs at every interior node.
    """
    if h_u.p != 2.0:
        raise InvalidParameter(f"the constructive majorant needs H_U for p = 2, got p = {h_u.p:g}")
    if isinstance(u, TrigSeries):
        if not isinstance(f, TrigSeries) or h_u.source != DISK_SPECTRAL:
            raise DomainMismatch("disk series checked against a grid majorant")
        points = _disk_check_points() if points is None else np.asarray(points, dtype=complex)
        majorant = h_u.evaluate(points)
        values = _extend(f, points)
    else:
        if not isinstance(f, GridField) or h_u.field is None:
            raise DomainMismatch("grid field checked against a disk majorant")
        u.require_same_domain(f)
        u.require_same_domain(h_u.field)
        interior = u.domain.interior
        majorant = h_u.field.values[interior]
        values = f.values[interior]
    slack = 2 * majorant - np.real(values ** 2) - np.abs(values) ** 2
    worst = float(np.min(slack))
    log.debug(f"Proof majorant slack: worst {worst:.3e} over {slack.size} nodes")
    return worst


def riesz_ratio_disk(u, zeta0=0.0, p=2.0, seed=None):
    """Riesz ratio ||U + iV||_{p,zeta0} / ||U||_{p,zeta0} on the unit disk"""
    p = require_exponent(p)
    u.require_real()
    if u.is_zero():
        raise DegenerateZero("U vanishes identically; the ratio is undefined")
    f = analytic_series(u, zeta0)
    norm_u = lumer_norm(disk_majorant(u, p), zeta0)
    norm_f = lumer_norm(disk_majorant(f, p), zeta0)
    return _report(p, norm_u, norm_f, DISK_SPECTRAL, seed, zeta0)


def riesz_ratio_grid(u, zeta0, p=2.0):
    """Riesz ratio on a grid domain: conjugate, both majorants, norms at zeta0"""
    p = require_exponent(p)
    if u.is_zero():
        raise DegenerateZero(f"U vanishes identically on {u.domain.name}; the ratio is undefined")
    conjugate = conjugate_on_grid(u, zeta0)
    f = analytic_field(u, conjugate)
    norm_u = lumer_norm(grid_majorant(u, p), zeta0)
    norm_f = lumer_norm(grid_majorant(f, p), zeta0)
    report = _report(p, norm_u, norm_f, f"grid:{u.domain.describe()}", None, zeta0)
    log.info(f"✅ Grid ratio on {u.domain.name}: {format_margin(report.ratio, report.bound)}")
    return report


def sharpness_family(n, shift=0.0, size=None):
    """u = Re z^n (+ shift) at zeta0 = 0, p = 2; equality in the bound when shift = 0"""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidParameter(f"sharpness family needs an integer n >= 1, got {n}")
    n = int(n)
    size = max(size or Config.SAMPLE_COUNT, next_power_of_two(4 * (n + 1)))
    u = TrigSeries.from_modes({n: 0.5, -n: 0.5}, size).shift(shift)
    report = riesz_ratio_disk(u, 0.0, 2.0)
    label = f"re(z^{n})" + (f"{shift:+g}" if shift else "")
    return replace(report, setting=f"{DISK_SPECTRAL}:{label}")


def proof_chain(u, zeta0=0.0):
    """(H_F(zeta0), 2 H_U(zeta0) - U(zeta0)^2, 2 H_U(zeta0)) for p = 2 on the disk.

    The chain H_F <= 2 H_U - U^2 <= 2 H_U holds with equality in the first
    link, since 2 H_U - Re F^2 is harmonic on the disk with boundary values |F|^2.
    """
    u.require_real()
    f = analytic_series(u, zeta0)
    h_f = disk_majorant_value(f, 2.0, zeta0)
    h_u = disk_majorant_value(u, 2.0, zeta0)
    u0 = _extend(u, [zeta0])[0].real
    return ProofChain(h_f, 2 * h_u - u0 ** 2, 2 * h_u)
