"""Least harmonic majorants on the unit disk by Poisson integration."""

import logging

import numpy as np

from spectral.circle import circle_values, refine
from spectral.series import circle_nodes
from utils.errors import DomainError
from utils.helpers import require_exponent

log = logging.getLogger("lumer.majorant")


def poisson_kernel(zeta, theta):
    """P(zeta, theta) = (1 - |zeta|^2) / |e^{i theta} - zeta|^2, broadcast over zeta x theta"""
    zeta = np.asarray(zeta, dtype=complex)[..., None]
    return (1.0 - np.abs(zeta) ** 2) / np.abs(np.exp(1j * theta) - zeta) ** 2


def _require_inside(points):
    points = np.atleast_1d(np.asarray(points, dtype=complex))
    if np.any(np.abs(points) >= 1.0):
        raise DomainError(f"evaluation points must lie in the open unit disk, got max |z| = {np.max(np.abs(points))}")
    return points


def disk_majorant_values(u, p, points, tol=None):
    """P[|u|^p] at each point: the least harmonic majorant of |U|^p on the disk"""
    p = require_exponent(p)
    points = _require_inside(points)

    def quadrature(n_nodes):
        boundary = np.abs(circle_values(u, 1.0, n_nodes)) ** p
        return poisson_kernel(points, circle_nodes(n_nodes)) @ boundary / n_nodes

    return refine(quadrature, 2 * u.size, tol=tol, label="Poisson quadrature")


def disk_majorant_value(u, p, zeta0, tol=None):
    """H_U(zeta0) for the disk, by Poisson-kernel quadrature of |u|^p on the circle"""
    return float(disk_majorant_values(u, p, [zeta0], tol=tol)[0])


def harnack_bounds(u, p, zeta, tol=None):
    """(lower, H(zeta)/H(0), upper) with Harnack's constants (1 -+ |z|)/(1 +- |z|)"""
    values = disk_majorant_values(u, p, [0.0, zeta], tol=tol)
    rho = abs(complex(zeta))
    ratio = values[1] / values[0] if values[0] > 0 else float("nan")
    return (1 - rho) / (1 + rho), float(ratio), (1 + rho) / (1 - rho)
