import logging

import numpy as np

from grid.domain import neighbour
from grid.field import GridField

log = logging.getLogger("lumer.conjugate")


def _axis_derivative(values, mask, h, di, dj):
    """Derivative along the lattice direction (di, dj).

    Central where both neighbours are mask nodes, second-order one-sided where
    two nodes exist on one side, first-order one-sided with a single node,
    zero when the node has no neighbour along the axis.
    """
    f = np.nan_to_num(values)
    ahead1, ahead2 = neighbour(mask, di, dj), neighbour(mask, 2 * di, 2 * dj)
    behind1, behind2 = neighbour(mask, -di, -dj), neighbour(mask, -2 * di, -2 * dj)
    fa1, fa2 = neighbour(f, di, dj, 0.0), neighbour(f, 2 * di, 2 * dj, 0.0)
    fb1, fb2 = neighbour(f, -di, -dj, 0.0), neighbour(f, -2 * di, -2 * dj, 0.0)
    return np.select(
        [
            ahead1 & behind1,
            ahead1 & ahead2,
            behind1 & behind2,
            ahead1,
            behind1,
        ],
        [
            (fa1 - fb1) / (2 * h),
            (-3 * f + 4 * fa1 - fa2) / (2 * h),
            (3 * f - 4 * fb1 + fb2) / (2 * h),
            (fa1 - f) / h,
            (f - fb1) / h,
        ],
        default=0.0,
    )


def grid_gradient(u):
    """(dU/dx, dU/dy) on every mask node of u's domain"""
    domain = u.domain
    mask = domain.mask
    ux = np.where(mask, _axis_derivative(u.values, mask, domain.h, 0, 1), 0.0)
    uy = np.where(mask, _axis_derivative(u.values, mask, domain.h, 1, 0), 0.0)
    return GridField(domain, ux), GridField(domain, uy)


def cauchy_riemann_defect(u, v):
    """max over interior nodes of |v_x + u_y| and |v_y - u_x|"""
    u.require_same_domain(v)
    ux, uy = grid_gradient(u)
    vx, vy = grid_gradient(v)
    interior = u.domain.interior
    first = np.abs(vx.values + uy.values)[interior]
    second = np.abs(vy.values - ux.values)[interior]
    return float(max(first.max(), second.max()))
