import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

from config import Config
from conjugate.gradient import grid_gradient
from conjugate.loops import edge_increment, hole_loops, loop_length, period_around_hole
from grid.domain import DIRECTIONS
from grid.field import GridField
from utils.errors import DomainError, ExistenceFailure

log = logging.getLogger("lumer.conjugate")

# neighbour visiting order: lexicographic in (i, j)
BFS_ORDER = ((-1, 0), (0, -1), (0, 1), (1, 0))


@dataclass(frozen=True, eq=False)
class ConjugateResult:
    v: GridField
    periods: tuple
    zeta0: complex
    tolerances: tuple = ()


def period_tolerance(domain, loop, max_gradient):
    """max(floor, factor * h^2 * loop length * max |grad u|)"""
    scaled = Config.PERIOD_FACTOR * domain.h ** 2 * loop_length(domain, loop) * max_gradient
    return max(Config.PERIOD_FLOOR, scaled)


def measure_periods(u, gradient=None):
    """[(period, tolerance), ...] for every hole of u's domain"""
    ux, uy = gradient or grid_gradient(u)
    interior = u.domain.interior
    max_gradient = float(np.max(np.hypot(ux.values, uy.values)[interior]))
    measured = []
    for loop in hole_loops(u.domain):
        period = period_around_hole(u, loop, gradient=(ux, uy))
        measured.append((period, period_tolerance(u.domain, loop, max_gradient)))
    return measured


def _integrate_tree(domain, ux, uy, root):
    """Breadth-first integration of the conjugate differential from root over all mask nodes"""
    mask = domain.mask
    ny, nx = mask.shape
    v = np.zeros(mask.shape)
    seen = np.zeros(mask.shape, dtype=bool)
    seen[root] = True
    queue = deque([root])
    while queue:
        node = queue.popleft()
        i, j = node
        for di, dj in BFS_ORDER:
            child = (i + di, j + dj)
            if not (0 <= child[0] < ny and 0 <= child[1] < nx):
                continue
            if seen[child] or not mask[child]:
                continue
            v[child] = v[node] + edge_increment(ux, uy, domain.h, node, child)
            seen[child] = True
            queue.append(child)
    return v


def _extend_to_crossings(domain, v, ux, uy):
    """First-order step from each cut-arm node to its boundary crossing"""
    arms = domain.cut_arms
    di = np.array([DIRECTIONS[d][0] for d in arms.directions])
    dj = np.array([DIRECTIONS[d][1] for d in arms.directions])
    step = arms.fractions * domain.h
    slope = -uy[arms.rows, arms.cols] * dj + ux[arms.rows, arms.cols] * di
    return v[arms.rows, arms.cols] + step * slope


def conjugate_on_grid(u, zeta0):
    """Harmonic conjugate V of u with V(zeta0) = 0, or ExistenceFailure if a period is non-zero"""
    domain = u.domain
    zeta0 = complex(zeta0)
    if not domain.contains(zeta0, interior=True):
        raise DomainError(f"normalization point {zeta0} lies outside the interior of {domain.name}")

    ux, uy = grid_gradient(u)
    measured = measure_periods(u, gradient=(ux, uy))
    for k, (period, tolerance) in enumerate(measured):
        if abs(period) > tolerance:
            log.info(f"No conjugate on {domain.name}: period {period:.6g} around hole {k} (tolerance {tolerance:.2e})")
            raise ExistenceFailure(period, tolerance, loop_index=k)

    root = domain.nearest_node(zeta0)
    v = _integrate_tree(domain, ux.values, uy.values, root)
    shift = GridField(domain, v).at(zeta0)
    v = v - shift

    trace = None
    if u.has_trace:
        trace = _extend_to_crossings(domain, v, ux.values, uy.values)
    result = GridField(domain, v, trace)
    log.debug(f"Conjugate on {domain.describe()} normalized at {zeta0} (shift {shift:.3e})")
    return ConjugateResult(
        v=result,
        periods=tuple(period for period, _ in measured),
        zeta0=zeta0,
        tolerances=tuple(tolerance for _, tolerance in measured),
    )


def analytic_field(u, conjugate):
    """F = U + iV as a complex GridField (traces combined when both exist)"""
    return u.combine(conjugate.v, lambda a, b: a + 1j * b)
