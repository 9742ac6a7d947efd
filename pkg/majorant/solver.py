"""Discrete Dirichlet solve for harmonic majorants on grid domains.

Rows are normalized so the diagonal is 1: for a node with arm lengths
a (plus side) and b (minus side) along each axis the 5-point Laplacian
weights are 2/(a(a+b)) and 2/(b(a+b)).  On plain masks every arm has
length h and boundary nodes carry the Dirichlet data (staircase scheme).
On builtin domains an arm that leaves the mask is shortened to the exact
boundary crossing, which carries the data (Shortley-Weller scheme).
"""

import logging

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import LinearOperator, bicgstab, spilu

from config import Config
from grid.domain import DIRECTIONS, neighbour
from grid.field import GridField
from majorant.field import GRID, MajorantField
from utils.errors import SolverDivergence
from utils.helpers import require_exponent

log = logging.getLogger("lumer.majorant")

OPPOSITE = (1, 0, 3, 2)
MIN_ARM_FRACTION = 1e-12

STAIRCASE = "staircase"
SHORTLEY_WELLER = "shortley-weller"
CONSTANT = "constant"


def _assemble(domain, data, trace):
    """Sparse system A x = b over the unknown nodes, plus the unknown mask"""
    geometry_aware = trace is not None
    unknown = domain.mask if geometry_aware else domain.interior
    count = int(unknown.sum())
    index = np.full(domain.mask.shape, -1, dtype=int)
    index[unknown] = np.arange(count)

    lengths = np.full((4, *domain.mask.shape), domain.h)
    known = np.full((4, *domain.mask.shape), np.nan)
    if geometry_aware:
        arms = domain.cut_arms
        fractions = np.maximum(arms.fractions, MIN_ARM_FRACTION)
        lengths[arms.directions, arms.rows, arms.cols] = fractions * domain.h
        known[arms.directions, arms.rows, arms.cols] = trace
    else:
        for d, (di, dj) in enumerate(DIRECTIONS):
            on_boundary = neighbour(domain.boundary, di, dj, False)
            known[d] = np.where(on_boundary, neighbour(data, di, dj, np.nan), np.nan)

    coeff = 2.0 / (lengths * (lengths + lengths[list(OPPOSITE)]))
    weight = coeff / coeff.sum(axis=0)

    rows = [np.arange(count)]
    cols = [np.arange(count)]
    vals = [np.ones(count)]
    rhs = np.zeros(count)
    for d, (di, dj) in enumerate(DIRECTIONS):
        w = weight[d][unknown]
        value = known[d][unknown]
        is_known = ~np.isnan(value)
        rhs += np.where(is_known, w * np.nan_to_num(value), 0.0)
        linked = neighbour(index, di, dj, -1)[unknown]
        link = ~is_known
        rows.append(np.flatnonzero(link))
        cols.append(linked[link])
        vals.append(-w[link])

    matrix = sparse.csr_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(count, count),
    )
    return matrix, rhs, unknown


def solve_dirichlet(matrix, rhs, tol=None, maxiter=None):
    """BiCGSTAB from a zero start, ILU-preconditioned; returns (x, residual, iterations)"""
    tol = Config.SOLVER_TOL if tol is None else tol
    maxiter = maxiter or Config.SOLVER_MAXITER
    iterations = 0

    def count(_):
        nonlocal iterations
        iterations += 1

    ilu = spilu(matrix.tocsc())
    preconditioner = LinearOperator(matrix.shape, ilu.solve)
    x, info = bicgstab(
        matrix, rhs, x0=np.zeros_like(rhs), rtol=tol, atol=0.0,
        maxiter=maxiter, M=preconditioner, callback=count,
    )
    rhs_norm = np.linalg.norm(rhs)
    defect = np.linalg.norm(rhs - matrix @ x)
    residual = defect / rhs_norm if rhs_norm > 0 else defect
    if info != 0:
        log.error(f"❌ Dirichlet solve stopped: info={info}, residual={residual:.3e}")
        raise SolverDivergence(residual, iterations, tol)
    log.debug(f"Dirichlet solve: {matrix.shape[0]} unknowns, {iterations} iterations, residual {residual:.3e}")
    return x, float(residual), iterations


def grid_majorant(u, p, tol=None, maxiter=None):
    """Least harmonic majorant of |u|^p on u's grid domain (Dirichlet solution with data |u|^p)"""
    p = require_exponent(p)
    domain = u.domain
    data = np.abs(u.values) ** p
    trace = np.abs(u.trace) ** p if u.has_trace else None
    scheme = SHORTLEY_WELLER if trace is not None else STAIRCASE
    dirichlet = trace if trace is not None else data[domain.boundary]

    if np.ptp(dirichlet) == 0.0:
        value = float(dirichlet[0])
        field = GridField(domain, np.full(domain.mask.shape, value), trace)
        return MajorantField(p, GRID, field=field, scheme=CONSTANT)

    matrix, rhs, unknown = _assemble(domain, data, trace)
    x, residual, iterations = solve_dirichlet(matrix, rhs, tol=tol, maxiter=maxiter)

    values = np.where(domain.mask, data, 0.0)
    values[unknown] = x
    field = GridField(domain, values, trace)
    log.info(f"✅ Majorant on {domain.describe()} ({scheme}, p={p:g}): residual {residual:.2e}")
    return MajorantField(
        p, GRID, residual=residual, field=field, scheme=scheme,
        iterations=iterations, rhs_norm=float(np.linalg.norm(rhs)),
    )


def harmonicity_defect(majorant):
    """max over interior nodes of |H - mean of the four neighbours|, relative to max(1, |b|)"""
    field = majorant.field
    values = np.nan_to_num(field.values)
    interior = field.domain.interior
    average = sum(neighbour(values, di, dj, 0.0) for di, dj in DIRECTIONS) / 4.0
    defect = np.max(np.abs(values - average)[interior])
    return float(defect / max(1.0, majorant.rhs_norm))
