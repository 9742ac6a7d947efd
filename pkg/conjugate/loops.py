"""Lattice paths, line integrals of the conjugate differential, and hole loops.

The conjugate differential of U is  -U_y dx + U_x dy; a lattice edge of
length h contributes the trapezoid average of its endpoint values.
"""

import logging

import numpy as np
from scipy import ndimage

from conjugate.gradient import grid_gradient
from utils.errors import DomainError

log = logging.getLogger("lumer.conjugate")

SQUARE = np.ones((3, 3), dtype=bool)


def edge_increment(ux, uy, h, a, b):
    """Trapezoid integral of -U_y dx + U_x dy over the lattice edge a -> b"""
    di, dj = b[0] - a[0], b[1] - a[1]
    if dj:
        return -(uy[a] + uy[b]) / 2 * dj * h
    return (ux[a] + ux[b]) / 2 * di * h


def _check_path(domain, path, require_interior):
    allowed = domain.interior if require_interior else domain.mask
    ny, nx = domain.mask.shape
    for i, j in path:
        if not (0 <= i < ny and 0 <= j < nx and allowed[i, j]):
            where = "interior" if require_interior else "domain"
            raise DomainError(f"path node {(i, j)} leaves the {where}")
    steps = np.abs(np.diff(np.asarray(path), axis=0)).sum(axis=1)
    if np.any(steps != 1):
        raise DomainError("consecutive path nodes must be lattice neighbours")


def integrate_path(u, path, gradient=None, require_interior=True):
    """Line integral of the conjugate differential along a lattice path"""
    path = [tuple(int(k) for k in node) for node in path]
    if len(path) < 2:
        return 0.0
    _check_path(u.domain, path, require_interior)
    ux, uy = gradient or grid_gradient(u)
    h = u.domain.h
    return float(sum(
        edge_increment(ux.values, uy.values, h, a, b) for a, b in zip(path, path[1:])
    ))


def period_around_hole(u, loop, gradient=None):
    """Circulation of the conjugate differential around a closed lattice loop"""
    loop = [tuple(int(k) for k in node) for node in loop]
    if len(loop) < 5 or loop[0] != loop[-1]:
        raise DomainError("period loop must be a closed lattice path (first node == last node)")
    return integrate_path(u, loop, gradient=gradient, require_interior=True)


def loop_length(domain, loop):
    return (len(loop) - 1) * domain.h


def _boundary_edges(cells):
    """Directed boundary edges of a union of lattice cells, counterclockwise"""
    padded = np.pad(cells, 1, constant_values=False)
    out = {}

    def add(a, b):
        out.setdefault(a, []).append(b)

    # horizontal edge (i, j)-(i, j+1): bottom of cell (i, j), top of cell (i-1, j)
    above = padded[1:, 1:-1]
    below = padded[:-1, 1:-1]
    for i, j in zip(*np.nonzero(above & ~below)):
        add((i, j), (i, j + 1))
    for i, j in zip(*np.nonzero(below & ~above)):
        add((i, j + 1), (i, j))
    # vertical edge (i, j)-(i+1, j): right of cell (i, j-1), left of cell (i, j)
    left = padded[1:-1, :-1]
    right = padded[1:-1, 1:]
    for i, j in zip(*np.nonzero(left & ~right)):
        add((i, j), (i + 1, j))
    for i, j in zip(*np.nonzero(right & ~left)):
        add((i + 1, j), (i, j))
    return out


def _closed_walk(out_edges):
    """Closed walk using every directed edge once (Hierholzer), deterministic"""
    out_edges = {node: sorted(targets, reverse=True) for node, targets in out_edges.items()}
    start = min(out_edges)
    stack, walk = [start], []
    while stack:
        node = stack[-1]
        if out_edges.get(node):
            stack.append(out_edges[node].pop())
        else:
            walk.append(stack.pop())
    return [(int(i), int(j)) for i, j in walk[::-1]]


def _loop_around(domain, hole):
    touching_hole = hole[:-1, :-1] | hole[1:, :-1] | hole[:-1, 1:] | hole[1:, 1:]
    other_exterior = ~domain.mask & ~hole
    for grow in range(max(domain.mask.shape)):
        cells = ndimage.binary_dilation(touching_hole, SQUARE, iterations=grow) if grow else touching_hole
        cells = ndimage.binary_fill_holes(cells)
        corners = np.zeros(domain.mask.shape, dtype=bool)
        for di in (0, 1):
            for dj in (0, 1):
                corners[di:di + cells.shape[0], dj:dj + cells.shape[1]] |= cells
        if np.any(corners & other_exterior):
            break
        edges = _boundary_edges(cells)
        nodes = set(edges) | {b for targets in edges.values() for b in targets}
        if all(domain.interior[node] for node in nodes):
            return _closed_walk(edges)
    raise DomainError(f"{domain.name}: no lattice loop in the interior encircles a hole")


def hole_loops(domain):
    """One counterclockwise interior lattice cycle per hole, innermost first found"""
    loops = [_loop_around(domain, hole) for hole in domain.holes]
    if loops:
        log.debug(f"Extracted {len(loops)} hole loop(s) on {domain.name}")
    return loops
