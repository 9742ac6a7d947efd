"""Mask-based discretization of a plane domain.

Node (i, j) sits at x = x0 + j*h, y = y0 + i*h.  A mask node is interior
when its four lattice neighbours are mask nodes too; the remaining mask
nodes form the boundary.  Builtin domains also keep their exact shape, and
for them every lattice arm from a mask node to a non-mask neighbour is a
"cut arm" whose crossing with the true boundary is precomputed.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np
from scipy import ndimage

from config import Config
from grid.geometry import Annulus, Disk, Shape, Square
from utils.errors import DomainError, SpecParseError
from utils.helpers import parse_number

log = logging.getLogger("lumer.grid")

# (di, dj): east, west, north, south
DIRECTIONS = ((0, 1), (0, -1), (1, 0), (-1, 0))
FOUR_CONNECTED = ndimage.generate_binary_structure(2, 1)
SNAP = 1e-9


@dataclass(frozen=True)
class CutArms:
    """Lattice arms leaving the domain, one entry per (mask node, direction)"""
    rows: np.ndarray
    cols: np.ndarray
    directions: np.ndarray
    fractions: np.ndarray
    points: np.ndarray

    def __len__(self):
        return self.rows.size


def neighbour(array, di, dj, fill=False):
    """Value of the (di, dj) neighbour at every node, ``fill`` off the array"""
    k = max(abs(di), abs(dj), 1)
    padded = np.pad(array, k, constant_values=fill)
    ny, nx = array.shape
    return padded[k + di:k + di + ny, k + dj:k + dj + nx]


@dataclass(frozen=True, eq=False)
class GridDomain:
    mask: np.ndarray
    h: float
    anchor: complex = 0j
    shape: Shape | None = None
    name: str = field(default="mask")

    def __post_init__(self):
        mask = np.array(self.mask, dtype=bool)
        if mask.ndim != 2:
            raise DomainError(f"mask must be two-dimensional, got shape {mask.shape}")
        if not (self.h > 0 and math.isfinite(self.h)):
            raise DomainError(f"lattice spacing must be positive, got {self.h}")
        mask.setflags(write=False)
        object.__setattr__(self, "mask", mask)
        object.__setattr__(self, "anchor", complex(self.anchor))
        self._validate()

    def _validate(self):
        interior = self.interior
        if not interior.any():
            raise DomainError(f"{self.name}: mask has no interior nodes")
        _, components = ndimage.label(interior, structure=FOUR_CONNECTED)
        if components != 1:
            raise DomainError(f"{self.name}: interior has {components} components, expected 1")
        _, mask_components = ndimage.label(self.mask, structure=FOUR_CONNECTED)
        if mask_components != 1:
            raise DomainError(f"{self.name}: mask has {mask_components} edge-connected components")

    # -- builtin generators ------------------------------------------------

    @classmethod
    def from_shape(cls, shape, h=None):
        h = h or Config.GRID_SPACING
        n = math.ceil(shape.extent() / h) + 1
        anchor = complex(-n * h, -n * h)
        ticks = np.arange(-n, n + 1) * h
        x, y = np.meshgrid(ticks, ticks)
        mask = shape.contains(x + 1j * y)
        domain = cls(mask, h, anchor, shape=shape, name=shape.describe())
        log.debug(f"Built {domain.describe()} with {int(mask.sum())} nodes")
        return domain

    @classmethod
    def disk(cls, radius=1.0, h=None):
        return cls.from_shape(Disk(radius), h)

    @classmethod
    def annulus(cls, inner=0.5, outer=1.5, h=None):
        if not 0 < inner < outer:
            raise DomainError(f"annulus radii must satisfy 0 < r < R, got {inner}, {outer}")
        return cls.from_shape(Annulus(inner, outer), h)

    @classmethod
    def square(cls, side=2.0, h=None):
        return cls.from_shape(Square(side), h)

    # -- mask files --------------------------------------------------------

    @classmethod
    def from_text(cls, text, name="mask"):
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise SpecParseError("empty mask file")
        header = {}
        for token in lines[0].split():
            key, sep, value = token.partition("=")
            if not sep:
                raise SpecParseError(f"bad header token {token!r}; expected key=value")
            header[key] = parse_number(value)
        missing = {"h", "x0", "y0"} - header.keys()
        if missing:
            raise SpecParseError(f"mask header is missing {sorted(missing)}")
        rows = lines[1:]
        if not rows or any(set(row) - {"0", "1"} for row in rows):
            raise SpecParseError("mask rows must consist of 0/1 characters")
        if len({len(row) for row in rows}) != 1:
            raise SpecParseError("mask rows have different lengths")
        mask = np.array([[char == "1" for char in row] for row in rows], dtype=bool)
        return cls(mask, header["h"], complex(header["x0"], header["y0"]), name=name)

    @classmethod
    def from_file(cls, path):
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise SpecParseError(f"cannot read mask file {path}: {e}") from e
        return cls.from_text(text, name=path.name)

    def to_text(self):
        header = f"h={self.h!r} x0={self.anchor.real!r} y0={self.anchor.imag!r}"
        rows = ["".join("1" if cell else "0" for cell in row) for row in self.mask]
        return "\n".join([header, *rows]) + "\n"

    # -- node classification -----------------------------------------------

    @cached_property
    def interior(self):
        interior = self.mask.copy()
        for di, dj in DIRECTIONS:
            interior &= neighbour(self.mask, di, dj)
        interior.setflags(write=False)
        return interior

    @cached_property
    def boundary(self):
        boundary = self.mask & ~self.interior
        boundary.setflags(write=False)
        return boundary

    @property
    def exterior(self):
        return ~self.mask

    @cached_property
    def points(self):
        ny, nx = self.mask.shape
        j = np.arange(nx)
        i = np.arange(ny)
        return (self.anchor.real + j[None, :] * self.h) + 1j * (self.anchor.imag + i[:, None] * self.h)

    def node_point(self, i, j):
        return complex(self.anchor.real + j * self.h, self.anchor.imag + i * self.h)

    @property
    def node_count(self):
        return int(self.mask.sum())

    def describe(self):
        return f"{self.name} h={self.h:g} nodes={self.node_count}"

    # -- exact-boundary crossings ------------------------------------------

    @cached_property
    def cut_arms(self):
        """Crossings of lattice arms with the exact boundary (None for plain masks)"""
        if self.shape is None:
            return None
        rows, cols, dirs, fracs, points = [], [], [], [], []
        for d, (di, dj) in enumerate(DIRECTIONS):
            leaving = self.mask & ~neighbour(self.mask, di, dj)
            for i, j in zip(*np.nonzero(leaving)):
                start = self.node_point(i, j)
                end = self.node_point(i + di, j + dj)
                t = self.shape.crossing(start, end)
                rows.append(i)
                cols.append(j)
                dirs.append(d)
                fracs.append(t)
                points.append(start + t * (end - start))
        return CutArms(
            np.array(rows, dtype=int),
            np.array(cols, dtype=int),
            np.array(dirs, dtype=int),
            np.array(fracs, dtype=float),
            np.array(points, dtype=complex),
        )

    # -- holes ---------------------------------------------------------------

    @cached_property
    def holes(self):
        """Labels of exterior components that do not touch the bounding rectangle"""
        labels, count = ndimage.label(~self.mask, structure=FOUR_CONNECTED)
        touching = set(np.unique(np.concatenate([
            labels[0, :], labels[-1, :], labels[:, 0], labels[:, -1],
        ])))
        return [labels == k for k in range(1, count + 1) if k not in touching]

    # -- locating points -----------------------------------------------------

    def lattice_coordinates(self, point):
        point = complex(point)
        return (point.imag - self.anchor.imag) / self.h, (point.real - self.anchor.real) / self.h

    def nearest_node(self, point):
        """Mask node nearest to point; ties go to the lexicographically smallest (i, j)"""
        distance = np.abs(self.points - complex(point))
        distance = np.where(self.mask, distance, np.inf)
        i, j = np.unravel_index(int(np.argmin(distance)), distance.shape)
        return int(i), int(j)

    def stencil(self, point, interior=False):
        """Bilinear weights [(i, j, w), ...] of the nodes surrounding point.

        With ``interior`` every node carrying weight must be an interior node.
        """
        allowed = self.interior if interior else self.mask
        fi, fj = self.lattice_coordinates(point)
        i0, j0 = math.floor(fi), math.floor(fj)
        ty, tx = fi - i0, fj - j0
        if ty > 1 - SNAP:
            i0, ty = i0 + 1, 0.0
        if tx > 1 - SNAP:
            j0, tx = j0 + 1, 0.0
        ty = 0.0 if ty < SNAP else ty
        tx = 0.0 if tx < SNAP else tx
        weights = []
        for di, wy in ((0, 1 - ty), (1, ty)):
            for dj, wx in ((0, 1 - tx), (1, tx)):
                if wy * wx == 0.0:
                    continue
                i, j = i0 + di, j0 + dj
                inside = 0 <= i < self.mask.shape[0] and 0 <= j < self.mask.shape[1]
                if not inside or not allowed[i, j]:
                    where = "the interior of" if interior else "the domain"
                    raise DomainError(f"point {complex(point)} lies outside {where} {self.name}")
                weights.append((i, j, wy * wx))
        return weights

    def contains(self, point, interior=False):
        try:
            self.stencil(point, interior)
        except DomainError:
            return False
        return True
