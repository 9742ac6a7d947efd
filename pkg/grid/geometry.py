"""Exact boundaries of the builtin domains, as level functions (negative inside)."""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq


class Shape:
    kind = "shape"

    def level(self, x, y):
        raise NotImplementedError

    def extent(self):
        """Half-width of a centered box containing the shape"""
        raise NotImplementedError

    def contains(self, z):
        z = np.asarray(z, dtype=complex)
        return self.level(z.real, z.imag) < 0

    def crossing(self, start, end):
        """Fraction t in (0, 1] at which the segment start -> end leaves the shape"""
        direction = end - start

        def along(t):
            point = start + t * direction
            return self.level(point.real, point.imag)

        if along(1.0) == 0.0:
            return 1.0
        return brentq(along, 0.0, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)


@dataclass(frozen=True)
class Disk(Shape):
    radius: float = 1.0
    kind = "disk"

    def level(self, x, y):
        return np.hypot(x, y) - self.radius

    def extent(self):
        return self.radius

    def describe(self):
        return f"disk(R={self.radius:g})"


@dataclass(frozen=True)
class Annulus(Shape):
    inner: float = 0.5
    outer: float = 1.5
    kind = "annulus"

    def level(self, x, y):
        r = np.hypot(x, y)
        return np.maximum(self.inner - r, r - self.outer)

    def extent(self):
        return self.outer

    def describe(self):
        return f"annulus(r={self.inner:g},R={self.outer:g})"


@dataclass(frozen=True)
class Square(Shape):
    side: float = 2.0
    kind = "square"

    def level(self, x, y):
        return np.maximum(np.abs(x), np.abs(y)) - self.side / 2

    def extent(self):
        return self.side / 2

    def describe(self):
        return f"square(L={self.side:g})"
