import logging
from dataclasses import dataclass

import numpy as np

from grid.domain import GridDomain
from utils.errors import DomainError, DomainMismatch

log = logging.getLogger("lumer.grid")


@dataclass(frozen=True, eq=False)
class GridField:
    """Scalar field on the mask nodes of a GridDomain.

    ``values`` has the mask's shape and holds NaN off the mask.  ``trace``
    holds the field at the domain's cut-arm crossing points when the domain
    has an exact boundary and the field is known there.
    """
    domain: GridDomain
    values: np.ndarray
    trace: np.ndarray | None = None

    def __post_init__(self):
        values = np.array(self.values)
        if values.shape != self.domain.mask.shape:
            raise DomainError(f"field shape {values.shape} does not match mask {self.domain.mask.shape}")
        if not np.all(np.isfinite(values[self.domain.mask])):
            raise DomainError("field has non-finite values on mask nodes")
        values = np.where(self.domain.mask, values, np.nan)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if self.trace is not None:
            trace = np.array(self.trace)
            arms = self.domain.cut_arms
            if arms is None or trace.shape != (len(arms),):
                raise DomainError("boundary trace does not match the domain's cut arms")
            trace.setflags(write=False)
            object.__setattr__(self, "trace", trace)

    @classmethod
    def from_function(cls, domain, f):
        """Sample f(z) on the mask nodes (and at exact boundary crossings when available)"""
        values = np.zeros(domain.mask.shape, dtype=float)
        values[domain.mask] = np.real(f(domain.points[domain.mask]))
        trace = None
        if domain.cut_arms is not None:
            trace = np.real(f(domain.cut_arms.points)).astype(float)
        return cls(domain, values, trace)

    @classmethod
    def constant(cls, domain, value):
        return cls.from_function(domain, lambda z: np.full(np.shape(z), float(value)))

    @property
    def has_trace(self):
        return self.trace is not None

    def node_values(self):
        return self.values[self.domain.mask]

    def require_same_domain(self, other):
        if other.domain is not self.domain:
            raise DomainMismatch(f"fields live on different domains ({self.domain.name}, {other.domain.name})")

    def combine(self, other, op):
        """Pointwise op of two fields, traces included when both have one"""
        self.require_same_domain(other)
        with np.errstate(invalid="ignore"):
            values = op(self.values, other.values)
        trace = None
        if self.has_trace and other.has_trace:
            trace = op(self.trace, other.trace)
        return GridField(self.domain, np.where(self.domain.mask, values, 0.0), trace)

    def apply(self, op):
        with np.errstate(invalid="ignore"):
            values = op(self.values)
        trace = op(self.trace) if self.has_trace else None
        return GridField(self.domain, np.where(self.domain.mask, values, 0.0), trace)

    def at(self, point, interior=False):
        """Bilinear interpolation of the four surrounding nodes"""
        return sum(w * self.values[i, j] for i, j, w in self.domain.stencil(point, interior))

    def is_zero(self):
        zero = not np.any(self.node_values())
        return zero and (not self.has_trace or not np.any(self.trace))
