"""Closed-form conformal maps between the disk, the upper half-plane and wedges.

Linear-fractional maps keep their coefficient matrix [[A, B], [C, D]] and
act by z -> (A z + B) / (C z + D).  Every map serializes to a JSON object
{"kind": ..., parameters...}; compositions nest their two factors.
"""

import json
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from utils.errors import InvalidParameter, SpecParseError

log = logging.getLogger("lumer.conformal")

DISK = "disk"
HALFPLANE = "halfplane"

# closed domains up to rounding
EDGE_SLACK = 1e-12


def wedge(alpha):
    return f"wedge({alpha:g})"


def domain_contains(name, z):
    """Membership in a catalog domain (closure, up to rounding)"""
    z = np.asarray(z, dtype=complex)
    if name == DISK:
        return np.abs(z) <= 1.0 + EDGE_SLACK
    if name == HALFPLANE:
        return z.imag >= -EDGE_SLACK
    if name.startswith("wedge(") and name.endswith(")"):
        alpha = float(name[6:-1])
        angle = np.mod(np.angle(z), 2 * np.pi)
        angle = np.where(angle > math.pi * (1 + alpha / 2), angle - 2 * np.pi, angle)
        return (np.abs(z) == 0) | ((angle >= -EDGE_SLACK) & (angle <= alpha * math.pi + EDGE_SLACK))
    raise InvalidParameter(f"unknown domain {name!r}")


def _as_complex(value, label):
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, (int, float)):
        return complex(value)
    raise SpecParseError(f"{label} must be a number or [re, im], got {value!r}")


class ConformalMap:
    kind = "abstract"
    source = DISK
    target = DISK

    def forward(self, z):
        raise NotImplementedError

    def inverse(self, w):
        raise NotImplementedError

    def derivative(self, z):
        raise NotImplementedError

    def params(self):
        return {}

    @property
    def is_disk_automorphism(self):
        return self.source == DISK and self.target == DISK

    def to_dict(self):
        return {"kind": self.kind, **self.params()}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def then(self, other):
        return Composition(self, other)

    def __call__(self, z):
        return self.forward(z)


class LinearFractional(ConformalMap):
    def matrix(self):
        raise NotImplementedError

    def forward(self, z):
        (a, b), (c, d) = self.matrix()
        z = np.asarray(z, dtype=complex)
        return (a * z + b) / (c * z + d)

    def inverse(self, w):
        (a, b), (c, d) = self.matrix()
        w = np.asarray(w, dtype=complex)
        return (d * w - b) / (-c * w + a)

    def derivative(self, z):
        (a, b), (c, d) = self.matrix()
        z = np.asarray(z, dtype=complex)
        return (a * d - b * c) / (c * z + d) ** 2


@dataclass(frozen=True)
class Identity(LinearFractional):
    kind = "identity"

    def matrix(self):
        return (1, 0), (0, 1)


@dataclass(frozen=True)
class Rotation(LinearFractional):
    phi: float = 0.0
    kind = "rotation"

    def matrix(self):
        return (np.exp(1j * self.phi), 0), (0, 1)

    def params(self):
        return {"phi": self.phi}


@dataclass(frozen=True)
class Mobius(LinearFractional):
    """Disk automorphism e^{i phi} (a - z) / (1 - conj(a) z); an involution when phi = 0."""
    a: complex = 0j
    phi: float = 0.0
    kind = "mobius"

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        if not abs(self.a) < 1.0:
            raise InvalidParameter(f"Möbius parameter must satisfy |a| < 1, got |a| = {abs(self.a)}")

    def matrix(self):
        rotation = np.exp(1j * self.phi)
        return (-rotation, rotation * self.a), (-np.conj(self.a), 1)

    def params(self):
        return {"a": [self.a.real, self.a.imag], "phi": self.phi}


@dataclass(frozen=True)
class Cayley(LinearFractional):
    """Disk onto the upper half-plane, z -> i (1 + z) / (1 - z)."""
    kind = "cayley"
    target = HALFPLANE

    def matrix(self):
        return (1j, 1j), (-1, 1)


@dataclass(frozen=True)
class PowerWedge(ConformalMap):
    """Upper half-plane onto the wedge 0 < arg w < alpha*pi, z -> z^alpha."""
    alpha: float = 1.0
    kind = "power-wedge"
    source = HALFPLANE

    def __post_init__(self):
        if not 0.0 < self.alpha < 2.0:
            raise InvalidParameter(f"wedge exponent must lie in (0, 2), got {self.alpha}")

    @property
    def target(self):
        return wedge(self.alpha)

    def forward(self, z):
        z = np.asarray(z, dtype=complex)
        return np.abs(z) ** self.alpha * np.exp(1j * self.alpha * np.angle(z))

    def inverse(self, w):
        w = np.asarray(w, dtype=complex)
        # arguments in the wedge may exceed pi
        angle = np.mod(np.angle(w), 2 * np.pi)
        angle = np.where(angle > math.pi * (1 + self.alpha / 2), angle - 2 * np.pi, angle)
        return np.abs(w) ** (1 / self.alpha) * np.exp(1j * angle / self.alpha)

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        return self.alpha * self.forward(z) / z

    def params(self):
        return {"alpha": self.alpha}


@dataclass(frozen=True)
class Composition(ConformalMap):
    """Apply `first`, then `second`."""
    first: ConformalMap = field(default_factory=Identity)
    second: ConformalMap = field(default_factory=Identity)
    kind = "composition"

    def __post_init__(self):
        if self.first.target != self.second.source:
            raise InvalidParameter(
                f"cannot compose {self.first.kind} (onto {self.first.target}) "
                f"with {self.second.kind} (from {self.second.source})"
            )

    @property
    def source(self):
        return self.first.source

    @property
    def target(self):
        return self.second.target

    def forward(self, z):
        return self.second.forward(self.first.forward(z))

    def inverse(self, w):
        return self.first.inverse(self.second.inverse(w))

    def derivative(self, z):
        return self.second.derivative(self.first.forward(z)) * self.first.derivative(z)

    def params(self):
        return {"first": self.first.to_dict(), "then": self.second.to_dict()}


def map_from_dict(spec):
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecParseError(f"map descriptor must be an object with a 'kind', got {spec!r}")
    kind = spec["kind"]
    try:
        if kind == "identity":
            return Identity()
        if kind == "rotation":
            return Rotation(float(spec.get("phi", 0.0)))
        if kind == "mobius":
            return Mobius(_as_complex(spec.get("a", 0.0), "a"), float(spec.get("phi", 0.0)))
        if kind == "cayley":
            return Cayley()
        if kind == "power-wedge":
            return PowerWedge(float(spec["alpha"]))
        if kind == "composition":
            return Composition(map_from_dict(spec["first"]), map_from_dict(spec["then"]))
    except KeyError as e:
        raise SpecParseError(f"{kind} map is missing parameter {e}") from e
    except (TypeError, ValueError) as e:
        if isinstance(e, SpecParseError):
            raise
        raise SpecParseError(f"bad {kind} parameters: {e}") from e
    raise SpecParseError(f"unknown map kind {kind!r}")


def map_from_spec(text):
    """Parse a JSON map descriptor such as '{"kind": "mobius", "a": 0.3}'"""
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecParseError(f"invalid map JSON: {e}") from e
    return map_from_dict(spec)


def automorphism_to(zeta_from, zeta_to):
    """Disk automorphism carrying zeta_from to zeta_to"""
    zeta_from, zeta_to = complex(zeta_from), complex(zeta_to)
    if zeta_from == zeta_to:
        return Identity()
    # each Möbius involution swaps its parameter with 0
    return Composition(Mobius(zeta_from), Mobius(zeta_to))
