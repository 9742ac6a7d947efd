"""Sharp Riesz constants and the algebraic identity behind the p = 2 bound."""

import math
from typing import NamedTuple

from utils.helpers import require_exponent


class IdentityValues(NamedTuple):
    lhs: float
    rhs: float


def verbitsky_constant(p):
    """c_p = sec(pi/2p) for 1 < p <= 2, csc(pi/2p) for p >= 2"""
    p = require_exponent(p)
    angle = math.pi / (2 * p)
    if p <= 2:
        return 1.0 / math.cos(angle)
    return 1.0 / math.sin(angle)


def conjugate_exponent(p):
    p = require_exponent(p)
    return p / (p - 1)


def identity_z(z):
    """(|z|^2, 2 (Re z)^2 - Re z^2); the two agree for every complex z"""
    z = complex(z)
    return IdentityValues(abs(z) ** 2, 2 * z.real ** 2 - (z * z).real)
