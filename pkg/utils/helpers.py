import math
from fractions import Fraction

from utils.errors import InvalidParameter, SpecParseError


def format_float(value):
    """Format a number with 17 significant digits so reruns are diffable"""
    if value is None:
        return ""
    # + 0.0 turns -0.0 into 0.0
    return format(float(value) + 0.0, ".17g")


def format_margin(ratio, bound):
    """Format a ratio against its bound for log lines"""
    return f"{ratio:.12f} / {bound:.12f} (margin {bound - ratio:+.3e})"


def is_power_of_two(n):
    return n >= 1 and (n & (n - 1)) == 0


def next_power_of_two(n):
    return 1 << max(0, math.ceil(math.log2(max(n, 1))))


def require_exponent(p):
    """Validate an exponent p in (1, inf)"""
    if not math.isfinite(p) or p <= 1.0:
        raise InvalidParameter(f"exponent p must be a finite number > 1, got {p}")
    return float(p)


def parse_number(text):
    """Parse '0.5', '1/64' or '-2' into a float"""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as e:
        raise SpecParseError(f"not a number: {text!r}") from e


def parse_complex(text):
    """Parse 're,im' (or a single real) into a complex number"""
    parts = [part for part in text.split(",")]
    if len(parts) == 1:
        return complex(parse_number(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(parse_number(parts[0]), parse_number(parts[1]))
    raise SpecParseError(f"expected 're,im', got {text!r}")
