"""Parsers for the command-line spec strings (domains, functions, points)."""

import numpy as np

from grid.domain import GridDomain
from utils.errors import DomainError, SpecParseError
from utils.helpers import parse_complex, parse_number

BUILTIN_PREFIX = "builtin:"
DOMAIN_ARITY = {"disk": 1, "annulus": 2, "square": 1}


def parse_domain(text):
    """builtin:disk:<R>[:<h>], builtin:annulus:<r>:<R>[:<h>], builtin:square:<L>[:<h>] or a mask path"""
    if not text.startswith(BUILTIN_PREFIX):
        return GridDomain.from_file(text)
    kind, *values = text[len(BUILTIN_PREFIX):].split(":")
    if kind not in DOMAIN_ARITY:
        raise SpecParseError(f"unknown builtin domain {kind!r}; expected one of {sorted(DOMAIN_ARITY)}")
    arity = DOMAIN_ARITY[kind]
    if len(values) not in (arity, arity + 1):
        raise SpecParseError(f"builtin:{kind} takes {arity} size parameter(s) and an optional spacing")
    numbers = [parse_number(value) for value in values]
    sizes, h = numbers[:arity], (numbers[arity] if len(numbers) > arity else None)
    try:
        if kind == "disk":
            return GridDomain.disk(sizes[0], h)
        if kind == "annulus":
            return GridDomain.annulus(sizes[0], sizes[1], h)
        return GridDomain.square(sizes[0], h)
    except DomainError as e:
        raise SpecParseError(f"bad domain spec {text!r}: {e}") from e


def parse_function(text):
    """const:<c>, re:<n>, im:<n> or log_abs; returns an evaluator z -> U(z)"""
    name, _, arg = text.partition(":")
    if name == "const":
        value = parse_number(arg)
        return lambda z: np.full(np.shape(z), value)
    if name in ("re", "im"):
        try:
            n = int(arg)
        except ValueError as e:
            raise SpecParseError(f"{name}:<n> needs an integer power, got {arg!r}") from e
        if n < 0:
            raise SpecParseError(f"{name}:<n> needs n >= 0, got {n}")
        part = np.real if name == "re" else np.imag
        return lambda z: part(np.asarray(z, dtype=complex) ** n)
    if name == "log_abs" and not arg:
        return lambda z: np.log(np.abs(z))
    raise SpecParseError(f"unknown function spec {text!r}; expected const:<c>, re:<n>, im:<n> or log_abs")


def parse_point(text):
    return parse_complex(text)


def parse_exponents(values):
    return [parse_number(str(value)) for value in values]
