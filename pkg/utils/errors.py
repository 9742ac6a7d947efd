"""Exception hierarchy shared by every package of the toolkit."""


class LumerError(Exception):
    """Base class for all toolkit errors."""


class InvalidParameter(LumerError, ValueError):
    """An argument is outside its documented range (p <= 1, r >= 1, bad N, ...)."""


class NotRealValued(InvalidParameter):
    """A series expected to be real-valued violates conjugate symmetry."""

    def __init__(self, violation, tolerance):
        super().__init__(
            f"series is not real-valued: symmetry violation {violation:.3e} > {tolerance:.1e}"
        )
        self.violation = violation
        self.tolerance = tolerance


class DomainError(LumerError):
    """Invalid grid domain, or a point outside the domain of an operation."""


class DomainMismatch(DomainError):
    """Fields defined on different domains were combined."""


class ExistenceFailure(LumerError):
    """No single-valued harmonic conjugate: a period around a hole is non-zero."""

    def __init__(self, period, tolerance, loop_index=0):
        super().__init__(
            f"harmonic conjugate does not exist: period {period:.6g} around hole "
            f"{loop_index} exceeds tolerance {tolerance:.3g}"
        )
        self.period = period
        self.tolerance = tolerance
        self.loop_index = loop_index


class DegenerateZero(LumerError):
    """The Riesz ratio is undefined because the function vanishes identically."""


class SolverDivergence(LumerError):
    """The iterative Dirichlet solver stopped before reaching its tolerance."""

    def __init__(self, residual, iterations, tolerance):
        super().__init__(
            f"solver did not converge: relative residual {residual:.3e} "
            f"(tolerance {tolerance:.1e}) after {iterations} iterations"
        )
        self.residual = residual
        self.iterations = iterations
        self.tolerance = tolerance


class SpecParseError(LumerError, ValueError):
    """A command-line spec string or a mask file could not be parsed."""
