"""Exception hierarchy shared by all evaluators."""


class DomainError(ValueError):
    """Argument outside the domain of the operation."""


class PoleError(DomainError):
    """Argument sits on a pole (non-positive integer for Gamma/digamma)."""


class ContourError(ValueError):
    """Quadrature contour violates its geometric invariants."""


class PrecisionError(ArithmeticError):
    """Evaluator could not reach the requested accuracy."""

    def __init__(self, message, abs_err=float("inf")):
        super().__init__(message)
        self.abs_err = abs_err


class BoundaryZeroError(PrecisionError):
    """A zero of R lies on (or too close to) a rectangle edge."""


class NearZeroOnLineError(PrecisionError):
    """|R(1/2 + ix)| dropped below the safe threshold on the integration path."""


class IncompleteStoreError(RuntimeError):
    """The zero store does not cover the range an operation needs."""


class StoreFormatError(ValueError):
    """Malformed line in a zero-store file."""

    def __init__(self, path, lineno, reason):
        super().__init__(f"{path}:{lineno}: {reason}")
        self.path = path
        self.lineno = lineno
        self.reason = reason
