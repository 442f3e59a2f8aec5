"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class TruncationError(ArithmeticError):
    """A series could not be certified to the requested tolerance within the term cap."""


class ConvergenceError(ArithmeticError):
    """An iteration failed to converge; ``partial`` carries the last iterate."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class MonotonicityError(RuntimeError):
    """A sweep verdict changed more than once inside a bisection bracket."""
