"""
Domain Exceptions - Unitary Cayley.

Every error raised on purpose by the library derives from UnitaryCayleyError,
which is itself a ValueError so callers validating user input can catch either.
"""


class UnitaryCayleyError(ValueError):
    """Base class for library errors."""


class InvalidArgumentError(UnitaryCayleyError):
    """Argument outside the operation's domain (n < 1, d not dividing n, ...)."""


class GuardExceededError(UnitaryCayleyError):
    """Input larger than the desk-scale guard of an exact oracle."""

    def __init__(self, operation: str, n: int, limit: int) -> None:
        self.operation = operation
        self.n = n
        self.limit = limit
        super().__init__(f"{operation}: n={n} exceeds guard {limit}")


class ToleranceExceededError(UnitaryCayleyError):
    """Floating-point oracle drifted too far from an integer to be trusted."""


class ZeroDivisorError(UnitaryCayleyError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class NonIntegralQuotientError(UnitaryCayleyError):
    """Exact rational division produced a non-integer coefficient."""


class NotCirculantError(UnitaryCayleyError):
    """Matrix rows are not cyclic shifts of the first row."""
