"""Exception hierarchy shared by every module in the package."""


class FareyError(Exception):
    """Base class for all errors raised by this package."""


class ZeroDenominator(FareyError):
    """A fraction was constructed with denominator 0."""


class OutOfUnitInterval(FareyError):
    """A fraction outside [0, 1] was rejected at construction."""


class Overflow(FareyError):
    """An exact computation exceeded the configured integer width.

    Arithmetic never wraps: any product, sum, or accumulator that would
    leave the widened integer range raises this instead.
    """


class NotAscending(FareyError):
    """An operation requiring x < y received a non-ascending pair."""


class EndOfSequence(FareyError):
    """next_term was asked to advance past the final element."""


class CapExceeded(FareyError):
    """A materialization or sieve would exceed the configured cap."""

    def __init__(self, message: str, predicted: int, cap: int) -> None:
        super().__init__(message)
        self.predicted = predicted
        self.cap = cap


class TheoremViolation(FareyError):
    """A mechanically verified identity failed.

    The underlying identities are proved, so this always signals an
    implementation bug, never a mathematical possibility.
    """

    def __init__(self, message: str, **details: object) -> None:
        super().__init__(message)
        self.details = details
