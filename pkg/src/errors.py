"""
Errors Module

Exception hierarchy shared by the combinatorics library and the CLI.
The CLI maps each family onto a distinct exit code.
"""


class FermionError(Exception):
    """Base class for all library errors."""


class WeightMismatchError(FermionError, ValueError):
    """Raised when sizes or margins that must agree do not."""


class InvalidShapeError(FermionError, ValueError):
    """Raised for malformed partitions, fillings, matrices or order sets."""


class InexactDivisionError(FermionError, ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a remainder."""


class IdentityCheckError(FermionError, AssertionError):
    """Raised when two independent routes to the same quantity disagree."""


class UsageError(FermionError):
    """Raised for command-line input that cannot be turned into a request."""

    def __init__(self, message: str, flag: str = None):
        self.flag = flag
        if flag:
            message = f"{flag}: {message}"
        super().__init__(message)


class UnknownStatisticError(FermionError, LookupError):
    """Raised when a statistic identifier is not recognised."""
