"""Exception hierarchy shared by the library and the CLI.

Everything raised on bad input derives from ``LeibnizError`` (itself a
``ValueError``), so callers can catch one type. ``EquivalenceViolation`` is
the exception: it marks two computations that must agree but did not, which
is a bug rather than an input problem.
"""

from __future__ import annotations


class LeibnizError(ValueError):
    """Base class for every domain error."""


# ---------------------------------------------------------------------------
# Input and shape errors
# ---------------------------------------------------------------------------

class InputError(LeibnizError):
    """Malformed input: bad file content, zero dimension, unknown options."""


class ShapeMismatch(InputError):
    pass


class CarrierMismatch(ShapeMismatch):
    pass


class MixedFieldContext(InputError):
    """Scalars from two different fields met in one operation."""


class DivisionByZero(LeibnizError, ZeroDivisionError):
    pass


class SingularMatrix(LeibnizError):
    def __init__(self, rank: int, message: str | None = None) -> None:
        self.rank = rank
        super().__init__(message or f"matrix is singular (rank {rank})")


class SingularK(SingularMatrix):
    pass


class SingularRSharp(SingularMatrix):
    pass


class GuardRailExceeded(LeibnizError):
    """A dense allocation or bracket evaluation would exceed the configured limits."""


class SearchSpaceTooLarge(GuardRailExceeded):
    pass


class UnknownFixture(InputError):
    pass


# ---------------------------------------------------------------------------
# Precondition failures
# ---------------------------------------------------------------------------

class InvalidAlgebra(LeibnizError):
    pass


class InvalidRepresentation(LeibnizError):
    pass


class InvalidQuadratic(LeibnizError):
    pass


class NotARotaBaxterOperator(LeibnizError):
    pass


class NotAMatchedPair(LeibnizError):
    pass


class NotABialgebra(LeibnizError):
    pass


class NotDendriform(LeibnizError):
    pass


# ---------------------------------------------------------------------------
# Internal
# ---------------------------------------------------------------------------

class EquivalenceViolation(AssertionError):
    """Two independent routes to the same answer disagreed."""
