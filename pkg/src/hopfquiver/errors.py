"""Exception hierarchy.

Domain errors (bad input, mismatched shapes, mismatched fields) derive from
``ValueError``.  Internal errors signal that a mathematical guarantee was
violated during a computation and therefore point at a bug or at an input
that slipped past a gate; they derive from ``ArithmeticError``/``RuntimeError``.
"""

from __future__ import annotations


class HopfQuiverError(Exception):
    """Base class for every error raised by this package."""

    code = "ERROR"


class DomainError(HopfQuiverError, ValueError):
    code = "DOMAIN_ERROR"


class FieldMismatchError(DomainError):
    code = "FIELD_MISMATCH"


class ConfigurationError(DomainError):
    code = "CONFIGURATION"


class MalformedInputError(DomainError):
    code = "MALFORMED_INPUT"


class NonSplitError(HopfQuiverError, ArithmeticError):
    """The cyclotomic field is not a splitting field for the dual algebra."""

    code = "NON_SPLIT"

    def __init__(self, message: str, degree: int | None = None):
        super().__init__(message)
        self.degree = degree


class DualChevalleyRequired(HopfQuiverError, ValueError):
    code = "DUAL_CHEVALLEY_REQUIRED"


class InvalidDatumError(DomainError):
    code = "INVALID_DATUM"


class NotApplicableError(HopfQuiverError, ValueError):
    code = "NOT_APPLICABLE"


class InternalError(HopfQuiverError, RuntimeError):
    code = "INTERNAL"


class DivisibilityViolation(InternalError):
    code = "DIVISIBILITY_VIOLATION"


class LiftFailure(InternalError):
    code = "LIFT_FAILURE"


class MatchFailure(InternalError):
    code = "MATCH_FAILURE"


class CriteriaDisagree(InternalError):
    code = "CRITERIA_DISAGREE"


class DatumInconsistent(InternalError):
    code = "DATUM_INCONSISTENT"
