"""Exception types shared across the stratification packages.

Input problems are ``ValueError`` subclasses so callers can treat every
bad input the same way; ``InvariantViolation`` marks a bug in the
computation itself.
"""


class DimensionMismatch(ValueError):
    """Vectors or matrices of incompatible dimensions were combined."""


class EmptyInput(ValueError):
    """An operation that needs at least one point received none."""


class ZeroVector(ValueError):
    """A nonzero vector (normal, point, 1PS) was required."""


class NotDominant(ValueError):
    """A weight vector outside the dominant chamber was supplied."""


class WeightSystemError(ValueError):
    """A weight system or explicit-weight document is malformed."""


class RepSyntaxError(ValueError):
    """A representation expression failed to parse."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.message = message
        self.offset = offset


class EnumerationCapExceeded(ValueError):
    """Candidate enumeration was asked to scan more weights than allowed."""

    def __init__(self, count: int, cap: int) -> None:
        super().__init__(
            f"{count} weights exceed the enumeration cap of {cap}; "
            f"raise it explicitly with --cap {count} (or MORSE_STRATA_ENUMERATION_CAP)"
        )
        self.count = count
        self.cap = cap


class InvariantViolation(RuntimeError):
    """An internal consistency check failed."""
