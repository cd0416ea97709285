"""Positive-definite rational Gram forms on the weight space."""

from collections.abc import Sequence
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.errors import DimensionMismatch, WeightSystemError
from src.geometry.linalg import leading_principal_pivots
from src.geometry.rational import Vector


class MetricForm(BaseModel):
    """Symmetric positive-definite Gram matrix with exact rational entries."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dimension: int = Field(..., gt=0, description="Ambient dimension")
    gram: tuple[tuple[Fraction, ...], ...] = Field(
        ..., description="Gram matrix, row-major"
    )

    @field_validator("gram", mode="before")
    @classmethod
    def _coerce_gram(cls, value: Sequence[Sequence[object]]) -> tuple[tuple[Fraction, ...], ...]:
        rows = []
        for row in value:
            entries = []
            for entry in row:
                if isinstance(entry, bool) or not isinstance(entry, (int, Fraction)):
                    raise WeightSystemError(f"gram entries must be rational, got {entry!r}")
                entries.append(Fraction(entry))
            rows.append(tuple(entries))
        return tuple(rows)

    @model_validator(mode="after")
    def _check_positive_definite(self) -> "MetricForm":
        size = self.dimension
        if len(self.gram) != size or any(len(row) != size for row in self.gram):
            raise DimensionMismatch(f"gram matrix must be {size}x{size}")
        for i in range(size):
            for j in range(i + 1, size):
                if self.gram[i][j] != self.gram[j][i]:
                    raise WeightSystemError(f"gram matrix is not symmetric at ({i}, {j})")
        pivots = leading_principal_pivots(self.gram)
        if len(pivots) < size or pivots[-1] <= 0:
            raise WeightSystemError("gram matrix is not positive definite")
        return self

    @property
    def is_diagonal(self) -> bool:
        """Whether every off-diagonal entry is zero."""
        return all(
            self.gram[i][j] == 0
            for i in range(self.dimension)
            for j in range(self.dimension)
            if i != j
        )

    @classmethod
    def identity(cls, dimension: int) -> "MetricForm":
        """Standard dot product."""
        return cls.diagonal([Fraction(1)] * dimension)

    @classmethod
    def diagonal(cls, entries: Sequence[Fraction]) -> "MetricForm":
        """Diagonal form with the given (positive) entries."""
        size = len(entries)
        gram = [
            [Fraction(entries[i]) if i == j else Fraction(0) for j in range(size)]
            for i in range(size)
        ]
        return cls(dimension=size, gram=gram)

    def scaled(self, factor: Fraction) -> "MetricForm":
        """Return ``factor`` times this form; ``factor`` must be positive."""
        if factor <= 0:
            raise WeightSystemError(f"metric scale must be positive, got {factor}")
        return MetricForm(
            dimension=self.dimension,
            gram=[[factor * entry for entry in row] for row in self.gram],
        )

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        """Return ``gram · vector``."""
        _check_length(vector, self.dimension)
        return tuple(
            sum((entry * vector[j] for j, entry in enumerate(row) if entry), Fraction(0))
            for row in self.gram
        )


def _check_length(vector: Sequence[Fraction], dimension: int) -> None:
    if len(vector) != dimension:
        raise DimensionMismatch(
            f"vector of length {len(vector)} does not match metric dimension {dimension}"
        )


def inner(u: Sequence[Fraction], v: Sequence[Fraction], m: MetricForm) -> Fraction:
    """
    Exact inner product ``uᵀ · gram · v``.

    Args:
        u: Left vector, length ``m.dimension``
        v: Right vector, length ``m.dimension``
        m: Gram form

    Returns:
        The pairing as a Fraction

    Raises:
        DimensionMismatch: if either vector has the wrong length
    """
    _check_length(u, m.dimension)
    _check_length(v, m.dimension)
    total = Fraction(0)
    for i, row in enumerate(m.gram):
        if not u[i]:
            continue
        row_total = Fraction(0)
        for j, entry in enumerate(row):
            if entry and v[j]:
                row_total += entry * v[j]
        total += u[i] * row_total
    return total


def norm_squared(v: Sequence[Fraction], m: MetricForm) -> Fraction:
    """``inner(v, v, m)``."""
    return inner(v, v, m)
