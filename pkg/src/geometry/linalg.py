"""Exact linear algebra over the rationals.

Gaussian elimination on lists of ``Fraction`` rows. Matrices here are tiny
(at most the ambient dimension plus two), so plain row operations are the
right tool.
"""

from collections.abc import Sequence
from fractions import Fraction

from src.errors import DimensionMismatch

Matrix = list[list[Fraction]]


def solve_linear(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> list[Fraction] | None:
    """
    Solve ``matrix · x = rhs`` for a square system.

    Args:
        matrix: Square coefficient matrix (left untouched)
        rhs: Right-hand side

    Returns:
        The unique solution, or None when the matrix is singular
    """
    size = len(matrix)
    if len(rhs) != size or any(len(row) != size for row in matrix):
        raise DimensionMismatch("solve_linear needs a square system")

    rows = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]

    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
        pivot_row = rows[col]
        inverse = 1 / pivot_row[col]
        for r in range(size):
            if r == col:
                continue
            factor = rows[r][col]
            if factor == 0:
                continue
            factor *= inverse
            row = rows[r]
            for c in range(col, size + 1):
                row[c] -= factor * pivot_row[c]

    return [rows[i][size] / rows[i][i] for i in range(size)]


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the span of ``vectors`` (row reduction, exact)."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return 0
    width = len(rows[0])
    found = 0
    for col in range(width):
        pivot = next((r for r in range(found, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[found], rows[pivot] = rows[pivot], rows[found]
        lead = rows[found]
        for r in range(found + 1, len(rows)):
            factor = rows[r][col]
            if factor == 0:
                continue
            factor /= lead[col]
            for c in range(col, width):
                rows[r][c] -= factor * lead[c]
        found += 1
        if found == len(rows):
            break
    return found


def leading_principal_pivots(matrix: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """
    Return the pivots of elimination without row exchanges.

    The k-th pivot equals the ratio of the k-th and (k-1)-th leading
    principal minors, so every minor is positive exactly when every pivot
    is. Elimination stops at the first non-positive pivot.
    """
    size = len(matrix)
    rows = [list(row) for row in matrix]
    pivots: list[Fraction] = []
    for col in range(size):
        pivot = rows[col][col]
        pivots.append(pivot)
        if pivot <= 0:
            break
        for r in range(col + 1, size):
            factor = rows[r][col] / pivot
            if factor == 0:
                continue
            for c in range(col, size):
                rows[r][c] -= factor * rows[col][c]
    return pivots
