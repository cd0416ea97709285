"""Minimum-norm point of a finite convex hull under a Gram metric.

The main solver is Wolfe's active-set method run in exact arithmetic: a
corral (affinely independent active set whose affine minimizer has positive
coefficients) is improved by adding the most violated point and walking
back along the segment whenever a coefficient turns negative. The
objective strictly decreases between corrals, so no corral repeats and the
method terminates without any tolerance.

``min_norm_oracle`` solves the same problem by brute force over every
small affinely independent subset and is used to cross-check the solver.
"""

from collections.abc import Iterator, Sequence
from fractions import Fraction
from itertools import combinations

import structlog
from pydantic import BaseModel, ConfigDict, Field, computed_field

from src.errors import DimensionMismatch, EmptyInput, InvariantViolation
from src.geometry.linalg import rank, solve_linear
from src.geometry.metric import MetricForm, inner
from src.geometry.rational import Vector

logger = structlog.get_logger(__name__)


class MinNormResult(BaseModel):
    """Closest point of a convex hull to the origin, with its certificate."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    point: Vector = Field(..., description="The minimum-norm point")
    norm_squared: Fraction = Field(..., description="Metric norm squared of the point")
    barycentric_coefficients: dict[int, Fraction] = Field(
        ..., description="Positive coefficients keyed by input index"
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def active_indices(self) -> frozenset[int]:
        """Input indices carrying a positive coefficient."""
        return frozenset(self.barycentric_coefficients)

    @property
    def is_zero(self) -> bool:
        """Whether the origin lies in the hull."""
        return self.norm_squared == 0


class Corral(BaseModel):
    """An affinely independent subset whose affine minimizer is interior."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    indices: tuple[int, ...]
    point: Vector
    norm_squared: Fraction


class _PointSet:
    """Deduplicated points with their Gram matrix under the metric."""

    def __init__(self, points: Sequence[Sequence[Fraction]], m: MetricForm) -> None:
        if not points:
            raise EmptyInput("min-norm point of an empty set is undefined")
        first_index: dict[Vector, int] = {}
        for index, raw in enumerate(points):
            if len(raw) != m.dimension:
                raise DimensionMismatch(
                    f"point {index} has length {len(raw)}, metric dimension is {m.dimension}"
                )
            first_index.setdefault(tuple(Fraction(c) for c in raw), index)

        self.metric = m
        self.unique: list[Vector] = list(first_index)
        self.original: list[int] = list(first_index.values())
        images = [m.apply(p) for p in self.unique]
        self.gram = [
            [sum((a * b for a, b in zip(p, image, strict=True)), Fraction(0)) for image in images]
            for p in self.unique
        ]

    def __len__(self) -> int:
        return len(self.unique)

    def affine_minimizer(self, subset: Sequence[int]) -> list[Fraction] | None:
        """
        Affine coefficients of the closest point of ``aff(subset)`` to 0.

        Solves ``[G 1; 1ᵀ 0]·[α; t] = [0; 1]``; the solution satisfies
        ``⟨p_i, y⟩ = -t`` on the subset, so ``t = -‖y‖²``. Returns None when
        the subset is affinely dependent.
        """
        size = len(subset)
        matrix = [
            [self.gram[i][j] for j in subset] + [Fraction(1)] for i in subset
        ]
        matrix.append([Fraction(1)] * size + [Fraction(0)])
        rhs = [Fraction(0)] * size + [Fraction(1)]
        solution = solve_linear(matrix, rhs)
        if solution is None:
            return None
        return solution[:size]

    def combine(self, coefficients: dict[int, Fraction]) -> Vector:
        dimension = self.metric.dimension
        return tuple(
            sum((c * self.unique[i][k] for i, c in coefficients.items()), Fraction(0))
            for k in range(dimension)
        )

    def pairings(self, coefficients: dict[int, Fraction]) -> list[Fraction]:
        """``⟨p_j, Σ c_i p_i⟩`` for every unique point ``p_j``."""
        return [
            sum((c * row[i] for i, c in coefficients.items()), Fraction(0))
            for row in self.gram
        ]

    def result(self, coefficients: dict[int, Fraction]) -> MinNormResult:
        point = self.combine(coefficients)
        pairings = self.pairings(coefficients)
        value = sum((c * pairings[i] for i, c in coefficients.items()), Fraction(0))
        mapped = {
            self.original[i]: c for i, c in sorted(coefficients.items()) if c != 0
        }
        return MinNormResult(
            point=point,
            norm_squared=value,
            barycentric_coefficients=dict(sorted(mapped.items())),
        )


def min_norm_point(points: Sequence[Sequence[Fraction]], m: MetricForm) -> MinNormResult:
    """
    Closest point to the origin of the convex hull of ``points``.

    Args:
        points: Nonempty list of vectors of length ``m.dimension``
        m: Gram form defining the norm

    Returns:
        MinNormResult with the point, its norm and a barycentric certificate
        keyed by input index (duplicates credit their lowest index)

    Raises:
        EmptyInput: if ``points`` is empty
        DimensionMismatch: if a point has the wrong length
    """
    pset = _PointSet(points, m)
    start = min(range(len(pset)), key=lambda i: (pset.gram[i][i], i))
    weights: dict[int, Fraction] = {start: Fraction(1)}
    major_cycles = 0

    while True:
        major_cycles += 1
        pairings = pset.pairings(weights)
        current = sum((c * pairings[i] for i, c in weights.items()), Fraction(0))
        entering = min(range(len(pset)), key=lambda j: (pairings[j], j))
        if pairings[entering] >= current:
            break
        if entering in weights:
            raise InvariantViolation("entering point already active in the corral")
        weights[entering] = Fraction(0)

        # minor cycles: walk toward the affine minimizer until it is interior
        while True:
            active = sorted(weights)
            alpha = pset.affine_minimizer(active)
            if alpha is None:
                raise InvariantViolation("active set lost affine independence")
            target = dict(zip(active, alpha, strict=True))
            negative = [i for i in active if target[i] < 0]
            if not negative:
                weights = {i: c for i, c in target.items() if c != 0}
                break
            theta = min(weights[i] / (weights[i] - target[i]) for i in negative)
            weights = {
                i: theta * target[i] + (1 - theta) * weights[i] for i in active
            }
            weights = {i: c for i, c in weights.items() if c != 0}

    result = pset.result(weights)
    check_certificate(result, points, m)
    logger.debug(
        "min_norm_point",
        points=len(points),
        unique=len(pset),
        major_cycles=major_cycles,
        active=len(result.barycentric_coefficients),
    )
    return result


def _affinely_independent_corrals(
    pset: _PointSet, max_size: int
) -> Iterator[tuple[tuple[int, ...], list[Fraction]]]:
    for size in range(1, min(max_size, len(pset)) + 1):
        for subset in combinations(range(len(pset)), size):
            alpha = pset.affine_minimizer(subset)
            if alpha is not None:
                yield subset, alpha


def min_norm_oracle(points: Sequence[Sequence[Fraction]], m: MetricForm) -> MinNormResult:
    """
    Brute-force minimum-norm point by exhaustive KKT solving.

    Every affinely independent subset of at most ``dimension + 1`` distinct
    points is solved exactly; the first one whose affine minimizer has
    nonnegative coefficients and satisfies ``⟨γ, y⟩ ≥ ‖y‖²`` for every
    input ``γ`` is the optimum (KKT conditions are sufficient here).
    Only feasible for small inputs.
    """
    pset = _PointSet(points, m)
    for subset, alpha in _affinely_independent_corrals(pset, m.dimension + 1):
        if any(a < 0 for a in alpha):
            continue
        weights = {i: a for i, a in zip(subset, alpha, strict=True) if a != 0}
        pairings = pset.pairings(weights)
        value = sum((c * pairings[i] for i, c in weights.items()), Fraction(0))
        if all(p >= value for p in pairings):
            result = pset.result(weights)
            check_certificate(result, points, m)
            return result
    raise InvariantViolation("no feasible KKT candidate found")


def corral_points(
    points: Sequence[Sequence[Fraction]], m: MetricForm, max_size: int | None = None
) -> list[Corral]:
    """
    Enumerate every corral of the point set.

    A corral is an affinely independent subset whose affine minimizer has
    strictly positive coefficients. The corral points are exactly the
    minimum-norm points of the hulls of all subsets.

    Args:
        points: Nonempty list of vectors
        m: Gram form
        max_size: Largest subset size to scan; defaults to the rank of the
            points plus one, beyond which no subset is affinely independent

    Returns:
        Corrals in scan order (by size, then lexicographic in the
        deduplicated indices), with indices mapped to the input positions
    """
    pset = _PointSet(points, m)
    if max_size is None:
        max_size = rank(pset.unique) + 1
    corrals: list[Corral] = []
    for subset, alpha in _affinely_independent_corrals(pset, max_size):
        if any(a <= 0 for a in alpha):
            continue
        weights = dict(zip(subset, alpha, strict=True))
        point = pset.combine(weights)
        corrals.append(
            Corral(
                indices=tuple(pset.original[i] for i in subset),
                point=point,
                norm_squared=inner(point, point, m),
            )
        )
    logger.debug("corral_points", points=len(points), max_size=max_size, corrals=len(corrals))
    return corrals


def check_certificate(
    result: MinNormResult, points: Sequence[Sequence[Fraction]], m: MetricForm
) -> None:
    """
    Verify reconstruction, feasibility and optimality of a result exactly.

    Raises:
        InvariantViolation: if any of the three conditions fails
    """
    coefficients = result.barycentric_coefficients
    if any(c <= 0 for c in coefficients.values()):
        raise InvariantViolation("certificate has a non-positive coefficient")
    if sum(coefficients.values(), Fraction(0)) != 1:
        raise InvariantViolation("certificate coefficients do not sum to 1")
    if len(coefficients) > m.dimension + 1:
        raise InvariantViolation("certificate support exceeds dimension + 1")
    rebuilt = tuple(
        sum((c * Fraction(points[i][k]) for i, c in coefficients.items()), Fraction(0))
        for k in range(m.dimension)
    )
    if rebuilt != tuple(result.point):
        raise InvariantViolation("certificate does not reconstruct the point")
    if inner(result.point, result.point, m) != result.norm_squared:
        raise InvariantViolation("reported norm does not match the point")
    for index, gamma in enumerate(points):
        if inner(gamma, result.point, m) < result.norm_squared:
            raise InvariantViolation(f"input {index} violates the optimality condition")
