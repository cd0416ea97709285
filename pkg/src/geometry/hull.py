"""Origin membership, projections and the interior test for hulls of weights."""

from collections.abc import Sequence
from fractions import Fraction

import structlog
from pydantic import BaseModel, ConfigDict, Field

from src.errors import EmptyInput, ZeroVector
from src.geometry.metric import MetricForm, inner
from src.geometry.min_norm import min_norm_point
from src.geometry.rational import Vector

logger = structlog.get_logger(__name__)


class OriginMembership(BaseModel):
    """Whether the origin lies in a hull, with the matching certificate."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    contains: bool
    coefficients: dict[int, Fraction] | None = Field(
        default=None, description="Barycentric coefficients of 0 when contained"
    )
    separator: Vector | None = Field(
        default=None, description="w with ⟨γ, w⟩ > 0 for every input when not contained"
    )


def contains_origin(points: Sequence[Sequence[Fraction]], m: MetricForm) -> OriginMembership:
    """
    Decide whether 0 lies in the closed convex hull of ``points``.

    The minimum-norm point is the certificate either way: it is 0 with a
    barycentric representation, or it separates every point from 0.
    """
    if not points:
        raise EmptyInput("origin membership of an empty hull is undefined")
    result = min_norm_point(points, m)
    if result.is_zero:
        return OriginMembership(contains=True, coefficients=result.barycentric_coefficients)
    return OriginMembership(contains=False, separator=result.point)


def project_to_complement(
    v: Sequence[Fraction], normal: Sequence[Fraction], m: MetricForm
) -> Vector:
    """
    Project ``v`` onto the metric-orthogonal complement of ``normal``.

    Returns:
        ``v - (⟨v, normal⟩ / ⟨normal, normal⟩) · normal``

    Raises:
        ZeroVector: if ``normal`` is zero
    """
    length = inner(normal, normal, m)
    if length == 0:
        raise ZeroVector("cannot project onto the complement of the zero vector")
    factor = inner(v, normal, m) / length
    return tuple(Fraction(a) - factor * b for a, b in zip(v, normal, strict=True))


def project_to_subspace_complement(
    v: Sequence[Fraction], basis: Sequence[Sequence[Fraction]], m: MetricForm
) -> Vector:
    """Project ``v`` off every vector of a metric-orthogonal ``basis``."""
    projected: Vector = tuple(Fraction(a) for a in v)
    for direction in basis:
        projected = project_to_complement(projected, direction, m)
    return projected


def orthogonal_basis(vectors: Sequence[Sequence[Fraction]], m: MetricForm) -> list[Vector]:
    """Exact Gram–Schmidt: a metric-orthogonal basis of ``span(vectors)``."""
    basis: list[Vector] = []
    for v in vectors:
        residual = project_to_subspace_complement(v, basis, m)
        if any(residual):
            basis.append(residual)
    return basis


def origin_in_interior(
    points: Sequence[Sequence[Fraction]], m: MetricForm, ambient_rank: int
) -> bool:
    """
    Decide whether 0 is an interior point of the hull inside the ambient space.

    ``points`` must lie in an ambient subspace of rank ``ambient_rank``. The
    origin is interior exactly when the points positively span that space.
    The largest subspace inside their cone is found by repeated
    minimum-norm solves: a zero minimum on the current quotient puts the
    supporting points into the subspace, a nonzero minimum separates all
    remaining points, and then the subspace is the whole lineality space.
    """
    if not points:
        raise EmptyInput("interior test of an empty hull is undefined")
    if ambient_rank == 0:
        return True

    span: list[Vector] = []
    remaining = [tuple(Fraction(c) for c in p) for p in points if any(p)]
    rounds = 0
    while remaining:
        rounds += 1
        result = min_norm_point(remaining, m)
        if not result.is_zero:
            break
        span = orthogonal_basis([*span, *(remaining[i] for i in result.active_indices)], m)
        remaining = [
            projected
            for projected in (project_to_subspace_complement(p, span, m) for p in remaining)
            if any(projected)
        ]

    logger.debug("origin_in_interior", rounds=rounds, span_rank=len(span), ambient_rank=ambient_rank)
    return len(span) == ambient_rank
