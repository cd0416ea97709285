"""Numerical instability data of a point over the maximal torus.

``μ(x, λ)`` is the smallest λ-exponent among the coordinates of x and
``ν(x, λ) = μ(x, λ)/‖λ‖``. Since ν is irrational in general, only the
signed square ``sign(μ)·μ²/‖λ‖²`` is exposed.
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

from src.geometry.metric import inner
from src.geometry.min_norm import min_norm_point
from src.geometry.rational import Vector, indivisible_integer_multiple
from src.instability.points import OnePS, RationalPoint
from src.rep.blocks import dominant_representative
from src.rep.weights import WeightSystem


class PointClassification(BaseModel):
    """Optimal destabilizing data of a point, or the semistable verdict."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    semistable: bool
    support: tuple[int, ...] = Field(..., description="Indices of nonzero coordinates")
    beta: Vector | None = Field(default=None, description="Dominant β_x")
    norm_squared: Fraction | None = None
    torus_beta: Vector | None = Field(
        default=None, description="Minimum-norm point of the support hull before canonicalization"
    )
    torus_lambda: tuple[int, ...] | None = Field(
        default=None, description="Indivisible integral 1PS along torus_beta"
    )
    permutation: tuple[int, ...] | None = Field(
        default=None, description="Source-index permutation taking torus_beta to beta"
    )


def mu(x: RationalPoint, lam: OnePS, ws: WeightSystem) -> Fraction:
    """
    Smallest pairing ``⟨γ_i, λ⟩`` over the support of ``x``.

    Raises:
        ZeroVector: if ``x`` is zero (``λ`` is nonzero by construction)
        DimensionMismatch / WeightSystemError: if ``λ`` does not fit ``ws``
    """
    lam.check_blocks(ws.blocks)
    direction = lam.vector
    return min(inner(ws.weights[i], direction, ws.metric) for i in x.support(ws))


def nu_squared(x: RationalPoint, lam: OnePS, ws: WeightSystem) -> Fraction:
    """
    Signed square of ν: ``sign(μ)·μ²/⟨λ, λ⟩``.

    Positive exactly when λ drives x to the origin.
    """
    value = mu(x, lam, ws)
    length = inner(lam.vector, lam.vector, ws.metric)
    signed = value * value / length
    return signed if value >= 0 else -signed


def beta_of_point(x: RationalPoint, ws: WeightSystem) -> PointClassification:
    """
    Optimal destabilizing direction of ``x`` over the maximal torus.

    β_x is the minimum-norm point of the hull of the support weights; the
    point is semistable exactly when that hull contains 0.

    Returns:
        PointClassification carrying the dominant β and its norm together
        with the undominated torus-level direction, its indivisible 1PS and
        the permutation between them
    """
    support = x.support(ws)
    result = min_norm_point([ws.weights[i] for i in support], ws.metric)
    if result.is_zero:
        return PointClassification(semistable=True, support=support)
    beta, permutation = dominant_representative(result.point, ws.blocks)
    return PointClassification(
        semistable=False,
        support=support,
        beta=beta,
        norm_squared=result.norm_squared,
        torus_beta=result.point,
        torus_lambda=indivisible_integer_multiple(result.point),
        permutation=permutation,
    )
