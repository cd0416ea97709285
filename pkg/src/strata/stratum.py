"""Description of a single stratum from its index vector β."""

from collections.abc import Sequence
from fractions import Fraction
from math import lcm

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from src.errors import NotDominant, ZeroVector
from src.geometry.metric import MetricForm, inner
from src.geometry.min_norm import min_norm_point
from src.geometry.rational import Vector, indivisible_integer_multiple
from src.rep.blocks import Run, is_sorted_within_runs, refine_runs, unipotent_dimension
from src.rep.weights import WeightSystem


class LevelDecomposition(BaseModel):
    """Pairings with β over a common denominator: ``m_1/m0 < … < m_p/m0``."""

    model_config = ConfigDict(frozen=True)

    m0: int = Field(..., gt=0, description="Common denominator")
    levels: tuple[int, ...] = Field(..., description="Distinct numerators, ascending")
    multiplicities: tuple[int, ...] = Field(..., description="Weights at each level")
    critical_index: int = Field(..., ge=1, description="1-based s with m_s/m0 = ‖β‖²")

    @property
    def critical_value(self) -> Fraction:
        return Fraction(self.levels[self.critical_index - 1], self.m0)


class LeviStratum(BaseModel):
    """A stratum of the Levi action on Z_β, with its own sub-strata."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    beta: Vector
    norm_squared: Fraction
    z_indices: tuple[int, ...]
    w_indices: tuple[int, ...]
    dim_unipotent: int
    nonempty: bool
    levi_strata: tuple["LeviStratum", ...] = ()

    @property
    def y_count(self) -> int:
        return len(self.z_indices) + len(self.w_indices)


class Stratum(BaseModel):
    """Full descriptor of one unstable stratum S_β."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    beta: Vector = Field(..., description="Dominant index vector")
    norm_squared: Fraction
    decomposition: LevelDecomposition
    z_indices: tuple[int, ...] = Field(..., description="Pairing equal to ‖β‖²")
    w_indices: tuple[int, ...] = Field(..., description="Pairing above ‖β‖²")
    y_indices: tuple[int, ...]
    lambda_beta: tuple[int, ...] = Field(..., description="Indivisible integral 1PS along β")
    levi_partition: tuple[tuple[int, ...], ...] = Field(
        ..., description="Run lengths of equal β coordinates per GL block"
    )
    dim_unipotent: int = Field(..., ge=0)
    weight_count: int = Field(..., gt=0)
    nonempty: bool | None = Field(default=None, description="None until decided")
    levi_strata: tuple[LeviStratum, ...] = ()

    @model_validator(mode="after")
    def _check_index_sets(self) -> "Stratum":
        if set(self.z_indices) & set(self.w_indices):
            raise ValueError("Z and W index sets overlap")
        if tuple(sorted(self.z_indices + self.w_indices)) != self.y_indices:
            raise ValueError("Y must be the union of Z and W")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def dim_stratum_projective(self) -> int | None:
        """Dimension of the stratum in P(V); None when empty or undecided."""
        if not self.nonempty:
            return None
        return self.dim_unipotent + len(self.y_indices) - 1

    @computed_field  # type: ignore[prop-decorator]
    @property
    def codimension(self) -> int | None:
        """Codimension in P(V); None when empty or undecided."""
        dimension = self.dim_stratum_projective
        if dimension is None:
            return None
        return self.weight_count - 1 - dimension


def level_decomposition(pairings: Sequence[Fraction], critical: Fraction) -> LevelDecomposition:
    """Group pairings into levels over their least common denominator."""
    distinct = sorted(set(pairings))
    m0 = lcm(*(value.denominator for value in distinct))
    return LevelDecomposition(
        m0=m0,
        levels=tuple(int(value * m0) for value in distinct),
        multiplicities=tuple(sum(1 for p in pairings if p == value) for value in distinct),
        critical_index=distinct.index(critical) + 1,
    )


def levi_partition(beta: Sequence[Fraction], gl_ranges: Sequence[Run]) -> tuple[tuple[int, ...], ...]:
    """Per GL block, lengths of the runs of equal β coordinates."""
    partition = []
    for start, stop in gl_ranges:
        runs = refine_runs([(start, stop)], beta)
        partition.append(tuple(b - a for a, b in runs))
    return tuple(partition)


def split_by_level(
    points: Sequence[Vector], beta: Vector, m: MetricForm
) -> tuple[list[int], list[int], list[Fraction], Fraction]:
    """Indices at level ‖β‖² and above it, every pairing, and ‖β‖²."""
    value = inner(beta, beta, m)
    pairings = [inner(gamma, beta, m) for gamma in points]
    z = [i for i, p in enumerate(pairings) if p == value]
    w = [i for i, p in enumerate(pairings) if p > value]
    return z, w, pairings, value


def is_minimal_combination(points: Sequence[Vector], z: Sequence[int], beta: Vector, m: MetricForm) -> bool:
    """Whether the Z-level points have ``beta`` as their minimum-norm point."""
    if not z:
        return False
    return tuple(min_norm_point([points[i] for i in z], m).point) == tuple(beta)


def describe_stratum(beta: Sequence[Fraction], ws: WeightSystem) -> Stratum:
    """
    Describe the stratum indexed by a dominant candidate ``beta``.

    Pairings ``⟨γ_i, β⟩`` are sorted into levels; Z/W/Y come from comparing
    each pairing with ``‖β‖²``. The Levi partition follows runs of equal
    β coordinates and ``dim_unipotent`` counts same-block coordinate pairs
    on which β differs. Nonemptiness is left undecided.

    Raises:
        ZeroVector: if ``beta`` is zero
        NotDominant: if ``beta`` is not ascending within every GL block
        ValueError: if ``beta`` is not a minimal combination of the weights
    """
    vector: Vector = tuple(Fraction(c) for c in beta)
    if not any(vector):
        raise ZeroVector("the zero vector does not index an unstable stratum")
    ranges = ws.blocks.gl_ranges
    ws.blocks.check_trace_zero(vector)
    if not is_sorted_within_runs(vector, ranges):
        raise NotDominant(f"{vector} is not in the dominant chamber")

    z, w, pairings, value = split_by_level(ws.weights, vector, ws.metric)
    if not is_minimal_combination(ws.weights, z, vector, ws.metric):
        raise ValueError("vector is not a minimal combination of the weights")

    return Stratum(
        beta=vector,
        norm_squared=value,
        decomposition=level_decomposition(pairings, value),
        z_indices=tuple(z),
        w_indices=tuple(w),
        y_indices=tuple(sorted(z + w)),
        lambda_beta=indivisible_integer_multiple(vector),
        levi_partition=levi_partition(vector, ranges),
        dim_unipotent=unipotent_dimension(vector, ranges),
        weight_count=len(ws),
    )
