"""Block structure of the torus of a product of general linear groups.

Coordinates are grouped into GL(n) blocks (trace-zero, Weyl group acting by
permutations) and optional extra one-dimensional torus coordinates carrying
their own metric scale.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.errors import DimensionMismatch, WeightSystemError
from src.geometry.metric import MetricForm
from src.geometry.rational import RationalStr, Vector

Run = tuple[int, int]


class GLBlock(BaseModel):
    """One GL(n) factor."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: Literal["GL"] = "GL"
    n: int = Field(..., ge=1, description="Size of the general linear group")


class TorusBlock(BaseModel):
    """One extra scaled torus coordinate."""

    model_config = ConfigDict(extra="forbid", frozen=True, arbitrary_types_allowed=True)

    kind: Literal["torus"] = "torus"
    scale: RationalStr = Field(..., description="Metric weight of the coordinate")

    @field_validator("scale")
    @classmethod
    def _positive(cls, value: Fraction) -> Fraction:
        if value <= 0:
            raise WeightSystemError(f"torus scale must be positive, got {value}")
        return value


Block = Annotated[GLBlock | TorusBlock, Field(discriminator="kind")]


class BlockStructure(BaseModel):
    """Ordered GL blocks and torus coordinates making up the ambient space."""

    model_config = ConfigDict(frozen=True)

    blocks: tuple[Block, ...] = Field(..., min_length=1)

    @classmethod
    def from_sizes(
        cls, gl_blocks: Sequence[int], extra_torus: Sequence[Fraction] = ()
    ) -> "BlockStructure":
        """GL blocks first, then torus coordinates."""
        return cls(
            blocks=(
                *(GLBlock(n=n) for n in gl_blocks),
                *(TorusBlock(scale=s) for s in extra_torus),
            )
        )

    @property
    def gl_blocks(self) -> tuple[int, ...]:
        return tuple(b.n for b in self.blocks if isinstance(b, GLBlock))

    @property
    def extra_torus(self) -> tuple[Fraction, ...]:
        return tuple(b.scale for b in self.blocks if isinstance(b, TorusBlock))

    @property
    def spans(self) -> list[tuple[Block, int, int]]:
        """Each block with its ``[start, stop)`` coordinate range."""
        result = []
        start = 0
        for block in self.blocks:
            width = block.n if isinstance(block, GLBlock) else 1
            result.append((block, start, start + width))
            start += width
        return result

    @property
    def dimension(self) -> int:
        return sum(b.n if isinstance(b, GLBlock) else 1 for b in self.blocks)

    @property
    def gl_ranges(self) -> list[Run]:
        """Coordinate ranges of the GL blocks, in order."""
        return [(start, stop) for block, start, stop in self.spans if isinstance(block, GLBlock)]

    @property
    def breaks(self) -> list[int]:
        """Coordinate positions where a new block starts (excluding 0)."""
        return [start for _, start, _ in self.spans[1:]]

    @property
    def ambient_rank(self) -> int:
        """Dimension of the trace-zero ambient space."""
        return sum(n - 1 for n in self.gl_blocks) + len(self.extra_torus)

    def base_metric(self, scales: Sequence[Fraction] | None = None) -> MetricForm:
        """
        Block-diagonal metric: identity on GL blocks, torus scales on torus
        coordinates, each block multiplied by its entry of ``scales``.
        """
        if scales is not None and len(scales) != len(self.blocks):
            raise WeightSystemError(
                f"metric_scales has {len(scales)} entries, expected one per block ({len(self.blocks)})"
            )
        diagonal: list[Fraction] = []
        for index, (block, start, stop) in enumerate(self.spans):
            factor = Fraction(1) if scales is None else Fraction(scales[index])
            if factor <= 0:
                raise WeightSystemError(f"metric scale of block {index + 1} must be positive")
            if isinstance(block, TorusBlock):
                diagonal.append(factor * block.scale)
            else:
                diagonal.extend([factor] * (stop - start))
        return MetricForm.diagonal(diagonal)

    def check_trace_zero(self, coords: Sequence[Fraction]) -> None:
        """Raise unless every GL block of ``coords`` sums to zero."""
        if len(coords) != self.dimension:
            raise DimensionMismatch(
                f"vector has {len(coords)} coordinates, block structure has {self.dimension}"
            )
        for number, (start, stop) in enumerate(self.gl_ranges, start=1):
            total = sum(coords[start:stop], Fraction(0))
            if total != 0:
                raise WeightSystemError(
                    f"block {number} coordinates sum to {total}, expected 0"
                )


def sort_within_runs(v: Sequence[Fraction], runs: Sequence[Run]) -> tuple[Vector, tuple[int, ...]]:
    """
    Sort ``v`` ascending inside each run, leaving other coordinates fixed.

    Returns:
        The sorted vector and the permutation as a source-index list:
        ``sorted[k] == v[permutation[k]]``. The sort is stable, so an
        already sorted vector gets the identity.
    """
    permutation = list(range(len(v)))
    for start, stop in runs:
        permutation[start:stop] = sorted(range(start, stop), key=lambda i: v[i])
    return tuple(Fraction(v[i]) for i in permutation), tuple(permutation)


def dominant_representative(
    v: Sequence[Fraction], blocks: BlockStructure
) -> tuple[Vector, tuple[int, ...]]:
    """
    Canonical Weyl-chamber representative: ascending within each GL block.

    Args:
        v: Vector of the ambient dimension
        blocks: Block structure

    Returns:
        The dominant vector and the source-index permutation applied
    """
    if len(v) != blocks.dimension:
        raise DimensionMismatch(
            f"vector has {len(v)} coordinates, block structure has {blocks.dimension}"
        )
    return sort_within_runs(v, blocks.gl_ranges)


def is_sorted_within_runs(v: Sequence[Fraction], runs: Sequence[Run]) -> bool:
    return all(v[i] <= v[i + 1] for start, stop in runs for i in range(start, stop - 1))


def permute(v: Sequence[Fraction], permutation: Sequence[int]) -> Vector:
    """Apply a source-index permutation: ``result[k] = v[permutation[k]]``."""
    return tuple(v[i] for i in permutation)


def refine_runs(runs: Sequence[Run], beta: Sequence[Fraction]) -> list[Run]:
    """Split every run where consecutive coordinates of ``beta`` differ."""
    refined: list[Run] = []
    for start, stop in runs:
        begin = start
        for i in range(start + 1, stop):
            if beta[i] != beta[i - 1]:
                refined.append((begin, i))
                begin = i
        refined.append((begin, stop))
    return refined


def unipotent_dimension(beta: Sequence[Fraction], runs: Sequence[Run]) -> int:
    """Unordered same-run coordinate pairs on which ``beta`` differs."""
    count = 0
    for start, stop in runs:
        for i in range(start, stop):
            for j in range(i + 1, stop):
                if beta[i] != beta[j]:
                    count += 1
    return count
