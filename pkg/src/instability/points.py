"""Rational points and one-parameter subgroups at torus level."""

import re
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.errors import DimensionMismatch, WeightSystemError, ZeroVector
from src.geometry.rational import RationalStr, parse_rational
from src.rep.blocks import BlockStructure
from src.rep.weights import WeightSystem

_ASSIGNMENT = re.compile(r"\s*(?P<label>[^=]+?)\s*=\s*(?P<value>[-+]?\d+(?:\s*/\s*\d+)?)\s*(?:,|$)")
_INTEGER = re.compile(r"^\s*[-+]?\d+\s*$")


class RationalPoint(BaseModel):
    """A point of V given by its nonzero coordinates, keyed by weight label."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    coords: dict[str, RationalStr] = Field(
        default_factory=dict, description="Coordinate values; absent labels are zero"
    )

    def support(self, ws: WeightSystem) -> tuple[int, ...]:
        """Indices of the weights whose coordinate is nonzero.

        Raises:
            WeightSystemError: for a label not in ``ws``
            ZeroVector: if every coordinate is zero
        """
        for label in self.coords:
            ws.index_of(label)
        indices = tuple(
            i for i, label in enumerate(ws.labels) if self.coords.get(label, 0) != 0
        )
        if not indices:
            raise ZeroVector("the point is zero")
        return indices

    def value(self, label: str) -> Fraction:
        return self.coords.get(label, Fraction(0))


class OnePS(BaseModel):
    """Integral cocharacter of the maximal torus, trace-zero per GL block."""

    model_config = ConfigDict(frozen=True)

    direction: tuple[int, ...] = Field(..., min_length=1)

    @field_validator("direction")
    @classmethod
    def _nonzero(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not any(value):
            raise ZeroVector("a one-parameter subgroup must be nonzero")
        return value

    def check_blocks(self, blocks: BlockStructure) -> None:
        """Raise unless the direction fits ``blocks`` and is trace-zero."""
        if len(self.direction) != blocks.dimension:
            raise DimensionMismatch(
                f"1PS has {len(self.direction)} entries, expected {blocks.dimension}"
            )
        blocks.check_trace_zero([Fraction(c) for c in self.direction])

    @property
    def vector(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.direction)


def parse_point(text: str) -> RationalPoint:
    """
    Parse ``"label=p/q,label=p/q,…"``.

    Labels may themselves contain commas (``x_2,33``); a comma only ends an
    assignment when it follows a value.

    Raises:
        WeightSystemError: on malformed text or a repeated label
    """
    coords: dict[str, Fraction] = {}
    position = 0
    stripped = text.strip()
    if not stripped:
        raise WeightSystemError("point must assign at least one coordinate")
    while position < len(stripped):
        match = _ASSIGNMENT.match(stripped, position)
        if match is None or match.end() == position:
            raise WeightSystemError(f"bad point syntax at offset {position}: {stripped[position:]!r}")
        label = match.group("label")
        if label in coords:
            raise WeightSystemError(f"coordinate {label!r} assigned twice")
        coords[label] = parse_rational(match.group("value").replace("+", "", 1))
        position = match.end()
    return RationalPoint(coords=coords)


def parse_lambda(text: str, blocks: BlockStructure) -> OnePS:
    """
    Parse ``"c1,c2,…"`` into a 1PS checked against ``blocks``.

    Raises:
        WeightSystemError: for non-integer entries or a trace violation
        DimensionMismatch: for the wrong number of entries
    """
    parts = text.split(",")
    if not all(_INTEGER.match(p) for p in parts):
        raise WeightSystemError(f"1PS entries must be integers, got {text!r}")
    lam = OnePS(direction=tuple(int(p) for p in parts))
    lam.check_blocks(blocks)
    return lam
