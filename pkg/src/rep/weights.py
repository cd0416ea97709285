"""Weight systems: labeled weights of a representation plus its metric.

Weight systems come from two places: the representation-expression
builder (:func:`weights_of`) and explicit-weight documents
(:func:`load_weight_system`). Both produce the same validated model.
"""

from collections import Counter
from collections.abc import Mapping, Sequence
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Any

import orjson
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from src.errors import WeightSystemError
from src.geometry.metric import MetricForm
from src.geometry.rational import RationalStr, Vector, format_rational
from src.rep.blocks import Block, BlockStructure
from src.rep.expr import DirectSum, Dual, RepExpr, Std, Sym, Tensor

REPORT_KEYS = frozenset({"system", "strata", "empty_candidates", "semistable_nonempty"})


class WeightEntry(BaseModel):
    """A labeled weight vector."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    label: str = Field(..., min_length=1)
    coords: tuple[RationalStr, ...]


class WeightSystem(BaseModel):
    """Weights of a representation together with the block-diagonal metric."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    blocks: BlockStructure
    entries: tuple[WeightEntry, ...] = Field(..., min_length=1)
    metric_scales: tuple[RationalStr, ...] | None = Field(
        default=None, description="Per-block multipliers of the base metric"
    )

    _metric: MetricForm = PrivateAttr()

    @model_validator(mode="after")
    def _validate(self) -> "WeightSystem":
        seen: set[str] = set()
        for entry in self.entries:
            if entry.label in seen:
                raise WeightSystemError(f"duplicate weight label {entry.label!r}")
            seen.add(entry.label)
            try:
                self.blocks.check_trace_zero(entry.coords)
            except WeightSystemError as exc:
                raise WeightSystemError(f"weight {entry.label!r}: {exc}") from exc
        self._metric = self.blocks.base_metric(self.metric_scales)
        return self

    @property
    def metric(self) -> MetricForm:
        return self._metric

    @property
    def weights(self) -> list[Vector]:
        return [entry.coords for entry in self.entries]

    @property
    def labels(self) -> list[str]:
        return [entry.label for entry in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def index_of(self, label: str) -> int:
        for index, entry in enumerate(self.entries):
            if entry.label == label:
                return index
        raise WeightSystemError(f"unknown weight label {label!r}")

    def labels_of(self, indices: Sequence[int]) -> list[str]:
        return [self.entries[i].label for i in indices]

    def with_metric_scales(self, scales: Sequence[Fraction] | None) -> "WeightSystem":
        """Same weights under different per-block metric multipliers."""
        return WeightSystem(
            blocks=self.blocks,
            entries=self.entries,
            metric_scales=None if scales is None else tuple(scales),
        )

    def is_weyl_invariant(self) -> bool:
        """Whether the weight multiset is stable under every block permutation."""
        counts = Counter(self.weights)
        for start, stop in self.blocks.gl_ranges:
            for i in range(start, stop - 1):
                swapped = Counter(
                    w[:i] + (w[i + 1], w[i]) + w[i + 2 :] for w in self.weights
                )
                if swapped != counts:
                    return False
        return True


def _unit_weights(blocks: BlockStructure, block_index: int) -> list[Vector]:
    ranges = blocks.gl_ranges
    if not 1 <= block_index <= len(ranges):
        raise WeightSystemError(
            f"block index {block_index} out of range: structure has {len(ranges)} GL blocks"
        )
    start, stop = ranges[block_index - 1]
    n = stop - start
    shift = Fraction(1, n)
    vectors = []
    for j in range(n):
        coords = [Fraction(0)] * blocks.dimension
        for k in range(start, stop):
            coords[k] = (1 if k - start == j else 0) - shift
        vectors.append(tuple(coords))
    return vectors


def _expand(expr: RepExpr, blocks: BlockStructure) -> list[tuple[tuple[str, ...], Vector]]:
    match expr:
        case Std(block=block):
            return [((str(j),), v) for j, v in enumerate(_unit_weights(blocks, block), start=1)]
        case Dual(base=base):
            return [(parts, tuple(-c for c in v)) for parts, v in _expand(base, blocks)]
        case Sym(degree=degree, base=base):
            units = _unit_weights(blocks, base.block)
            result = []
            for monomial in combinations_with_replacement(range(len(units)), degree):
                coords = tuple(
                    sum((units[j][k] for j in monomial), Fraction(0))
                    for k in range(blocks.dimension)
                )
                result.append((("".join(str(j + 1) for j in monomial),), coords))
            return result
        case Tensor(factors=factors):
            ordered = sorted(factors, key=lambda f: 0 if isinstance(f, (Std, Dual)) else 1)
            expanded = [_expand(f, blocks) for f in ordered]
            result = []
            for combo in product(*expanded):
                parts = tuple(p for item_parts, _ in combo for p in item_parts)
                coords = tuple(
                    sum((v[k] for _, v in combo), Fraction(0)) for k in range(blocks.dimension)
                )
                result.append((parts, coords))
            return result
        case DirectSum(summands=summands):
            return [
                ((str(index), *parts), v)
                for index, summand in enumerate(summands, start=1)
                for parts, v in _expand(summand, blocks)
            ]
    raise TypeError(f"not a representation expression: {expr!r}")


def weight_label(parts: Sequence[str]) -> str:
    """``("1", "11") -> "x_1,11"``."""
    return "x_" + ",".join(parts)


def weights_of(
    expr: RepExpr, blocks: BlockStructure, metric_scales: Sequence[Fraction] | None = None
) -> WeightSystem:
    """
    Build the weight system of a representation expression.

    ``Std`` on an n-block gives ``e_j - (1/n)·(1,…,1)``; ``Dual`` negates;
    ``Sym`` gives one weight per degree-d monomial; ``Tensor`` adds weights
    across blocks (standard and dual factors first in the label); ``DirectSum``
    concatenates and prefixes the summand index. Extra torus coordinates are
    zero.

    Raises:
        WeightSystemError: if a block index is out of range
    """
    entries = tuple(
        WeightEntry(label=weight_label(parts), coords=coords)
        for parts, coords in _expand(expr, blocks)
    )
    return WeightSystem(
        blocks=blocks,
        entries=entries,
        metric_scales=None if metric_scales is None else tuple(metric_scales),
    )


class _WeightRow(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    label: str = Field(..., min_length=1)
    coords: list[RationalStr]


class WeightDocument(BaseModel):
    """Schema of an explicit-weight document."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    blocks: list[Block] = Field(..., min_length=1)
    weights: list[_WeightRow] = Field(..., min_length=1)
    metric_scales: list[RationalStr] | None = None


def load_weight_system(document: Mapping[str, Any] | str | bytes) -> WeightSystem:
    """
    Validate an explicit-weight document and build its weight system.

    A structured ``compute`` report (keys exactly ``system``, ``strata``,
    ``empty_candidates``, ``semistable_nonempty``) is also accepted; its
    ``system`` member is loaded.

    Raises:
        ValueError: on malformed text, schema violations, bad rationals,
            duplicate labels or trace-zero violations
    """
    if isinstance(document, (str, bytes)):
        try:
            document = orjson.loads(document)
        except orjson.JSONDecodeError as exc:
            raise WeightSystemError(f"weight document is not valid JSON: {exc}") from exc
    if not isinstance(document, Mapping):
        raise WeightSystemError("weight document must be an object")
    if set(document) == REPORT_KEYS:
        document = document["system"]

    parsed = WeightDocument.model_validate(document)
    return WeightSystem(
        blocks=BlockStructure(blocks=tuple(parsed.blocks)),
        entries=tuple(WeightEntry(label=row.label, coords=tuple(row.coords)) for row in parsed.weights),
        metric_scales=None if parsed.metric_scales is None else tuple(parsed.metric_scales),
    )


def weight_document(ws: WeightSystem) -> dict[str, Any]:
    """Serialize a weight system as an explicit-weight document."""
    document: dict[str, Any] = {
        "blocks": [block.model_dump(mode="json") for block in ws.blocks.blocks],
        "weights": [
            {"label": entry.label, "coords": [format_rational(c) for c in entry.coords]}
            for entry in ws.entries
        ],
    }
    if ws.metric_scales is not None:
        document["metric_scales"] = [format_rational(s) for s in ws.metric_scales]
    return document
