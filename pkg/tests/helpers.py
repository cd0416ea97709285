"""Small constructors shared by the tests."""

from fractions import Fraction
from pathlib import Path
from typing import Any

import orjson

from src.geometry.rational import Vector, parse_vector
from src.rep.blocks import BlockStructure
from src.rep.weights import WeightEntry, WeightSystem

DATA_DIR = Path(__file__).parent / "data"


def vec(*values: str | int) -> Vector:
    """Shorthand: ``vec("1/2", "-1/2")``."""
    return parse_vector(values)


def explicit_system(
    gl_blocks: list[int], *weights: Vector, torus: tuple[Fraction, ...] = ()
) -> WeightSystem:
    """Weight system with generated labels ``w1, w2, …``."""
    return WeightSystem(
        blocks=BlockStructure.from_sizes(gl_blocks, torus),
        entries=tuple(
            WeightEntry(label=f"w{i}", coords=w) for i, w in enumerate(weights, start=1)
        ),
    )


def load_data(name: str) -> Any:
    """Parse a JSON file from ``tests/data``."""
    return orjson.loads((DATA_DIR / name).read_bytes())
