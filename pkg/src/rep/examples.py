"""Built-in example weight systems.

- ``binary-cubic``: binary cubic forms, explicit weights ±1, ±3 on one
  SL(2) block (q ↦ (-q, q))
- ``binary-quadratic``: binary quadratic forms, weights 2, 0, -2
- ``sym2k3-x-k2``: Sym²k³ ⊗ k² under GL(3) × GL(2), transcribed weight table
- ``quad-plus-vector(b1,b2[,scale])``: Sym²k² ⊕ k² under GL(2) × GL(1)²,
  the GL(1)² factor folded into one scaled torus coordinate
"""

import re
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict

from src.errors import WeightSystemError
from src.geometry.rational import parse_rational
from src.rep.weights import WeightSystem, load_weight_system

DEFAULT_TORUS_SCALE = Fraction(1, 25)


def _gl(n: int) -> dict[str, Any]:
    return {"kind": "GL", "n": n}


def _row(label: str, *coords: str) -> dict[str, Any]:
    return {"label": label, "coords": list(coords)}


BINARY_CUBIC: dict[str, Any] = {
    "blocks": [_gl(2)],
    "weights": [
        _row("x_111", "3", "-3"),
        _row("x_112", "1", "-1"),
        _row("x_122", "-1", "1"),
        _row("x_222", "-3", "3"),
    ],
}

BINARY_QUADRATIC: dict[str, Any] = {
    "blocks": [_gl(2)],
    "weights": [
        _row("x_11", "2", "-2"),
        _row("x_12", "0", "0"),
        _row("x_22", "-2", "2"),
    ],
}

_SYM2_K3 = {
    "11": ("4/3", "-2/3", "-2/3"),
    "12": ("1/3", "1/3", "-2/3"),
    "13": ("1/3", "-2/3", "1/3"),
    "22": ("-2/3", "4/3", "-2/3"),
    "23": ("-2/3", "1/3", "1/3"),
    "33": ("-2/3", "-2/3", "4/3"),
}
_K2 = {"1": ("1/2", "-1/2"), "2": ("-1/2", "1/2")}

SYM2K3_X_K2: dict[str, Any] = {
    "blocks": [_gl(3), _gl(2)],
    "weights": [
        _row(f"x_{j},{monomial}", *sym, *_K2[j])
        for j in ("1", "2")
        for monomial, sym in _SYM2_K3.items()
    ],
}


def quad_plus_vector_document(
    b1: int, b2: int, scale: Fraction = DEFAULT_TORUS_SCALE
) -> dict[str, Any]:
    """
    Sym²k² ⊕ k² with the GL(1)² action folded into one torus coordinate.

    The kernel identification sends ``α`` to ``(α^{b2}, α^{-b1})`` so the
    quadratic summand carries torus weight ``b2`` and the vector summand
    ``-b1``.

    Raises:
        WeightSystemError: unless ``b1, b2 > 0`` and ``2·b1 > b2``
    """
    if b1 <= 0 or b2 <= 0 or 2 * b1 <= b2:
        raise WeightSystemError(
            f"quad-plus-vector needs positive b1, b2 with 2*b1 > b2, got b1={b1}, b2={b2}"
        )
    q, v = str(b2), str(-b1)
    return {
        "blocks": [_gl(2), {"kind": "torus", "scale": str(scale)}],
        "weights": [
            _row("x_1,11", "1", "-1", q),
            _row("x_1,12", "0", "0", q),
            _row("x_1,22", "-1", "1", q),
            _row("x_2,1", "1/2", "-1/2", v),
            _row("x_2,2", "-1/2", "1/2", v),
        ],
    }


class ExampleInfo(BaseModel):
    """Catalogue entry for a built-in example."""

    model_config = ConfigDict(frozen=True)

    name: str
    group: str
    representation: str
    weight_count: int


_FIXED: dict[str, tuple[str, str, dict[str, Any]]] = {
    "binary-cubic": ("GL(2)", "Sym³k²", BINARY_CUBIC),
    "binary-quadratic": ("GL(2)", "Sym²k²", BINARY_QUADRATIC),
    "sym2k3-x-k2": ("GL(3) x GL(2)", "Sym²k³ ⊗ k²", SYM2K3_X_K2),
}

_QUAD_PLUS_VECTOR = re.compile(
    r"^quad-plus-vector\(\s*(\d+)\s*,\s*(\d+)\s*(?:,\s*([^)]+?)\s*)?\)$"
)


def list_examples() -> list[ExampleInfo]:
    """Every built-in example, in a fixed order."""
    catalogue = [
        ExampleInfo(
            name=name,
            group=group,
            representation=rep,
            weight_count=len(document["weights"]),
        )
        for name, (group, rep, document) in _FIXED.items()
    ]
    catalogue.append(
        ExampleInfo(
            name="quad-plus-vector(b1,b2[,scale])",
            group="GL(2) x GL(1)^2",
            representation="Sym²k² ⊕ k²",
            weight_count=5,
        )
    )
    return catalogue


def load_example(
    name: str, default_torus_scale: Fraction = DEFAULT_TORUS_SCALE
) -> WeightSystem:
    """
    Load a built-in example by name.

    Args:
        name: One of the fixed names or ``quad-plus-vector(b1,b2[,scale])``
        default_torus_scale: Torus scale when the name gives none

    Raises:
        WeightSystemError: for unknown names or bad parameters
    """
    key = name.strip()
    if key in _FIXED:
        return load_weight_system(_FIXED[key][2])
    match = _QUAD_PLUS_VECTOR.match(key)
    if match:
        scale = (
            parse_rational(match.group(3)) if match.group(3) else default_torus_scale
        )
        return load_weight_system(
            quad_plus_vector_document(int(match.group(1)), int(match.group(2)), scale)
        )
    known = ", ".join([*_FIXED, "quad-plus-vector(b1,b2[,scale])"])
    raise WeightSystemError(f"unknown example {name!r}; known examples: {known}")

