"""Exact rational scalars and their text form.

Every number in the core is a :class:`fractions.Fraction`. Rationals cross
file and command-line boundaries only as strings ``"p/q"`` or ``"p"``; there
is no floating point anywhere.
"""

import re
from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import gcd, lcm
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer

from src.errors import WeightSystemError

Vector = tuple[Fraction, ...]

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value: Any) -> Fraction:
    """
    Parse a rational literal.

    Accepts ``Fraction`` and ``int`` instances unchanged and strings of the
    form ``"p/q"`` or ``"p"`` with the sign on the numerator. Floats, booleans
    and anything else are rejected.

    Raises:
        WeightSystemError: if the literal is malformed or has a zero
            denominator.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if not isinstance(value, str):
        raise WeightSystemError(
            f"rational literal must be a string 'p/q' or 'p', got {value!r}"
        )
    match = _RATIONAL_PATTERN.match(value)
    if match is None:
        raise WeightSystemError(f"bad rational literal {value!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise WeightSystemError(f"bad rational literal {value!r}: zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when integral."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Sequence[Fraction], breaks: Iterable[int] = ()) -> str:
    """
    Render a vector as ``(a,b,c;d,e)``.

    Args:
        vector: Coordinates to render
        breaks: Coordinate positions before which a ``;`` separator goes
    """
    stops = set(breaks)
    parts: list[str] = []
    for index, value in enumerate(vector):
        if index:
            parts.append(";" if index in stops else ",")
        parts.append(format_rational(value))
    return "(" + "".join(parts) + ")"


def parse_vector(values: Iterable[Any]) -> Vector:
    """Parse every entry of ``values`` with :func:`parse_rational`."""
    return tuple(parse_rational(v) for v in values)


def indivisible_integer_multiple(vector: Sequence[Fraction]) -> tuple[int, ...]:
    """
    Return the unique positive multiple of ``vector`` with coprime integer entries.

    Denominators are cleared with their lcm and the result divided by the
    gcd of its entries.
    """
    if not any(vector):
        raise ValueError("the zero vector has no indivisible multiple")
    scale = lcm(*(value.denominator for value in vector))
    integers = [int(value * scale) for value in vector]
    divisor = gcd(*integers)
    return tuple(entry // divisor for entry in integers)


# Pydantic field type: parses "p/q" strings on input, renders them on output
RationalStr = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]
