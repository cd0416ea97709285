"""Torus moment map and the torus-level k-stability test."""

from fractions import Fraction

from src.geometry.hull import origin_in_interior
from src.geometry.rational import Vector
from src.instability.points import RationalPoint
from src.rep.weights import WeightSystem


def moment(x: RationalPoint, ws: WeightSystem) -> Vector:
    """
    Torus moment map ``Σ x_i² γ_i / Σ x_i²``.

    The result is a convex combination of the support weights.
    """
    support = x.support(ws)
    squares = {i: x.value(ws.entries[i].label) ** 2 for i in support}
    total = sum(squares.values(), Fraction(0))
    return tuple(
        sum((q * ws.weights[i][k] for i, q in squares.items()), Fraction(0)) / total
        for k in range(ws.blocks.dimension)
    )


def is_k_stable_torus(x: RationalPoint, ws: WeightSystem) -> bool:
    """
    Whether 0 is interior to the support hull inside the trace-zero space.

    Only the identity translate is tested, so this is a necessary condition
    for k-stability.
    """
    support = x.support(ws)
    return origin_in_interior(
        [ws.weights[i] for i in support], ws.metric, ws.blocks.ambient_rank
    )
