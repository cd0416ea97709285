"""Enumeration of minimal combinations of weights.

A candidate is the dominant representative of the minimum-norm point of
the hull of some subset of the weights. Two scans produce the same list:

- ``subsets`` solves every nonempty subset (2^N - 1 solves)
- ``corral`` only solves affinely independent subsets and keeps those whose
  affine minimizer has positive coefficients; these are exactly the
  minimum-norm points of all subsets
"""

from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations
from typing import Literal

import structlog

from src.errors import EnumerationCapExceeded
from src.geometry.metric import MetricForm, inner
from src.geometry.min_norm import corral_points, min_norm_point
from src.geometry.rational import Vector
from src.rep.blocks import Run, sort_within_runs
from src.rep.weights import WeightSystem

logger = structlog.get_logger(__name__)

EnumerationMethod = Literal["corral", "subsets"]

DEFAULT_CAP = 20


def candidate_key(beta: Vector, m: MetricForm) -> tuple[Fraction, Vector]:
    """Sort key: norm squared, then lexicographic coordinates."""
    return inner(beta, beta, m), beta


def minimal_combinations(
    points: Sequence[Vector],
    m: MetricForm,
    runs: Sequence[Run],
    method: EnumerationMethod = "corral",
) -> list[Vector]:
    """
    Nonzero minimum-norm points of all subsets, sorted within ``runs``.

    Args:
        points: Weights to combine (may repeat)
        m: Metric
        runs: Coordinate runs the Weyl group permutes
        method: ``corral`` or ``subsets``

    Returns:
        Distinct canonical candidates ordered by norm, then coordinates
    """
    unique = list(dict.fromkeys(points))
    raw: list[Vector] = []
    if method == "corral":
        raw = [c.point for c in corral_points(unique, m)]
    elif method == "subsets":
        for size in range(1, len(unique) + 1):
            for subset in combinations(unique, size):
                raw.append(min_norm_point(subset, m).point)
    else:
        raise ValueError(f"unknown enumeration method {method!r}")

    canonical = {sort_within_runs(p, runs)[0] for p in raw if any(p)}
    result = sorted(canonical, key=lambda beta: candidate_key(beta, m))
    logger.debug(
        "minimal_combinations",
        method=method,
        points=len(unique),
        solved=len(raw),
        candidates=len(result),
    )
    return result


def enumerate_candidates(
    ws: WeightSystem, cap: int = DEFAULT_CAP, method: EnumerationMethod = "corral"
) -> list[Vector]:
    """
    Enumerate the dominant minimal combinations of the weights of ``ws``.

    Args:
        ws: Weight system
        cap: Largest number of weights accepted
        method: ``corral`` (default) or the literal ``subsets`` scan

    Returns:
        Sorted list of distinct nonzero dominant candidates

    Raises:
        EnumerationCapExceeded: if ``ws`` has more than ``cap`` weights
    """
    if len(ws) > cap:
        raise EnumerationCapExceeded(len(ws), cap)
    return minimal_combinations(ws.weights, ws.metric, ws.blocks.gl_ranges, method)
