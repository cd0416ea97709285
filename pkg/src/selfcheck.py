"""Randomized self-check suites.

Each suite is deterministic for a given seed and reports pass/fail counts
instead of raising, so the ``check`` command can summarize all of them.

- oracle: Wolfe solver against the brute-force KKT oracle
- duality: ν² at the optimal 1PS equals ‖β_x‖² and bounds every other 1PS
- invariance: Weyl permutation, uniform metric scaling and the moment bound
"""

import random
from collections import Counter
from collections.abc import Callable, Sequence
from fractions import Fraction
from math import ceil

import structlog
from pydantic import BaseModel, Field

from src.errors import InvariantViolation
from src.geometry.hull import contains_origin
from src.geometry.metric import MetricForm, inner
from src.geometry.min_norm import min_norm_oracle, min_norm_point
from src.geometry.rational import Vector, format_vector
from src.instability.moment import moment
from src.instability.numerical import beta_of_point, nu_squared
from src.instability.points import OnePS, RationalPoint
from src.rep.blocks import BlockStructure, TorusBlock
from src.rep.examples import load_example
from src.rep.weights import WeightEntry, WeightSystem
from src.strata.stratification import StratificationResult, stratify

logger = structlog.get_logger(__name__)

MAX_REPORTED_FAILURES = 10
SCALING_FACTORS = (Fraction(2), Fraction(3), Fraction(1, 5))
INVARIANCE_EXAMPLES = ("binary-cubic", "binary-quadratic", "sym2k3-x-k2", "quad-plus-vector(3,4)")


class SuiteResult(BaseModel):
    """Outcome of one self-check suite."""

    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, condition: bool, message: str | Callable[[], str]) -> None:
        if condition:
            self.passed += 1
            return
        self.failed += 1
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(message() if callable(message) else message)


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _random_metric(rng: random.Random, dimension: int) -> MetricForm:
    kind = rng.choice(("identity", "diagonal", "dense"))
    if kind == "identity":
        return MetricForm.identity(dimension)
    if kind == "diagonal":
        return MetricForm.diagonal([Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(dimension)])
    # L·Lᵀ with a positive diagonal on L
    lower = [
        [
            Fraction(rng.randint(1, 5)) if i == j else (Fraction(rng.randint(-3, 3)) if j < i else Fraction(0))
            for j in range(dimension)
        ]
        for i in range(dimension)
    ]
    gram = [
        [sum((lower[i][k] * lower[j][k] for k in range(dimension)), Fraction(0)) for j in range(dimension)]
        for i in range(dimension)
    ]
    return MetricForm(dimension=dimension, gram=gram)


def oracle_suite(instances: int, seed: int) -> SuiteResult:
    """Compare the Wolfe solver with the exhaustive oracle on random inputs."""
    rng = random.Random(seed)
    suite = SuiteResult(name="oracle")
    for number in range(instances):
        dimension = rng.randint(1, 5)
        count = rng.randint(1, 10)
        points = [tuple(_random_rational(rng) for _ in range(dimension)) for _ in range(count)]
        metric = _random_metric(rng, dimension)
        try:
            fast = min_norm_point(points, metric)
            slow = min_norm_oracle(points, metric)
        except InvariantViolation as exc:
            suite.record(False, f"instance {number}: {exc}")
            continue
        suite.record(
            fast.point == slow.point and fast.norm_squared == slow.norm_squared,
            lambda: f"instance {number}: solver {format_vector(fast.point)} != oracle {format_vector(slow.point)}",
        )
    return suite


def random_one_ps(rng: random.Random, blocks: BlockStructure, bound: int = 5) -> OnePS:
    """Uniform nonzero integral 1PS with entries in ``[-bound, bound]``, trace-zero per GL block."""
    while True:
        entries: list[int] = []
        for block, start, stop in blocks.spans:
            width = stop - start
            if isinstance(block, TorusBlock):
                entries.append(rng.randint(-bound, bound))
                continue
            head = [rng.randint(-bound, bound) for _ in range(width - 1)]
            last = -sum(head)
            if abs(last) > bound:
                break
            entries.extend([*head, last])
        else:
            if any(entries):
                return OnePS(direction=tuple(entries))


def random_point(rng: random.Random, ws: WeightSystem, max_support: int) -> RationalPoint:
    """Random point with a nonempty random support of at most ``max_support`` weights."""
    size = rng.randint(1, min(max_support, len(ws)))
    chosen = rng.sample(range(len(ws)), size)
    coords = {}
    for index in sorted(chosen):
        value = Fraction(0)
        while value == 0:
            value = _random_rational(rng)
        coords[ws.entries[index].label] = value
    return RationalPoint(coords=coords)


def duality_suite(supports: int, lambdas: int, seed: int, example: str = "sym2k3-x-k2") -> SuiteResult:
    """
    Kempf duality over the maximal torus on random points of ``example``.

    For every unstable point the optimal 1PS attains ``‖β_x‖²`` and random
    1PS never exceed it; semistable points must agree with the origin test.
    """
    ws = load_example(example)
    rng = random.Random(seed)
    suite = SuiteResult(name="duality")
    per_point = max(1, ceil(lambdas / max(supports, 1)))
    unstable = 0
    attempts = 0
    while unstable < supports and attempts < 20 * max(supports, 1):
        attempts += 1
        x = random_point(rng, ws, max_support=6)
        classification = beta_of_point(x, ws)
        support_weights = [ws.weights[i] for i in classification.support]
        suite.record(
            contains_origin(support_weights, ws.metric).contains == classification.semistable,
            lambda: f"membership mismatch for {x.coords}",
        )
        if classification.semistable:
            continue
        unstable += 1
        bound = classification.norm_squared
        optimal = OnePS(direction=classification.torus_lambda)
        suite.record(
            nu_squared(x, optimal, ws) == bound,
            lambda: f"ν² at the optimal 1PS differs from ‖β‖² = {bound} for {x.coords}",
        )
        for _ in range(per_point):
            lam = random_one_ps(rng, ws.blocks)
            suite.record(
                nu_squared(x, lam, ws) <= bound,
                lambda: f"1PS {lam.direction} exceeds ‖β‖² = {bound} for {x.coords}",
            )
    logger.debug("duality_suite", unstable=unstable, attempts=attempts)
    return suite


def _signature(result: StratificationResult) -> Counter[tuple[Fraction, int, int, tuple[tuple[int, ...], ...]]]:
    return Counter(
        (s.norm_squared, len(s.z_indices), len(s.w_indices), s.levi_partition) for s in result.candidates
    )


def permuted_system(ws: WeightSystem, rng: random.Random) -> WeightSystem:
    """Apply one random coordinate permutation per GL block to every weight."""
    permutation = list(range(ws.blocks.dimension))
    for start, stop in ws.blocks.gl_ranges:
        segment = permutation[start:stop]
        rng.shuffle(segment)
        permutation[start:stop] = segment
    entries = tuple(
        WeightEntry(label=e.label, coords=tuple(e.coords[i] for i in permutation)) for e in ws.entries
    )
    return WeightSystem(blocks=ws.blocks, entries=entries, metric_scales=ws.metric_scales)


def scaled_system(ws: WeightSystem, factor: Fraction) -> WeightSystem:
    """Multiply every per-block metric scale by ``factor``."""
    current: Sequence[Fraction] = ws.metric_scales or [Fraction(1)] * len(ws.blocks.blocks)
    return ws.with_metric_scales([factor * s for s in current])


def _strata_data(result: StratificationResult) -> list[tuple[Vector, tuple[int, ...], tuple[int, ...], bool | None]]:
    return [(s.beta, s.z_indices, s.w_indices, s.nonempty) for s in result.candidates]


def invariance_suite(seed: int, examples: Sequence[str] = INVARIANCE_EXAMPLES, points: int = 20) -> SuiteResult:
    """Weyl invariance, metric scaling and the moment bound on built-in examples."""
    rng = random.Random(seed)
    suite = SuiteResult(name="invariance")
    for name in examples:
        ws = load_example(name)
        base = stratify(ws)

        permuted = stratify(permuted_system(ws, rng))
        suite.record(_signature(base) == _signature(permuted), f"{name}: Weyl permutation changed the strata")

        for factor in SCALING_FACTORS:
            scaled = stratify(scaled_system(ws, factor))
            suite.record(
                _strata_data(scaled) == _strata_data(base)
                and all(a.norm_squared == factor * b.norm_squared for a, b in zip(scaled.candidates, base.candidates, strict=True)),
                f"{name}: scaling the metric by {factor} changed the strata",
            )

        for _ in range(points):
            x = random_point(rng, ws, max_support=len(ws))
            classification = beta_of_point(x, ws)
            if classification.semistable:
                continue
            image = moment(x, ws)
            suite.record(
                inner(image, image, ws.metric) >= classification.norm_squared,
                lambda: f"{name}: moment bound fails for {x.coords}",
            )
    return suite


def run_checks(
    seed: int, oracle_instances: int, duality_supports: int, duality_lambdas: int
) -> list[SuiteResult]:
    """Run every suite with the given sizes."""
    results = [
        oracle_suite(oracle_instances, seed),
        duality_suite(duality_supports, duality_lambdas, seed),
        invariance_suite(seed),
    ]
    for result in results:
        logger.info("self_check", suite=result.name, passed=result.passed, failed=result.failed)
    return results
