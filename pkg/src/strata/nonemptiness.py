"""Recursive nonemptiness test for strata.

S_β is nonempty exactly when Z_β contains a point that is semistable for
the Levi subgroup G_β. That is decided by stratifying Z_β itself: the Z
weights are shifted by -β (which puts them in β's orthogonal complement,
every Z pairing being ‖β‖²), the Weyl group shrinks to permutations inside
the runs of equal β coordinates, and the whole construction repeats. The
unstable locus of P(Z_β) is closed and is the union of its strata, so Z_β
has no semistable point exactly when one nonempty sub-stratum reaches the
full dimension ``|Z_β| - 1``.
"""

from collections.abc import Sequence

import structlog

from src.errors import InvariantViolation
from src.geometry.metric import MetricForm
from src.geometry.rational import Vector
from src.rep.blocks import Run, refine_runs, unipotent_dimension
from src.rep.weights import WeightSystem
from src.strata.candidates import EnumerationMethod, minimal_combinations
from src.strata.stratum import LeviStratum, Stratum, split_by_level

logger = structlog.get_logger(__name__)


def is_dense(dim_unipotent: int, y_count: int, ambient_count: int) -> bool:
    """Whether a stratum of the given data fills a projective space of ``ambient_count`` coordinates."""
    return dim_unipotent + y_count - 1 == ambient_count - 1


class _Recursion:
    def __init__(self, m: MetricForm, max_depth: int, method: EnumerationMethod) -> None:
        self.metric = m
        self.max_depth = max_depth
        self.method = method

    def strata(
        self,
        points: Sequence[Vector],
        indices: Sequence[int],
        runs: Sequence[Run],
        depth: int,
    ) -> list[LeviStratum]:
        result = []
        for beta in minimal_combinations(points, self.metric, runs, self.method):
            z, w, _, value = split_by_level(points, beta, self.metric)
            nonempty, children = self.semistable_part(points, indices, z, beta, runs, depth + 1)
            result.append(
                LeviStratum(
                    beta=beta,
                    norm_squared=value,
                    z_indices=tuple(indices[i] for i in z),
                    w_indices=tuple(indices[i] for i in w),
                    dim_unipotent=unipotent_dimension(beta, runs),
                    nonempty=nonempty,
                    levi_strata=tuple(children),
                )
            )
        return result

    def semistable_part(
        self,
        points: Sequence[Vector],
        indices: Sequence[int],
        z: Sequence[int],
        beta: Vector,
        runs: Sequence[Run],
        depth: int,
    ) -> tuple[bool, list[LeviStratum]]:
        """Decide whether Z_β has a G_β-semistable point; return the sub-strata too."""
        if depth > self.max_depth:
            raise InvariantViolation(
                f"nonemptiness recursion exceeded depth {self.max_depth}"
            )
        if not z:
            raise InvariantViolation("a candidate with an empty Z level set")
        shifted = [tuple(a - b for a, b in zip(points[i], beta, strict=True)) for i in z]
        children = self.strata(
            shifted, [indices[i] for i in z], refine_runs(runs, beta), depth
        )
        dense = any(
            child.nonempty and is_dense(child.dim_unipotent, child.y_count, len(z))
            for child in children
        )
        logger.debug(
            "levi_recursion",
            depth=depth,
            z_size=len(z),
            sub_strata=len(children),
            nonempty=not dense,
        )
        return not dense, children


def decide_stratum(
    stratum: Stratum, ws: WeightSystem, method: EnumerationMethod = "corral"
) -> Stratum:
    """Return ``stratum`` with ``nonempty`` and ``levi_strata`` filled in."""
    recursion = _Recursion(ws.metric, len(ws), method)
    nonempty, children = recursion.semistable_part(
        ws.weights,
        list(range(len(ws))),
        list(stratum.z_indices),
        stratum.beta,
        ws.blocks.gl_ranges,
        depth=1,
    )
    return stratum.model_copy(update={"nonempty": nonempty, "levi_strata": tuple(children)})


def levi_stratification(
    stratum: Stratum, ws: WeightSystem, method: EnumerationMethod = "corral"
) -> list[LeviStratum]:
    """
    Stratify Z_β under the Levi subgroup G_β.

    Returns:
        Sub-strata in candidate order; each carries its own nonemptiness
        flag and, recursively, its own sub-strata. Indices refer to ``ws``.
    """
    return list(decide_stratum(stratum, ws, method).levi_strata)


def is_nonempty(stratum: Stratum, ws: WeightSystem, method: EnumerationMethod = "corral") -> bool:
    """
    Decide whether the stratum S_β contains any point.

    Raises:
        InvariantViolation: if the recursion runs deeper than the number of
            weights
    """
    return decide_stratum(stratum, ws, method).nonempty is True
