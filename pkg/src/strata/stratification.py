"""Full stratification of a weight system."""

import structlog
from pydantic import BaseModel, ConfigDict, Field

from src.errors import WeightSystemError
from src.rep.weights import WeightSystem
from src.strata.candidates import DEFAULT_CAP, EnumerationMethod, enumerate_candidates
from src.strata.nonemptiness import decide_stratum, is_dense
from src.strata.stratum import Stratum, describe_stratum

logger = structlog.get_logger(__name__)


class StratificationResult(BaseModel):
    """
    Every candidate of a weight system with its nonemptiness verdict.

    Only candidates with a nonempty stratum index the stratification;
    ``strata`` lists those and ``empty_candidates`` the rest.
    """

    model_config = ConfigDict(frozen=True)

    system: WeightSystem
    candidates: tuple[Stratum, ...] = Field(
        ..., description="Decided candidates, sorted by norm squared, then coordinates of β"
    )
    semistable_nonempty: bool

    @property
    def strata(self) -> tuple[Stratum, ...]:
        return tuple(s for s in self.candidates if s.nonempty)

    @property
    def empty_candidates(self) -> tuple[Stratum, ...]:
        return tuple(s for s in self.candidates if not s.nonempty)


def stratify(
    ws: WeightSystem, cap: int = DEFAULT_CAP, method: EnumerationMethod = "corral"
) -> StratificationResult:
    """
    Enumerate, describe and decide every candidate of ``ws``.

    Candidates whose stratum turns out empty are kept in
    ``empty_candidates`` and left out of ``strata``.

    The semistable locus is empty exactly when a nonempty stratum is dense
    in P(V).

    Raises:
        EnumerationCapExceeded: if ``ws`` has more weights than ``cap``
        WeightSystemError: if the weights are not permutation invariant
            within each GL block
    """
    if not ws.is_weyl_invariant():
        raise WeightSystemError(
            "weight multiset is not invariant under coordinate permutations within GL blocks"
        )
    candidates = enumerate_candidates(ws, cap=cap, method=method)
    decided = tuple(decide_stratum(describe_stratum(beta, ws), ws, method) for beta in candidates)
    semistable_nonempty = not any(
        s.nonempty and is_dense(s.dim_unipotent, len(s.y_indices), len(ws)) for s in decided
    )
    logger.debug(
        "stratify",
        weights=len(ws),
        candidates=len(candidates),
        nonempty=sum(1 for s in decided if s.nonempty),
        semistable_nonempty=semistable_nonempty,
    )
    return StratificationResult(
        system=ws, candidates=decided, semistable_nonempty=semistable_nonempty
    )
