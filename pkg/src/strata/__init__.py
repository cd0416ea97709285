"""Stratification Module.

Enumerates the minimal combinations of weights, describes the stratum each
one indexes and decides which strata are nonempty.

Key components:
- Candidates: minimum-norm points of subsets of weights, canonicalized
- Stratum: levels, Z/W/Y sets, Levi data and the destabilizing 1PS
- Nonemptiness: recursive stratification of Z_β under the Levi subgroup
- Stratification: the full sorted result
"""

from src.strata.candidates import enumerate_candidates
from src.strata.nonemptiness import decide_stratum, is_nonempty, levi_stratification
from src.strata.stratification import StratificationResult, stratify
from src.strata.stratum import LevelDecomposition, LeviStratum, Stratum, describe_stratum

__all__ = [
    "enumerate_candidates",
    "describe_stratum",
    "is_nonempty",
    "decide_stratum",
    "levi_stratification",
    "stratify",
    "LevelDecomposition",
    "LeviStratum",
    "Stratum",
    "StratificationResult",
]
