"""Point Instability Module.

Hilbert–Mumford data of explicit rational points over the maximal torus.

Key components:
- Points: rational points keyed by weight label, integral 1PS
- Numerical: μ, signed ν², optimal β_x
- Moment: torus moment map and the interior (k-stability) test
"""

from src.instability.moment import is_k_stable_torus, moment
from src.instability.numerical import PointClassification, beta_of_point, mu, nu_squared
from src.instability.points import OnePS, RationalPoint, parse_lambda, parse_point

__all__ = [
    "RationalPoint",
    "OnePS",
    "parse_point",
    "parse_lambda",
    "mu",
    "nu_squared",
    "beta_of_point",
    "PointClassification",
    "moment",
    "is_k_stable_torus",
]
