"""Exact Rational Convex Geometry.

Inner products under a rational Gram form, the minimum-norm point of a
finite hull with an exact certificate, origin-membership and interior
tests, and orthogonal projections. No floating point is used anywhere.
"""

from src.geometry.hull import (
    OriginMembership,
    contains_origin,
    orthogonal_basis,
    origin_in_interior,
    project_to_complement,
    project_to_subspace_complement,
)
from src.geometry.metric import MetricForm, inner, norm_squared
from src.geometry.min_norm import (
    Corral,
    MinNormResult,
    check_certificate,
    corral_points,
    min_norm_oracle,
    min_norm_point,
)
from src.geometry.rational import (
    RationalStr,
    Vector,
    format_rational,
    format_vector,
    parse_rational,
)

__all__ = [
    "MetricForm",
    "inner",
    "norm_squared",
    "MinNormResult",
    "Corral",
    "min_norm_point",
    "min_norm_oracle",
    "corral_points",
    "check_certificate",
    "OriginMembership",
    "contains_origin",
    "project_to_complement",
    "project_to_subspace_complement",
    "orthogonal_basis",
    "origin_in_interior",
    "RationalStr",
    "Vector",
    "parse_rational",
    "format_rational",
    "format_vector",
]
