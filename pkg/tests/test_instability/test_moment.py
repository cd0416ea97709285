"""Tests for the torus moment map and the k-stability hull test."""

from src.geometry.metric import inner
from src.instability.moment import is_k_stable_torus, moment
from src.instability.numerical import beta_of_point
from src.instability.points import parse_point
from src.rep.examples import load_example
from tests.helpers import vec


class TestMoment:
    """Tests for moment."""

    def test_single_coordinate(self, binary_cubic):
        """Test that one coordinate maps to its weight."""
        assert moment(parse_point("x_112=5"), binary_cubic) == vec(1, -1)

    def test_antipodal_average(self, binary_cubic):
        """Test equal magnitudes on opposite weights."""
        assert moment(parse_point("x_112=1,x_122=-1"), binary_cubic) == vec(0, 0)

    def test_midpoint(self, sym2k3):
        """Test x_2,22 = x_2,33 = 1."""
        assert moment(parse_point("x_2,22=1,x_2,33=1"), sym2k3) == vec("-2/3", "1/3", "1/3", "-1/2", "1/2")

    def test_weighted_by_squares(self, binary_cubic):
        """Test coefficients x_i² / Σ x_j²."""
        assert moment(parse_point("x_111=1,x_122=2"), binary_cubic) == vec("-1/5", "1/5")

    def test_moment_bound(self, sym2k3):
        """Test ‖μ_T(x)‖² ≥ ‖β_x‖² for an unstable point."""
        x = parse_point("x_1,33=3,x_2,23=1,x_2,33=2")
        image = moment(x, sym2k3)
        classification = beta_of_point(x, sym2k3)
        assert inner(image, image, sym2k3.metric) >= classification.norm_squared


class TestKStableTorus:
    """Tests for is_k_stable_torus."""

    def test_full_cubic(self, binary_cubic):
        """Test full support on the one-dimensional ambient space."""
        assert is_k_stable_torus(parse_point("x_111=1,x_112=1,x_122=1,x_222=1"), binary_cubic)

    def test_single_coordinate(self, binary_cubic):
        """Test a one-point hull."""
        assert not is_k_stable_torus(parse_point("x_122=1"), binary_cubic)

    def test_one_sided_hull(self, binary_cubic):
        """Test a hull on one side of the origin."""
        assert not is_k_stable_torus(parse_point("x_111=1,x_112=1"), binary_cubic)

    def test_semistable_but_not_interior(self):
        """Test a hull equal to the origin alone."""
        ws = load_example("binary-quadratic")
        x = parse_point("x_12=1")
        assert beta_of_point(x, ws).semistable
        assert not is_k_stable_torus(x, ws)

    def test_full_table(self, sym2k3):
        """Test that all twelve weights surround the origin."""
        x = parse_point(",".join(f"{label}=1" for label in sym2k3.labels))
        assert is_k_stable_torus(x, sym2k3)
