"""Tests for candidate enumeration."""

from itertools import combinations

import pytest

from src.errors import EnumerationCapExceeded
from src.geometry.metric import inner
from src.geometry.min_norm import min_norm_point
from src.rep.blocks import dominant_representative
from src.strata.candidates import enumerate_candidates
from tests.helpers import explicit_system, vec


class TestEnumerateCandidates:
    """Tests for enumerate_candidates."""

    def test_binary_cubic(self, binary_cubic):
        """Test the two q-values 1 and 3."""
        candidates = enumerate_candidates(binary_cubic)
        assert candidates == [vec(-1, 1), vec(-3, 3)]
        assert [inner(b, b, binary_cubic.metric) for b in candidates] == [2, 18]

    def test_thirteen_candidates(self, sym2k3):
        """Test that Sym²k³ ⊗ k² has thirteen candidates, three of them with empty strata."""
        assert len(enumerate_candidates(sym2k3)) == 13

    def test_sorted_by_norm(self, sym2k3):
        """Test ascending norm order."""
        norms = [inner(b, b, sym2k3.metric) for b in enumerate_candidates(sym2k3)]
        assert norms == sorted(norms)

    def test_zero_weight_only(self):
        """Test that the zero weight produces no candidate."""
        assert enumerate_candidates(explicit_system([2], vec(0, 0))) == []

    def test_candidates_are_dominant(self, quad_plus_vector):
        """Test that every candidate is sorted inside its GL block."""
        for beta in enumerate_candidates(quad_plus_vector):
            assert dominant_representative(beta, quad_plus_vector.blocks)[0] == beta

    def test_cap(self, sym2k3):
        """Test that the weight cap is enforced with its count."""
        with pytest.raises(EnumerationCapExceeded, match="--cap 12") as info:
            enumerate_candidates(sym2k3, cap=11)
        assert info.value.count == 12
        assert info.value.cap == 11

    def test_subset_scan_agrees_with_corrals(self, quad_plus_vector, binary_cubic):
        """Test that both enumeration methods give the identical list."""
        for ws in (quad_plus_vector, binary_cubic):
            assert enumerate_candidates(ws, method="subsets") == enumerate_candidates(ws)

    def test_completeness_by_rescan(self, quad_plus_vector):
        """Test that every subset minimum appears among the candidates."""
        ws = quad_plus_vector
        candidates = set(enumerate_candidates(ws))
        for size in range(1, len(ws) + 1):
            for subset in combinations(ws.weights, size):
                point = min_norm_point(list(subset), ws.metric).point
                if any(point):
                    assert dominant_representative(point, ws.blocks)[0] in candidates

    @pytest.mark.slow
    def test_subset_scan_on_twelve_weights(self, sym2k3):
        """Test method agreement on all 4095 subsets of the table."""
        assert enumerate_candidates(sym2k3, method="subsets") == enumerate_candidates(sym2k3)
