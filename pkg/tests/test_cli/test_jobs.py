"""Tests for job configuration."""

from fractions import Fraction

import orjson
import pytest

from cli.jobs import JobConfig, parse_block_sizes, parse_scales
from src.errors import WeightSystemError
from src.rep.examples import BINARY_QUADRATIC


class TestParsers:
    """Tests for the flag parsers."""

    def test_block_sizes(self):
        """Test comma-separated sizes."""
        assert parse_block_sizes("3,2") == [3, 2]

    @pytest.mark.parametrize("text", ["3,a", "0", "2,,1", ""])
    def test_bad_block_sizes(self, text):
        """Test rejected size lists."""
        with pytest.raises(WeightSystemError):
            parse_block_sizes(text)

    def test_scales(self):
        """Test rational scales."""
        assert parse_scales("1, 1/2") == [Fraction(1), Fraction(1, 2)]


class TestJobConfig:
    """Tests for JobConfig."""

    def test_exactly_one_source(self):
        """Test that zero or two sources are refused."""
        with pytest.raises(ValueError, match="exactly one"):
            JobConfig()
        with pytest.raises(ValueError, match="exactly one"):
            JobConfig(example="binary-cubic", rep="std(1)", blocks=[2])

    def test_rep_needs_blocks(self):
        """Test that --rep and --blocks come together."""
        with pytest.raises(ValueError, match="together"):
            JobConfig(rep="std(1)")

    def test_load_from_rep(self):
        """Test the expression source."""
        ws = JobConfig(rep="sym(2,std(1))*std(2)", blocks=[3, 2]).load_system()
        assert len(ws) == 12

    def test_load_from_file_with_scales(self, tmp_path):
        """Test the document source with a metric override."""
        path = tmp_path / "quadratic.json"
        path.write_bytes(orjson.dumps(BINARY_QUADRATIC))
        ws = JobConfig(input_path=path, metric_scales=["1/2"]).load_system()
        assert ws.labels == ["x_11", "x_12", "x_22"]
        assert ws.metric.gram[0][0] == Fraction(1, 2)

    def test_example_torus_scale(self):
        """Test that the job's torus scale reaches quad-plus-vector."""
        ws = JobConfig(example="quad-plus-vector(3,4)", torus_scale="1/14").load_system()
        assert ws.blocks.extra_torus == (Fraction(1, 14),)
