"""Tests for rational literals and vectors."""

from fractions import Fraction

import pytest

from src.errors import WeightSystemError
from src.geometry.rational import (
    format_rational,
    format_vector,
    indivisible_integer_multiple,
    parse_rational,
)


class TestParseRational:
    """Tests for rational literal parsing."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            ("1/2", Fraction(1, 2)),
            ("-2/3", Fraction(-2, 3)),
            ("4", Fraction(4)),
            (" 6 / 4 ", Fraction(3, 2)),
            ("0", Fraction(0)),
        ],
    )
    def test_valid_literals(self, text, expected):
        """Test that well-formed literals parse to lowest terms."""
        assert parse_rational(text) == expected

    def test_integers_and_fractions_pass_through(self):
        """Test that int and Fraction inputs are accepted."""
        assert parse_rational(3) == Fraction(3)
        assert parse_rational(Fraction(5, 7)) == Fraction(5, 7)

    @pytest.mark.parametrize("bad", ["1/0", "0.5", "1/-2", "abc", "", "1//2"])
    def test_malformed_literals(self, bad):
        """Test that malformed literals are rejected."""
        with pytest.raises(WeightSystemError):
            parse_rational(bad)

    def test_floats_and_booleans_rejected(self):
        """Test that floating point and bool values never enter the core."""
        with pytest.raises(WeightSystemError):
            parse_rational(0.5)
        with pytest.raises(WeightSystemError):
            parse_rational(True)


class TestFormatting:
    """Tests for rational and vector rendering."""

    def test_format_rational(self):
        """Test p/q and integral forms."""
        assert format_rational(Fraction(-7, 6)) == "-7/6"
        assert format_rational(Fraction(4, 2)) == "2"

    def test_format_vector_with_block_breaks(self):
        """Test that block boundaries render as semicolons."""
        v = (Fraction(-2, 3), Fraction(1, 3), Fraction(1, 3), Fraction(-1, 2), Fraction(1, 2))
        assert format_vector(v, [3]) == "(-2/3,1/3,1/3;-1/2,1/2)"


class TestIndivisibleMultiple:
    """Tests for clearing denominators."""

    def test_clears_denominators_and_gcd(self):
        """Test the λ of the 1/6 stratum."""
        beta = (Fraction(-1, 6), Fraction(-1, 6), Fraction(1, 3), Fraction(0), Fraction(0))
        assert indivisible_integer_multiple(beta) == (-1, -1, 2, 0, 0)

    def test_integral_input_divided_by_gcd(self):
        """Test that (−2, 2) reduces to (−1, 1)."""
        assert indivisible_integer_multiple((Fraction(-2), Fraction(2))) == (-1, 1)

    def test_zero_rejected(self):
        """Test that the zero vector has no multiple."""
        with pytest.raises(ValueError):
            indivisible_integer_multiple((Fraction(0), Fraction(0)))
