"""Tests for the representation expression parser."""

import pytest

from src.errors import RepSyntaxError
from src.rep.expr import (
    DirectSum,
    Dual,
    Std,
    Sym,
    Tensor,
    parse_rep,
    referenced_blocks,
    render_rep,
)


class TestParseRep:
    """Tests for parse_rep."""

    def test_tensor_of_sym_and_std(self):
        """Test the Sym²k³ ⊗ k² expression."""
        assert parse_rep("sym(2,std(1))*std(2)") == Tensor((Sym(2, Std(1)), Std(2)))

    def test_whitespace_insensitive(self):
        """Test that spaces are ignored."""
        assert parse_rep(" sym( 2 , std(1) ) * std( 2 ) ") == parse_rep("sym(2,std(1))*std(2)")

    def test_single_factor_unwrapped(self):
        """Test that one factor is not wrapped in a tensor or sum."""
        assert parse_rep("dual(std(1))") == Dual(Std(1))

    def test_direct_sum(self):
        """Test summands in order."""
        assert parse_rep("sym(2,std(1))+std(1)") == DirectSum((Sym(2, Std(1)), Std(1)))

    def test_repeated_summands(self):
        """Test that a direct sum may repeat a summand."""
        assert parse_rep("std(1)+std(1)") == DirectSum((Std(1), Std(1)))

    def test_parenthesized_sum_in_tensor(self):
        """Test that parentheses group a sum inside a tensor term."""
        expr = parse_rep("(std(1)+dual(std(1)))*std(2)")
        assert expr == Tensor((DirectSum((Std(1), Dual(Std(1)))), Std(2)))
        assert referenced_blocks(expr) == frozenset({1, 2})

    def test_render_parses_back(self):
        """Test that rendering is canonical."""
        for text in ("sym(2,std(1))*std(2)", "(std(1)+std(2))*std(3)", "std(1)+dual(std(2))"):
            expr = parse_rep(text)
            assert parse_rep(render_rep(expr)) == expr
        assert render_rep(parse_rep(" std( 1 ) ")) == "std(1)"

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("std(1)*std(1)", "block 1 repeated inside one tensor term"),
            ("sym(2,std(1))*dual(std(1))", "block 1 repeated inside one tensor term"),
            ("sym(0,std(1))", "sym degree must be at least 1"),
            ("std(0)", "block index must be at least 1"),
            ("dual(sym(2,std(1)))", "dual argument must be std"),
            ("sym(2,dual(std(1)))", "sym argument must be std"),
            ("dual(std(1)*std(2))", "dual argument must be std"),
            ("sym(2,std(1)*std(2))", "sym argument must be std"),
            ("std(1", "expected ')'"),
            ("tensor(1)", "expected std, dual, sym"),
            ("", "end of input"),
        ],
    )
    def test_syntax_errors(self, text, message):
        """Test the message of each rejected expression."""
        with pytest.raises(RepSyntaxError, match=message.replace("(", r"\(").replace(")", r"\)")):
            parse_rep(text)

    def test_error_offset(self):
        """Test that the offset points at the offending character."""
        with pytest.raises(RepSyntaxError) as info:
            parse_rep("std(1)$")
        assert info.value.offset == 6
        assert "at offset 6" in str(info.value)

    def test_error_offset_counts_bytes(self):
        """Test that the offset counts UTF-8 bytes, not characters."""
        with pytest.raises(RepSyntaxError) as info:
            parse_rep("std(1)\u00a0$")
        assert info.value.offset == 8

    def test_trailing_tokens(self):
        """Test that leftovers after a complete expression are rejected."""
        with pytest.raises(RepSyntaxError, match="unexpected"):
            parse_rep("std(1))")
