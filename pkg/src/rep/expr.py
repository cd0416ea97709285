"""Representation expressions.

Grammar (whitespace-insensitive, block indices 1-based)::

    rep    := term ('+' term)*
    term   := factor ('*' factor)*
    factor := 'std(' INT ')'
            | 'dual(std(' INT '))'
            | 'sym(' INT ',std(' INT '))'
            | '(' rep ')'
"""

import re
from dataclasses import dataclass

from src.errors import RepSyntaxError


@dataclass(frozen=True)
class Std:
    """Standard representation of the given GL block."""

    block: int


@dataclass(frozen=True)
class Dual:
    base: Std


@dataclass(frozen=True)
class Sym:
    degree: int
    base: Std


@dataclass(frozen=True)
class Tensor:
    factors: tuple["RepExpr", ...]


@dataclass(frozen=True)
class DirectSum:
    summands: tuple["RepExpr", ...]


RepExpr = Std | Dual | Sym | Tensor | DirectSum

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[a-z]+)|(?P<punct>[(),+*])|(?P<bad>\S))")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode())


def _tokenize(text: str) -> list[_Token]:
    """Split ``text`` into tokens; offsets are UTF-8 byte offsets."""
    tokens: list[_Token] = []
    position = 0
    while True:
        match = _TOKEN.match(text, position)
        if match is None:
            break
        kind = match.lastgroup or "bad"
        start = _byte_offset(text, match.start(kind))
        if kind == "bad":
            raise RepSyntaxError(f"unexpected character {match.group(kind)!r}", start)
        tokens.append(_Token(kind, match.group(kind), start))
        position = match.end()
    tokens.append(_Token("end", "", _byte_offset(text, len(text))))
    return tokens


def referenced_blocks(expr: RepExpr) -> frozenset[int]:
    """GL block indices an expression mentions."""
    match expr:
        case Std(block=block):
            return frozenset({block})
        case Dual(base=base) | Sym(base=base):
            return frozenset({base.block})
        case Tensor(factors=parts) | DirectSum(summands=parts):
            return frozenset().union(*(referenced_blocks(p) for p in parts))
    raise TypeError(f"not a representation expression: {expr!r}")


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str, message: str | None = None) -> _Token:
        token = self.current
        if token.text != text:
            found = token.text or "end of input"
            raise RepSyntaxError(message or f"expected {text!r}, found {found!r}", token.offset)
        return self.advance()

    def integer(self, what: str) -> int:
        token = self.current
        if token.kind != "int":
            raise RepSyntaxError(f"expected {what}", token.offset)
        self.advance()
        value = int(token.text)
        if value < 1:
            raise RepSyntaxError(f"{what} must be at least 1", token.offset)
        return value

    def parse(self) -> RepExpr:
        expr = self.rep()
        if self.current.kind != "end":
            raise RepSyntaxError(f"unexpected {self.current.text!r}", self.current.offset)
        return expr

    def rep(self) -> RepExpr:
        terms = [self.term()]
        while self.current.text == "+":
            self.advance()
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else DirectSum(tuple(terms))

    def term(self) -> RepExpr:
        factors = [self.factor()]
        seen = set(referenced_blocks(factors[0]))
        while self.current.text == "*":
            self.advance()
            offset = self.current.offset
            factor = self.factor()
            repeated = seen & referenced_blocks(factor)
            if repeated:
                raise RepSyntaxError(
                    f"block {min(repeated)} repeated inside one tensor term", offset
                )
            seen |= referenced_blocks(factor)
            factors.append(factor)
        return factors[0] if len(factors) == 1 else Tensor(tuple(factors))

    def std_argument(self, owner: str) -> Std:
        """Parse ``std(i)`` as the argument of ``dual``/``sym``."""
        message = f"{owner} argument must be std(i)"
        offset = self.current.offset
        if self.current.text != "std":
            raise RepSyntaxError(message, offset)
        self.advance()
        self.expect("(")
        block = self.integer("block index")
        self.expect(")")
        if self.current.text != ")":
            raise RepSyntaxError(message, offset)
        return Std(block)

    def factor(self) -> RepExpr:
        token = self.current
        if token.text == "(":
            self.advance()
            inner = self.rep()
            self.expect(")")
            return inner
        if token.text == "std":
            self.advance()
            self.expect("(")
            block = self.integer("block index")
            self.expect(")")
            return Std(block)
        if token.text == "dual":
            self.advance()
            self.expect("(")
            base = self.std_argument("dual")
            self.expect(")")
            return Dual(base)
        if token.text == "sym":
            self.advance()
            self.expect("(")
            degree = self.integer("sym degree")
            self.expect(",")
            base = self.std_argument("sym")
            self.expect(")")
            return Sym(degree, base)
        found = token.text or "end of input"
        raise RepSyntaxError(f"expected std, dual, sym or '(', found {found!r}", token.offset)


def parse_rep(text: str) -> RepExpr:
    """
    Parse a representation expression.

    A single factor or term is returned unwrapped; ``Tensor`` and
    ``DirectSum`` only appear with two or more children.

    Raises:
        RepSyntaxError: with the UTF-8 byte offset of the offending token
    """
    return _Parser(text).parse()


def render_rep(expr: RepExpr) -> str:
    """Canonical text of an expression (parses back to the same tree)."""
    match expr:
        case Std(block=block):
            return f"std({block})"
        case Dual(base=base):
            return f"dual(std({base.block}))"
        case Sym(degree=degree, base=base):
            return f"sym({degree},std({base.block}))"
        case Tensor(factors=factors):
            return "*".join(
                f"({render_rep(f)})" if isinstance(f, DirectSum) else render_rep(f)
                for f in factors
            )
        case DirectSum(summands=summands):
            return "+".join(render_rep(s) for s in summands)
    raise TypeError(f"not a representation expression: {expr!r}")
