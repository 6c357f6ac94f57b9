"""Text syntax for Lie elements and PBW vectors.

Lie elements are sums of scaled basis symbols, ``2*L(0) + 1/2*C1 - i*I(-1)``.
PBW vectors are sums of scaled words ending in the generating vector ``1``,
``I(-1)*L(-2)*1 + 3*1``; a word is applied right to left and straightened,
so ``L(1)*L(-2)*1`` is a valid input. Coefficients are products of integers,
fractions ``p/q``, the imaginary unit ``i`` and parenthesized sums of those.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import unknown_name_message
from ..liealg import SYMBOL_NAMES, AlgebraId, BasisSym, InvalidSymbolError, LieElt
from ..pbwmod import ModuleSpec, PBWVector, apply_word
from ..scalars import IMAG, ZERO, Scalar, scalar
from .errors import ExpressionParseError

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))?")


@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    pos: int


@dataclass
class _Factor:
    pos: int
    value: Scalar | None = None
    symbol: BasisSym | None = None
    unit: bool = False  # the literal 1


@dataclass
class _Term:
    pos: int
    coef: Scalar
    word: list[BasisSym]
    generating: bool


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match.group(1) is not None:
            tokens.append(_Token("num", match.group(1), match.start(1)))
        elif match.group(2) is not None:
            tokens.append(_Token("name", match.group(2), match.start(2)))
        elif match.group(3) is not None:
            tokens.append(_Token("op", match.group(3), match.start(3)))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, algebra: AlgebraId):
        self.text = text
        self.algebra = algebra
        self.tokens = _tokenize(text)
        self.index = 0

    def fail(self, message: str, pos: int) -> ExpressionParseError:
        line = self.text.count("\n", 0, pos) + 1
        column = pos - self.text.rfind("\n", 0, pos)
        return ExpressionParseError(message, line, column)

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def accept(self, op: str) -> bool:
        if self.current.kind == "op" and self.current.text == op:
            self.index += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            found = self.current.text or "end of input"
            raise self.fail(f"expected {op!r}, found {found!r}", self.current.pos)

    def finish(self) -> None:
        if self.current.kind != "end":
            raise self.fail(f"unexpected {self.current.text!r}", self.current.pos)

    def sum(self) -> list[_Term]:
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        terms = [self.term(sign)]
        while True:
            if self.accept("+"):
                terms.append(self.term(1))
            elif self.accept("-"):
                terms.append(self.term(-1))
            else:
                return terms

    def term(self, sign: int) -> _Term:
        start = self.current.pos
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        coef = scalar(sign)
        generating = factors[-1].unit
        word = []
        for f in factors[:-1] if generating else factors:
            if f.symbol is not None:
                word.append(f.symbol)
            else:
                coef = coef * f.value
        return _Term(start, coef, word, generating)

    def integer(self) -> int:
        sign = -1 if self.accept("-") else 1
        if sign == 1:
            self.accept("+")
        token = self.current
        if token.kind != "num":
            raise self.fail(f"expected an integer index, found {token.text or 'end of input'!r}", token.pos)
        self.advance()
        return sign * int(token.text)

    def factor(self) -> _Factor:
        token = self.current
        if token.kind == "num":
            self.advance()
            if self.accept("/"):
                den = self.current
                if den.kind != "num":
                    raise self.fail("expected a denominator", den.pos)
                self.advance()
                if int(den.text) == 0:
                    raise self.fail("zero denominator", den.pos)
                return _Factor(token.pos, value=scalar(f"{token.text}/{den.text}"))
            return _Factor(token.pos, value=scalar(int(token.text)), unit=token.text == "1")
        if token.kind == "name" and token.text == "i":
            self.advance()
            return _Factor(token.pos, value=IMAG)
        if token.kind == "name":
            return self.symbol()
        if self.accept("("):
            value = ZERO
            for t in self.sum():
                if t.word:
                    raise self.fail("only numbers may appear inside parentheses", t.pos)
                value = value + t.coef
            self.expect(")")
            return _Factor(token.pos, value=value)
        raise self.fail(f"unexpected {token.text or 'end of input'!r}", token.pos)

    def symbol(self) -> _Factor:
        token = self.advance()
        names = SYMBOL_NAMES[self.algebra]
        if token.text not in names:
            message = unknown_name_message(f"{self.algebra.value} symbol", token.text, names)
            raise self.fail(message, token.pos)
        idx: list[int] = []
        if names[token.text]:
            self.expect("(")
            idx.append(self.integer())
            while self.accept(","):
                idx.append(self.integer())
            self.expect(")")
        try:
            return _Factor(token.pos, symbol=BasisSym(self.algebra, token.text, tuple(idx)))
        except InvalidSymbolError as e:
            raise self.fail(str(e), token.pos) from e


def parse_lie_element(text: str, algebra: AlgebraId | str) -> LieElt:
    """Parse a sum of scaled basis symbols of ``algebra``."""
    parser = _Parser(text, AlgebraId(algebra))
    terms = parser.sum()
    parser.finish()
    pairs = []
    for t in terms:
        if t.generating and not t.word:
            raise parser.fail("a Lie element term needs a basis symbol", t.pos)
        if len(t.word) != 1:
            raise parser.fail(f"expected one basis symbol per term, found {len(t.word)}", t.pos)
        pairs.append((t.word[0], t.coef))
    return LieElt.combine(parser.algebra, pairs)


def parse_vector(text: str, spec: ModuleSpec) -> PBWVector:
    """Parse a sum of scaled words applied to the generating vector of ``spec``."""
    parser = _Parser(text, spec.algebra)
    terms = parser.sum()
    parser.finish()
    out = PBWVector.zero(spec)
    for t in terms:
        if not t.generating:
            raise parser.fail("a vector term must end with the generating vector 1", t.pos)
        out = out + apply_word(t.word, PBWVector.vacuum(spec)).scale(t.coef)
    return out

