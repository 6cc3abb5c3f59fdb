"""Space-expression language.

Grammar::

    expr    := term { ("*" | "x") term } ;
    term    := atom [ "^" UINT ] ;
    atom    := SPHERE | "pt" | "(" expr ")" | literal ;
    SPHERE  := "S" UINT            (UINT >= 1) ;
    literal := "{" "pi" ":" ranks "," "h" ":" ranks "}" ;
    ranks   := "{" [ UINT ":" UINT { "," UINT ":" UINT } ] "}" ;

``^`` binds tighter than the product and cannot be chained without
parentheses.  Spans reported in errors are UTF-8 byte offsets.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .space import (
    EllipticRanks,
    InvalidRanksError,
    Strictness,
    from_literal,
    point,
    power,
    product,
    sphere,
)

__all__ = [
    "SourceSpan",
    "Sphere",
    "Point",
    "Literal",
    "Product",
    "Power",
    "SpaceExpr",
    "ParseError",
    "ValidationError",
    "MAX_INPUT_BYTES",
    "parse",
    "elaborate",
    "to_source",
    "evaluate",
]

MAX_INPUT_BYTES = 1 << 20
MAX_NESTING = 200
MAX_DIGITS = 4000


class SourceSpan(NamedTuple):
    start: int
    end: int


def _span_field():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Sphere:
    dim: int
    span: SourceSpan | None = _span_field()


@dataclass(frozen=True)
class Point:
    span: SourceSpan | None = _span_field()


@dataclass(frozen=True)
class Literal:
    pi: tuple[tuple[int, int], ...]
    h: tuple[tuple[int, int], ...]
    label: str | None = None
    span: SourceSpan | None = _span_field()


@dataclass(frozen=True)
class Product:
    factors: tuple[SpaceExpr, ...]
    span: SourceSpan | None = _span_field()

    def __post_init__(self):
        if not self.factors:
            raise ValueError("Product needs at least one factor")


@dataclass(frozen=True)
class Power:
    base: SpaceExpr
    exponent: int
    span: SourceSpan | None = _span_field()

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("Power exponent must be >= 0")


SpaceExpr = Union[Sphere, Point, Literal, Product, Power]


class _Located(ValueError):
    def __init__(self, message: str, span: SourceSpan, char_span: tuple[int, int] | None = None):
        super().__init__(message)
        self.message = message
        self.span = span
        self._char_span = char_span

    def __str__(self) -> str:
        return f"{self.message} at bytes {self.span.start}..{self.span.end}"

    def render(self, source: str) -> str:
        """Message plus the offending line with a caret underline."""
        if self._char_span is None or "\n" in source or len(source) > 200:
            return str(self)
        s, e = self._char_span
        shown = "".join(c if c.isprintable() else "?" for c in source)
        return f"{self}\n  {shown}\n  {' ' * s}{'^' * max(1, e - s)}"


class ParseError(_Located):
    """Syntax error, carrying the byte span of the offending text."""


class ValidationError(_Located):
    """A well-formed expression denotes no valid rank table."""


# ---------------------------------------------------------------- lexing

class _Tok(NamedTuple):
    kind: str
    text: str
    start: int  # character offsets
    end: int


_PUNCT = {"*": "STAR", "^": "CARET", "(": "LPAREN", ")": "RPAREN",
          "{": "LBRACE", "}": "RBRACE", ":": "COLON", ",": "COMMA"}
_KEYWORDS = {"pt": "PT", "pi": "PI", "h": "H", "x": "X"}
_WORD = re.compile(r"[A-Za-z]+")
_DIGITS = re.compile(r"[0-9]+")


def _byte_offsets(text: str):
    if text.isascii():
        return lambda i: i
    table = [0]
    acc = 0
    for ch in text:
        cp = ord(ch)
        if cp < 0x80 or 0xDC80 <= cp <= 0xDCFF:
            acc += 1
        elif cp < 0x800:
            acc += 2
        elif cp < 0x10000:
            acc += 3
        else:
            acc += 4
        table.append(acc)
    return table.__getitem__


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self._bo = _byte_offsets(text)
        self.toks = self._lex()
        self.i = 0
        self.depth = 0

    def error(self, message: str, start: int, end: int, cls=ParseError):
        return cls(message, SourceSpan(self._bo(start), self._bo(end)), (start, end))

    def span(self, start: int, end: int) -> SourceSpan:
        return SourceSpan(self._bo(start), self._bo(end))

    def _lex(self) -> list[_Tok]:
        text = self.text
        toks = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in _PUNCT:
                toks.append(_Tok(_PUNCT[ch], ch, i, i + 1))
                i += 1
            elif "0" <= ch <= "9":
                m = _DIGITS.match(text, i)
                toks.append(_Tok("UINT", m.group(), i, m.end()))
                i = m.end()
            elif ch.isascii() and ch.isalpha():
                m = _WORD.match(text, i)
                word = m.group()
                if word == "S":
                    d = _DIGITS.match(text, m.end())
                    if d is None:
                        raise self.error("expected a dimension after 'S'", i, m.end())
                    toks.append(_Tok("SPHERE", text[i:d.end()], i, d.end()))
                    i = d.end()
                elif word in _KEYWORDS:
                    toks.append(_Tok(_KEYWORDS[word], word, i, m.end()))
                    i = m.end()
                else:
                    raise self.error(f"unknown token {word!r}", i, m.end())
            else:
                raise self.error(f"unknown token {ch!r}", i, i + 1)
        toks.append(_Tok("EOF", "", n, n))
        return toks

    # ------------------------------------------------------------ helpers

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def advance(self) -> _Tok:
        tok = self.toks[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "EOF" else repr(tok.text)
            raise self.error(f"expected {what}, found {found}", tok.start, tok.end)
        return self.advance()

    def uint(self, tok: _Tok, digits: str) -> int:
        if len(digits) > MAX_DIGITS:
            raise self.error(f"number too large ({len(digits)} digits)", tok.start, tok.end)
        return int(digits)

    # ------------------------------------------------------------ grammar

    def parse(self) -> SpaceExpr:
        if self.peek().kind == "EOF":
            raise self.error("empty product: expected a space expression", 0, len(self.text))
        e = self.expr()
        tok = self.peek()
        if tok.kind == "RPAREN":
            raise self.error("unmatched ')'", tok.start, tok.end)
        if tok.kind != "EOF":
            raise self.error(f"unexpected {tok.text!r}", tok.start, tok.end)
        return e

    def expr(self) -> SpaceExpr:
        start = self.peek().start
        factors = [self.term()]
        while self.peek().kind in ("STAR", "X"):
            op = self.advance()
            if self.peek().kind in ("EOF", "RPAREN", "STAR", "X", "CARET"):
                tok = self.peek()
                raise self.error(
                    f"empty product: missing factor after {op.text!r}", op.start, max(op.end, tok.end)
                )
            factors.append(self.term())
        if len(factors) == 1:
            return factors[0]
        end = self.toks[self.i - 1].end
        return Product(tuple(factors), span=self.span(start, end))

    def term(self) -> SpaceExpr:
        start = self.peek().start
        base = self.atom()
        if self.peek().kind != "CARET":
            return base
        self.advance()
        tok = self.expect("UINT", "an exponent after '^'")
        exp = self.uint(tok, tok.text)
        nxt = self.peek()
        if nxt.kind == "CARET":
            raise self.error(
                "chained '^' is ambiguous; add parentheses, e.g. (S2^2)^3", nxt.start, nxt.end
            )
        return Power(base, exp, span=self.span(start, tok.end))

    def atom(self) -> SpaceExpr:
        tok = self.peek()
        kind = tok.kind
        if kind == "SPHERE":
            self.advance()
            dim = self.uint(tok, tok.text[1:])
            if dim < 1:
                raise self.error("sphere dimension must be ≥ 1", tok.start, tok.end)
            return Sphere(dim, span=self.span(tok.start, tok.end))
        if kind == "PT":
            self.advance()
            return Point(span=self.span(tok.start, tok.end))
        if kind == "LPAREN":
            self.advance()
            if self.peek().kind == "RPAREN":
                close = self.advance()
                raise self.error("empty product: '()' has no factors", tok.start, close.end)
            self.depth += 1
            if self.depth > MAX_NESTING:
                raise self.error(f"parentheses nested deeper than {MAX_NESTING}", tok.start, tok.end)
            inner = self.expr()
            self.depth -= 1
            close = self.peek()
            if close.kind != "RPAREN":
                raise self.error(
                    f"missing ')' to close '(' at byte {self._bo(tok.start)}", close.start, close.end
                )
            self.advance()
            return inner
        if kind == "LBRACE":
            return self.literal()
        if kind == "EOF":
            raise self.error("unexpected end of input", tok.start, tok.end)
        raise self.error(f"unexpected {tok.text!r}", tok.start, tok.end)

    def literal(self) -> Literal:
        open_ = self.advance()
        self.expect("PI", "'pi'")
        self.expect("COLON", "':'")
        pi = self.ranks()
        self.expect("COMMA", "','")
        self.expect("H", "'h'")
        self.expect("COLON", "':'")
        h = self.ranks()
        close = self.expect("RBRACE", "'}'")
        return Literal(pi, h, span=self.span(open_.start, close.end))

    def ranks(self) -> tuple[tuple[int, int], ...]:
        self.expect("LBRACE", "'{'")
        out: list[tuple[int, int]] = []
        seen = set()
        if self.peek().kind == "RBRACE":
            self.advance()
            return ()
        while True:
            ktok = self.expect("UINT", "a degree")
            deg = self.uint(ktok, ktok.text)
            if deg in seen:
                raise self.error(f"duplicate degree {deg} in rank map", ktok.start, ktok.end)
            seen.add(deg)
            self.expect("COLON", "':'")
            vtok = self.expect("UINT", "a rank")
            out.append((deg, self.uint(vtok, vtok.text)))
            if self.peek().kind == "COMMA":
                self.advance()
                continue
            self.expect("RBRACE", "',' or '}'")
            return tuple(out)


def parse(text: str) -> SpaceExpr:
    """Parse a space expression; raises :class:`ParseError`."""
    if len(text) > MAX_INPUT_BYTES or len(text.encode("utf-8", "surrogatepass")) > MAX_INPUT_BYTES:
        raise ParseError(f"input exceeds {MAX_INPUT_BYTES} bytes", SourceSpan(0, 0), (0, 0))
    return _Parser(text).parse()


# ---------------------------------------------------------------- printing

def _ranks_src(ranks) -> str:
    return "{" + ", ".join(f"{d}: {r}" for d, r in ranks) + "}"


def to_source(e: SpaceExpr) -> str:
    """Canonical text: single spaces around operators, minimal parentheses."""
    if isinstance(e, Sphere):
        return f"S{e.dim}"
    if isinstance(e, Point):
        return "pt"
    if isinstance(e, Literal):
        return f"{{pi: {_ranks_src(e.pi)}, h: {_ranks_src(e.h)}}}"
    if isinstance(e, Product):
        return " * ".join(
            f"({to_source(f)})" if isinstance(f, Product) else to_source(f) for f in e.factors
        )
    if isinstance(e, Power):
        base = to_source(e.base)
        if isinstance(e.base, (Product, Power)):
            base = f"({base})"
        return f"{base} ^ {e.exponent}"
    raise TypeError(f"not a space expression: {e!r}")


# ---------------------------------------------------------------- elaboration

def elaborate(
    e: SpaceExpr,
    strictness: Strictness | str = Strictness.STRICT,
    source: str | None = None,
) -> EllipticRanks:
    """Map an expression to its rank tables; raises :class:`ValidationError`.

    Labels come from the source text slice of each node when ``source`` is
    given, else from :func:`to_source`.
    """
    strictness = Strictness(strictness)
    bo_to_char = _char_index(source) if source is not None else None

    def label_of(node) -> str:
        if source is not None and node.span is not None:
            s, t = bo_to_char(node.span.start), bo_to_char(node.span.end)
            return source[s:t].strip()
        return to_source(node)

    def fail(node, message):
        span = node.span or SourceSpan(0, 0)
        cs = None
        if source is not None and node.span is not None:
            cs = (bo_to_char(span.start), bo_to_char(span.end))
        return ValidationError(message, span, cs)

    def go(node) -> EllipticRanks:
        if isinstance(node, Sphere):
            return sphere(node.dim)
        if isinstance(node, Point):
            return point()
        if isinstance(node, Literal):
            try:
                x = from_literal(dict(node.pi), dict(node.h), strictness)
            except InvalidRanksError as exc:
                raise fail(node, str(exc)) from None
            return dataclasses.replace(x, label=node.label or label_of(node))
        if isinstance(node, Product):
            x = product([go(f) for f in node.factors])
            return dataclasses.replace(x, label=label_of(node))
        if isinstance(node, Power):
            base = go(node.base)
            try:
                x = power(base, node.exponent)
            except ValueError as exc:
                raise fail(node, str(exc)) from None
            return dataclasses.replace(x, label=label_of(node))
        raise TypeError(f"not a space expression: {node!r}")

    return go(e)


def _char_index(source: str):
    if source.isascii():
        return lambda b: b
    offs = _byte_offsets(source)
    table = {offs(i): i for i in range(len(source) + 1)}
    return lambda b: table.get(b, 0)


def evaluate(text: str, strictness: Strictness | str = Strictness.STRICT) -> EllipticRanks:
    """``elaborate(parse(text))`` with source-derived labels."""
    return elaborate(parse(text), strictness, source=text)
