"""Ideal expressions: tokenizer, recursive-descent parser, renderer and evaluator.

Grammar (whitespace is insignificant)::

    expr  := term ('*' term)*
    term  := atom ('^' posint)?
    atom  := '(' mono (',' mono)* ')'
           | 'intersect(' expr (',' expr)+ ')'
           | 'radical(' expr ')'
           | 'veronese(' posint ';' posint (',' posint)* ')'
           | 'transversal(' vars ('|' vars)* ')'
           | 'localize(' expr ';' vars ')'
           | '(' expr ')'
    vars  := name (',' name)*
    mono  := '1' | name ('^' posint)? ('*' name ('^' posint)?)*

A parenthesised list of monomials is always read as an ideal literal; other
parenthesised input is a grouped expression.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .decomposition import MonomialPrime
from .errors import ParseError, UnknownVariable
from .ideal import MonomialIdeal, intersect, power, product, radical
from .localization import localize
from .polymatroidal import TransversalSpec, VeroneseParams, transversal_ideal, veronese
from .ring import Monomial, Ring

KEYWORDS = ("intersect", "radical", "veronese", "transversal", "localize")


@dataclass(frozen=True)
class Literal:
    monos: tuple[str, ...]


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    k: int


@dataclass(frozen=True)
class Intersect:
    items: tuple["Expr", ...]


@dataclass(frozen=True)
class Veronese:
    d: int
    bounds: tuple[int, ...]


@dataclass(frozen=True)
class Transversal:
    primes: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class Radical:
    inner: "Expr"


@dataclass(frozen=True)
class Localize:
    inner: "Expr"
    at: tuple[str, ...]


Expr = Union[Literal, Product, Power, Intersect, Veronese, Transversal, Radical, Localize]


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, INT, PUNCT, END
    text: str
    line: int
    col: int


_TOKEN = re.compile(r"\s+|([A-Za-z_][A-Za-z0-9_]*)|(\d+)|([(),;*^|])")


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        if m.group(1):
            tokens.append(Token("NAME", m.group(1), line, col))
        elif m.group(2):
            tokens.append(Token("INT", m.group(2), line, col))
        elif m.group(3):
            tokens.append(Token("PUNCT", m.group(3), line, col))
        else:
            chunk = m.group(0)
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("END", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.toks = tokenize(text)
        self.i = 0
        self.ring = ring

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def accept(self, text: str) -> bool:
        if self.tok.kind == "PUNCT" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def posint(self) -> int:
        tok = self.tok
        if tok.kind != "INT":
            raise self.error("expected a positive integer")
        self.i += 1
        if int(tok.text) == 0:
            raise self.error("exponent must be positive", tok)
        return int(tok.text)

    def name(self) -> str:
        tok = self.tok
        if tok.kind != "NAME":
            raise self.error("expected a variable name")
        if tok.text not in self.ring.names:
            raise UnknownVariable(f"unknown variable {tok.text!r}", tok.line, tok.col)
        self.i += 1
        return tok.text

    def var_list(self) -> tuple[str, ...]:
        names = [self.name()]
        while self.accept(","):
            names.append(self.name())
        return tuple(names)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "END":
            raise self.error(f"unexpected {self.tok.text!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.accept("*"):
            e = Product(e, self.term())
        return e

    def term(self) -> Expr:
        a = self.atom()
        if self.accept("^"):
            a = Power(a, self.posint())
        return a

    def atom(self) -> Expr:
        tok = self.tok
        nxt = self.toks[self.i + 1] if tok.kind != "END" else tok
        if tok.kind == "NAME" and tok.text in KEYWORDS and nxt.text == "(":
            self.i += 2
            return getattr(self, "kw_" + tok.text)(tok)
        if not self.accept("("):
            raise self.error("expected '(' or a keyword")
        start = self.i
        literal_error = None
        if not self.opens_group():
            try:
                return self.literal_body()
            except UnknownVariable:
                raise
            except ParseError as exc:
                literal_error = exc
                self.i = start
        try:
            e = self.expr()
            self.expect(")")
        except UnknownVariable:
            raise
        except ParseError as exc:
            if literal_error is None:
                raise
            # report whichever reading got further into the input
            raise max(exc, literal_error, key=lambda x: (x.line, x.column)) from None
        return e

    def opens_group(self) -> bool:
        """True when the next token can only start a nested expression, not a monomial."""
        tok = self.tok
        if tok.text == "(":
            return True
        return tok.kind == "NAME" and tok.text in KEYWORDS and self.toks[self.i + 1].text == "("

    def literal_body(self) -> Literal:
        monos = [self.mono()]
        while self.accept(","):
            monos.append(self.mono())
        self.expect(")")
        return Literal(tuple(monos))

    def mono(self) -> str:
        if self.tok.kind == "INT" and self.tok.text == "1":
            self.i += 1
            return "1"
        exps = [0] * self.ring.n
        while True:
            idx = self.ring.names.index(self.name())
            exps[idx] += self.posint() if self.accept("^") else 1
            # a '*' followed by '(' or a keyword belongs to the enclosing product
            if not (self.tok.text == "*" and self.toks[self.i + 1].kind == "NAME"
                    and self.toks[self.i + 2].text != "("):
                break
            self.i += 1
        return str(Monomial(self.ring, tuple(exps)))

    def kw_intersect(self, kw: Token) -> Expr:
        items = [self.expr()]
        while self.accept(","):
            items.append(self.expr())
        self.expect(")")
        if len(items) < 2:
            raise self.error("intersect needs at least two arguments", kw)
        return Intersect(tuple(items))

    def kw_radical(self, kw: Token) -> Expr:
        e = self.expr()
        self.expect(")")
        return Radical(e)

    def kw_veronese(self, kw: Token) -> Expr:
        d = self.posint()
        self.expect(";")
        bounds = [self.posint()]
        while self.accept(","):
            bounds.append(self.posint())
        self.expect(")")
        return Veronese(d, tuple(bounds))

    def kw_transversal(self, kw: Token) -> Expr:
        primes = [self.var_list()]
        while self.accept("|"):
            primes.append(self.var_list())
        self.expect(")")
        return Transversal(tuple(primes))

    def kw_localize(self, kw: Token) -> Expr:
        e = self.expr()
        self.expect(";")
        at = self.var_list()
        self.expect(")")
        return Localize(e, at)


def parse(text: str, ring: Ring) -> Expr:
    return _Parser(text, ring).parse()


def render(e: Expr) -> str:
    if isinstance(e, Literal):
        return "(" + ", ".join(e.monos) + ")"
    if isinstance(e, Product):
        return f"{render(e.left)} * {render(e.right)}"
    if isinstance(e, Power):
        base = render(e.base)
        if isinstance(e.base, (Product, Power)):
            base = f"({base})"
        return f"{base}^{e.k}"
    if isinstance(e, Intersect):
        return "intersect(" + ", ".join(render(x) for x in e.items) + ")"
    if isinstance(e, Veronese):
        return f"veronese({e.d}; " + ", ".join(map(str, e.bounds)) + ")"
    if isinstance(e, Transversal):
        return "transversal(" + " | ".join(",".join(p) for p in e.primes) + ")"
    if isinstance(e, Radical):
        return f"radical({render(e.inner)})"
    if isinstance(e, Localize):
        return f"localize({render(e.inner)}; " + ",".join(e.at) + ")"
    raise TypeError(f"not an expression node: {e!r}")


def to_ideal(e: Expr, ring: Ring) -> MonomialIdeal:
    if isinstance(e, Literal):
        return MonomialIdeal(ring, tuple(ring.monomial(m) for m in e.monos))
    if isinstance(e, Product):
        return product(to_ideal(e.left, ring), to_ideal(e.right, ring))
    if isinstance(e, Power):
        return power(to_ideal(e.base, ring), e.k)
    if isinstance(e, Intersect):
        parts = [to_ideal(x, ring) for x in e.items]
        return intersect(parts[0], *parts[1:])
    if isinstance(e, Veronese):
        return veronese(VeroneseParams(e.d, e.bounds), ring)
    if isinstance(e, Transversal):
        return transversal_ideal(transversal_spec(e, ring))
    if isinstance(e, Radical):
        return radical(to_ideal(e.inner, ring))
    if isinstance(e, Localize):
        return localize(to_ideal(e.inner, ring), MonomialPrime.from_names(ring, e.at)).ideal
    raise TypeError(f"not an expression node: {e!r}")


def transversal_spec(e: Transversal, ring: Ring) -> TransversalSpec:
    return TransversalSpec(tuple(MonomialPrime.from_names(ring, p) for p in e.primes))


def evaluate(text: str, ring: Ring) -> MonomialIdeal:
    return to_ideal(parse(text, ring), ring)


_HEADER = re.compile(r"\s*ring\s+([^;]+);")


def parse_document(text: str) -> tuple[Ring, str]:
    """Split a file of the form ``ring x1..x4; <expr>`` into its ring and expression text."""
    m = _HEADER.match(text)
    if not m:
        raise ParseError("missing 'ring ...;' header")
    try:
        ring = Ring.parse(m.group(1))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return ring, text[m.end():]
