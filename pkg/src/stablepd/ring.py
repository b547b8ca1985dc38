"""Polynomial ring context and monomials stored as exponent vectors."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, RingMismatch, UnknownVariable

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_RANGE = re.compile(r"([A-Za-z_]+)(\d+)\.\.\1?(\d+)$")


@dataclass(frozen=True)
class Ring:
    """K[x_1..x_n]; only the variable names are recorded, the field is implicit."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not _NAME.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.names)

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> Ring:
        if n < 1:
            raise ValueError("a ring needs at least one variable")
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Ring:
        """Accept ``x,y,z`` lists and ``x1..x4`` ranges (mixable: ``a,x1..x3``)."""
        names: list[str] = []
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            m = _RANGE.match(part)
            if m:
                prefix, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
                if hi < lo:
                    raise ValueError(f"empty variable range {part!r}")
                names.extend(f"{prefix}{i}" for i in range(lo, hi + 1))
            else:
                names.append(part)
        return cls(tuple(names))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return Monomial(self, (0,) * self.n)

    def var(self, i: int, power: int = 1) -> Monomial:
        exps = [0] * self.n
        exps[i] = power
        return Monomial(self, tuple(exps))

    def monomial(self, text: str) -> Monomial:
        return parse_monomial(text, self)

    def __str__(self) -> str:
        return ",".join(self.names)


@dataclass(frozen=True)
class Monomial:
    ring: Ring
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if len(exps) != self.ring.n:
            raise ValueError(f"expected {self.ring.n} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exps) if e)

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_pure_power(self) -> bool:
        return len(self.support) == 1

    def squarefree_part(self) -> Monomial:
        return Monomial(self.ring, tuple(min(e, 1) for e in self.exps))

    def sort_key(self) -> tuple:
        # degree first, then lex with x1 > x2 > ...
        return (self.degree, tuple(-e for e in self.exps))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same(self, other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> Monomial:
        return Monomial(self.ring, tuple(e * k for e in self.exps))

    def __str__(self) -> str:
        factors = []
        for name, e in zip(self.ring.names, self.exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) or "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _check_same(a: Monomial, b: Monomial) -> None:
    if a.ring != b.ring:
        raise RingMismatch(f"monomials from rings ({a.ring}) and ({b.ring})")


def mono_divides(a: Monomial, b: Monomial) -> bool:
    _check_same(a, b)
    return all(x <= y for x, y in zip(a.exps, b.exps))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return Monomial(a.ring, tuple(max(x, y) for x, y in zip(a.exps, b.exps)))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    return Monomial(a.ring, tuple(min(x, y) for x, y in zip(a.exps, b.exps)))


def mono_quotient_saturating(a: Monomial, b: Monomial) -> Monomial:
    """a / b with every exponent truncated at zero."""
    _check_same(a, b)
    return Monomial(a.ring, tuple(max(x - y, 0) for x, y in zip(a.exps, b.exps)))


def lcm_all(monos: Iterable[Monomial], ring: Ring) -> Monomial:
    exps = [0] * ring.n
    for m in monos:
        if m.ring != ring:
            raise RingMismatch(f"monomial {m} is not in ring ({ring})")
        exps = [max(x, y) for x, y in zip(exps, m.exps)]
    return Monomial(ring, tuple(exps))


_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*")


def parse_monomial(text: str, ring: Ring) -> Monomial:
    """Parse ``x1^2*x3`` or ``1`` against *ring*."""
    text = text.strip()
    if text == "1":
        return ring.one()
    exps = [0] * ring.n
    for factor in text.split("*"):
        m = _FACTOR.fullmatch(factor)
        if not m:
            raise ParseError(f"malformed monomial factor {factor.strip()!r}")
        power = int(m.group(2)) if m.group(2) is not None else 1
        if power == 0:
            raise ParseError(f"zero exponent in {factor.strip()!r}")
        exps[ring.index(m.group(1))] += power
    return Monomial(ring, tuple(exps))


def monomials_of_degree(ring: Ring, d: int, bounds: Sequence[int] | None = None):
    """Yield every monomial of total degree d, optionally with per-variable caps."""
    n = ring.n
    caps = list(bounds) if bounds is not None else [d] * n

    def rec(i: int, left: int, prefix: list[int]):
        if i == n - 1:
            if left <= caps[i]:
                yield Monomial(ring, tuple(prefix + [left]))
            return
        for e in range(min(left, caps[i]), -1, -1):
            yield from rec(i + 1, left - e, prefix + [e])

    yield from rec(0, d, [])
