"""Monomial ideals in canonical form and their basic arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import RingMismatch
from .ring import (
    Monomial,
    Ring,
    mono_lcm,
    mono_quotient_saturating,
)


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=Monomial.sort_key):
        if not any(all(a <= b for a, b in zip(k.exps, g.exps)) for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, always stored by its minimal generators G(I) in canonical order.

    Construction minimizes and sorts, so two ideals are equal exactly when
    their generator tuples are equal.
    """

    ring: Ring
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        gens = tuple(self.gens)
        for g in gens:
            if g.ring != self.ring:
                raise RingMismatch(f"generator {g} is not in ring ({self.ring})")
        object.__setattr__(self, "gens", _minimal(gens))

    @classmethod
    def parse(cls, text: str, ring: Ring) -> MonomialIdeal:
        from .parser import evaluate

        return evaluate(text, ring)

    @classmethod
    def unit(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, (ring.one(),))

    @classmethod
    def zero(cls, ring: Ring) -> MonomialIdeal:
        return cls(ring, ())

    @classmethod
    def from_vars(cls, ring: Ring, indices: Iterable[int]) -> MonomialIdeal:
        return cls(ring, tuple(ring.var(i) for i in indices))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(max(g.exps) <= 1 for g in self.gens)

    def degrees(self) -> set[int]:
        return {g.degree for g in self.gens}

    def __contains__(self, u: Monomial) -> bool:
        return contains_monomial(self, u)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return product(self, other)

    def __pow__(self, k: int) -> MonomialIdeal:
        return power(self, k)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __and__(self, other: MonomialIdeal) -> MonomialIdeal:
        return intersect(self, other)

    def __le__(self, other: MonomialIdeal) -> bool:
        """Ideal containment self ⊆ other."""
        _check_same(self, other)
        return all(g in other for g in self.gens)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"


def _check_same(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.ring != b.ring:
        raise RingMismatch(f"ideals from rings ({a.ring}) and ({b.ring})")


def minimize(gens: Iterable[Monomial], ring: Ring | None = None) -> MonomialIdeal:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("pass ring= to build an ideal from no generators")
        ring = gens[0].ring
    return MonomialIdeal(ring, tuple(gens))


def contains_monomial(I: MonomialIdeal, u: Monomial) -> bool:
    if u.ring != I.ring:
        raise RingMismatch(f"monomial {u} is not in ring ({I.ring})")
    return any(all(a <= b for a, b in zip(g.exps, u.exps)) for g in I.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.ring, tuple(u * v for u in I.gens for v in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 1:
        raise ValueError("ideal powers need a positive exponent")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I, J)
    return MonomialIdeal(I.ring, I.gens + J.gens)


def intersect(I: MonomialIdeal, *others: MonomialIdeal) -> MonomialIdeal:
    def pair(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
        _check_same(a, b)
        return MonomialIdeal(a.ring, tuple(mono_lcm(u, v) for u in a.gens for v in b.gens))

    return reduce(pair, others, I)


def colon(I: MonomialIdeal, u: Monomial) -> MonomialIdeal:
    """I : u for a single monomial u."""
    if u.ring != I.ring:
        raise RingMismatch(f"monomial {u} is not in ring ({I.ring})")
    return MonomialIdeal(I.ring, tuple(mono_quotient_saturating(g, u) for g in I.gens))


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, tuple(g.squarefree_part() for g in I.gens))


def support(I: MonomialIdeal) -> frozenset[int]:
    out: set[int] = set()
    for g in I.gens:
        out |= g.support
    return frozenset(out)


def is_fully_supported(I: MonomialIdeal) -> bool:
    return len(support(I)) == I.ring.n
