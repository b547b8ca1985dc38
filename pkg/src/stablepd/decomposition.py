"""Irreducible decomposition of monomial ideals and the data read off from it."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import NotProper, RingMismatch
from .ideal import MonomialIdeal, ideal_sum, intersect
from .ring import Monomial, Ring


@dataclass(frozen=True)
class MonomialPrime:
    """The prime generated by the variables with the given (0-based) indices."""

    ring: Ring
    vars: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.vars)))
        if not vs:
            raise ValueError("a monomial prime needs at least one variable")
        if vs[0] < 0 or vs[-1] >= self.ring.n:
            raise ValueError(f"variable index out of range for ring ({self.ring})")
        object.__setattr__(self, "vars", vs)

    @classmethod
    def maximal(cls, ring: Ring) -> MonomialPrime:
        return cls(ring, tuple(range(ring.n)))

    @classmethod
    def from_names(cls, ring: Ring, names: Iterable[str]) -> MonomialPrime:
        return cls(ring, tuple(ring.index(nm.strip()) for nm in names))

    @property
    def height(self) -> int:
        return len(self.vars)

    def is_maximal(self) -> bool:
        return self.height == self.ring.n

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_vars(self.ring, self.vars)

    def __le__(self, other: MonomialPrime) -> bool:
        return set(self.vars) <= set(other.vars)

    def __lt__(self, other: MonomialPrime) -> bool:
        return set(self.vars) < set(other.vars)

    def sort_key(self) -> tuple:
        return (self.height, self.vars)

    def names(self) -> list[str]:
        return [self.ring.names[i] for i in self.vars]

    def __str__(self) -> str:
        return "(" + ",".join(self.names()) + ")"


@dataclass(frozen=True)
class IrreducibleComponent:
    """(x_i^{a_i} : i in the domain of ``powers``); ``powers`` is a sorted tuple of (i, a_i)."""

    ring: Ring
    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pw = tuple(sorted((int(i), int(a)) for i, a in dict(self.powers).items()))
        if not pw or any(a < 1 for _, a in pw):
            raise ValueError(f"bad irreducible component powers {self.powers}")
        object.__setattr__(self, "powers", pw)

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> IrreducibleComponent:
        if not all(g.is_pure_power() for g in I.gens):
            raise ValueError(f"{I} is not generated by pure powers")
        return cls(I.ring, tuple((next(iter(g.support)), g.degree) for g in I.gens))

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, tuple(self.ring.var(i, a) for i, a in self.powers))

    def prime(self) -> MonomialPrime:
        return MonomialPrime(self.ring, tuple(i for i, _ in self.powers))

    def sort_key(self) -> tuple:
        return (len(self.powers), self.powers)

    def __str__(self) -> str:
        return "(" + ",".join(str(self.ring.var(i, a)) for i, a in self.powers) + ")"


def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero():
        raise NotProper("the zero ideal has no finite irreducible decomposition here")
    if I.is_unit():
        raise NotProper("the unit ideal is not proper")


def _split(I: MonomialIdeal) -> list[MonomialIdeal]:
    for g in I.gens:
        if not g.is_pure_power():
            i = min(g.support)
            first = I.ring.var(i, g.exps[i])
            rest = Monomial(I.ring, tuple(0 if j == i else e for j, e in enumerate(g.exps)))
            left = ideal_sum(I, MonomialIdeal(I.ring, (first,)))
            right = ideal_sum(I, MonomialIdeal(I.ring, (rest,)))
            return _split(left) + _split(right)
    return [I]


@lru_cache(maxsize=4096)
def irreducible_decomposition(I: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """Unique irredundant decomposition of I into ideals generated by pure powers.

    Returned sorted by (number of variables, powers).
    """
    _require_proper(I)
    parts = {IrreducibleComponent.from_ideal(J) for J in _split(I)}
    ideals = {q: q.as_ideal() for q in parts}
    # an irreducible monomial ideal contains an intersection only if it contains a factor
    kept = [q for q in parts if not any(r != q and ideals[r] <= ideals[q] for r in parts)]
    return tuple(sorted(kept, key=IrreducibleComponent.sort_key))


def reconstruct(components: Iterable[IrreducibleComponent]) -> MonomialIdeal:
    comps = [q.as_ideal() for q in components]
    return intersect(comps[0], *comps[1:])


def associated_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    primes = {q.prime() for q in irreducible_decomposition(I)}
    return tuple(sorted(primes, key=MonomialPrime.sort_key))


def minimal_primes(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    ass = associated_primes(I)
    return tuple(p for p in ass if not any(q < p for q in ass))


def height(I: MonomialIdeal) -> int:
    return min(p.height for p in minimal_primes(I))


def dim_quotient(I: MonomialIdeal) -> int:
    return I.ring.n - height(I)


def assh(I: MonomialIdeal) -> tuple[MonomialPrime, ...]:
    h = height(I)
    return tuple(p for p in associated_primes(I) if p.height == h)


def is_equidimensional(I: MonomialIdeal) -> bool:
    h = height(I)
    return all(p.height == h for p in minimal_primes(I))


def is_unmixed(I: MonomialIdeal) -> bool:
    return set(associated_primes(I)) == set(assh(I))


def ass_equals_min(I: MonomialIdeal) -> bool:
    return set(associated_primes(I)) == set(minimal_primes(I))


def prime_in_ring(p: MonomialPrime, ring: Ring) -> None:
    if p.ring != ring:
        raise RingMismatch(f"prime {p} is not in ring ({ring})")
