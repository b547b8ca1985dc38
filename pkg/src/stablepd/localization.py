"""Monomial localization I(p) and enumeration of monomial primes containing I."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .decomposition import MonomialPrime, minimal_primes, prime_in_ring
from .errors import RingMismatch
from .ideal import MonomialIdeal
from .ring import Monomial, Ring


@dataclass(frozen=True)
class LocalizedIdeal:
    """I(p) inside S(p) = K[x_i : x_i in p].

    ``index_map[k]`` is the index in the original ring of variable k of S(p).
    """

    prime: MonomialPrime
    ring: Ring
    ideal: MonomialIdeal
    index_map: tuple[int, ...]

    def lift(self, u: Monomial) -> Monomial:
        """Re-embed a monomial of S(p) into the original ring."""
        exps = [0] * self.prime.ring.n
        for k, e in enumerate(u.exps):
            exps[self.index_map[k]] = e
        return Monomial(self.prime.ring, tuple(exps))


def localize(I: MonomialIdeal, p: MonomialPrime) -> LocalizedIdeal:
    """Set every variable outside p to 1."""
    prime_in_ring(p, I.ring)
    keep = p.vars
    small = Ring(tuple(I.ring.names[i] for i in keep))
    gens = tuple(Monomial(small, tuple(g.exps[i] for i in keep)) for g in I.gens)
    return LocalizedIdeal(p, small, MonomialIdeal(small, gens), keep)


def contains(p: MonomialPrime, I: MonomialIdeal) -> bool:
    """True iff I ⊆ p, i.e. p ∈ V*(I)."""
    if p.ring != I.ring:
        raise RingMismatch(f"prime {p} and ideal {I} live in different rings")
    pv = set(p.vars)
    return all(not g.support.isdisjoint(pv) for g in I.gens)


def primes_at_or_above(I: MonomialIdeal, h: int) -> Iterator[MonomialPrime]:
    """Lazily yield p ∈ V*(I) with height p >= h, ordered by height then variable tuple.

    Each height level is built from supersets of minimal primes instead of
    scanning every subset of the variables.
    """
    n = I.ring.n
    if not 0 <= h <= n:
        raise ValueError(f"height bound {h} outside 0..{n}")
    if I.is_unit():
        return
    if I.is_zero():
        bases = [()]
    else:
        bases = [p.vars for p in minimal_primes(I)]
    for k in range(max(h, 1), n + 1):
        level: set[tuple[int, ...]] = set()
        for base in bases:
            if len(base) > k:
                continue
            rest = [i for i in range(n) if i not in base]
            for extra in combinations(rest, k - len(base)):
                level.add(tuple(sorted(base + extra)))
        for vs in sorted(level):
            yield MonomialPrime(I.ring, vs)


def monomial_primes(ring: Ring) -> Iterator[MonomialPrime]:
    """Every monomial prime of the ring, by height then variables."""
    for k in range(1, ring.n + 1):
        for vs in combinations(range(ring.n), k):
            yield MonomialPrime(ring, vs)
