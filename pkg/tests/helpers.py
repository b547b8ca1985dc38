"""Seeded random generators for the randomized suites."""
from __future__ import annotations

import random

from stablepd.decomposition import MonomialPrime
from stablepd.ideal import MonomialIdeal, intersect, power
from stablepd.polymatroidal import TransversalSpec
from stablepd.ring import Monomial, Ring


def random_monomial(rng: random.Random, ring: Ring, max_exp: int, min_degree: int = 1) -> Monomial:
    while True:
        m = Monomial(ring, tuple(rng.randint(0, max_exp) for _ in range(ring.n)))
        if m.degree >= min_degree:
            return m


def random_generated(rng: random.Random, ring: Ring, max_gens: int = 8, max_exp: int = 3) -> MonomialIdeal:
    k = rng.randint(1, max_gens)
    return MonomialIdeal(ring, tuple(random_monomial(rng, ring, max_exp) for _ in range(k)))


def random_prime(rng: random.Random, ring: Ring, max_height: int | None = None) -> MonomialPrime:
    h = rng.randint(1, max_height or ring.n)
    return MonomialPrime(ring, tuple(rng.sample(range(ring.n), h)))


def random_primary_meet(rng: random.Random, ring: Ring) -> MonomialIdeal:
    parts = [power(random_prime(rng, ring).as_ideal(), rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
    return intersect(parts[0], *parts[1:])


def random_squarefree(rng: random.Random, ring: Ring) -> MonomialIdeal:
    return random_generated(rng, ring, max_gens=6, max_exp=1)


def random_ideal(rng: random.Random, n_max: int = 5) -> MonomialIdeal:
    """Mix of shapes so that CM, unmixed and generalized-CM cases all show up."""
    ring = Ring.standard(rng.randint(2, n_max))
    kind = rng.choice(["generated", "meet", "squarefree"])
    if kind == "generated":
        return random_generated(rng, ring, max_gens=6)
    if kind == "meet":
        return random_primary_meet(rng, ring)
    return random_squarefree(rng, ring)


def random_transversal(rng: random.Random, n_max: int = 6, r_max: int = 4) -> TransversalSpec:
    ring = Ring.standard(rng.randint(1, n_max))
    r = rng.randint(1, r_max)
    if rng.random() < 0.15:
        p = random_prime(rng, ring)
        return TransversalSpec((p,) * r)
    max_h = 1 if rng.random() < 0.1 else None
    return TransversalSpec(tuple(random_prime(rng, ring, max_h) for _ in range(r)))
