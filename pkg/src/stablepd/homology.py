"""Multigraded Betti numbers of S/I from upper-Koszul simplicial complexes.

For a multidegree m the upper-Koszul complex is
``K^m(I) = {σ ⊆ supp(m) : m / x^σ ∈ I}`` and ``β_{i,m}(I) = dim H̃_{i-1}(K^m(I); Q)``.
Only multidegrees in the lcm lattice of G(I) can carry nonzero Betti numbers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from .decomposition import dim_quotient
from .errors import NotProper, TooLarge
from .ideal import MonomialIdeal
from .linalg import integer_rank
from .ring import Monomial, Ring

MAX_VERTICES = 20
MAX_LATTICE = 1 << 18


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex given by all of its faces (including ∅ when non-void)."""

    vertices: tuple[int, ...]
    faces: frozenset[frozenset[int]]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> SimplicialComplex:
        facets = [frozenset(f) for f in facets]
        faces: set[frozenset[int]] = set()
        for f in facets:
            items = sorted(f)
            for mask in range(1 << len(items)):
                faces.add(frozenset(v for k, v in enumerate(items) if mask >> k & 1))
        verts = tuple(sorted(set().union(*facets))) if facets else ()
        return cls(verts, frozenset(faces))

    @classmethod
    def void(cls) -> SimplicialComplex:
        return cls((), frozenset())

    def dimension(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1


def _boundary_rows(faces_by_size: dict[int, list[int]], size: int) -> list[dict[int, int]]:
    lower = {f: k for k, f in enumerate(faces_by_size.get(size - 1, []))}
    rows = []
    for f in faces_by_size.get(size, []):
        row = {}
        sign = 1
        bits = f
        while bits:
            low = bits & -bits
            row[lower[f ^ low]] = sign
            sign = -sign
            bits ^= low
        rows.append(row)
    return rows


def _ranks_from_masks(faces: Iterable[int]) -> list[int]:
    """Reduced homology ranks of a complex given by face bitmasks; entry k is H̃_{k-1}."""
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    if not by_size:
        return []
    for v in by_size.values():
        v.sort()
    top = max(by_size)
    # rank of the boundary map out of faces with `size` vertices
    brank = {s: (integer_rank(_boundary_rows(by_size, s)) if s > 0 else 0) for s in range(top + 2)}
    return [len(by_size.get(s, [])) - brank[s] - brank.get(s + 1, 0) for s in range(top + 1)]


def reduced_homology_ranks(K: SimplicialComplex) -> list[int]:
    """dim H̃_d(K; Q) for d = -1, 0, 1, ...; index k of the result holds degree k - 1."""
    if len(K.vertices) > MAX_VERTICES:
        raise TooLarge(f"complex has {len(K.vertices)} vertices (limit {MAX_VERTICES})")
    pos = {v: k for k, v in enumerate(K.vertices)}
    masks = [sum(1 << pos[v] for v in f) for f in K.faces]
    return _ranks_from_masks(masks)


@lru_cache(maxsize=1 << 16)
def _koszul_ranks(facets: tuple[int, ...]) -> tuple[int, ...]:
    faces: set[int] = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return tuple(_ranks_from_masks(faces))


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero():
        raise NotProper(f"{I} must be a proper nonzero ideal")


def _lattice_array(I: MonomialIdeal) -> np.ndarray:
    G = np.array([g.exps for g in I.gens], dtype=np.int64)
    seen = {tuple(r) for r in G.tolist()}
    frontier = G
    while len(frontier):
        cand = np.maximum(frontier[:, None, :], G[None, :, :]).reshape(-1, G.shape[1])
        cand = np.unique(cand, axis=0)
        fresh = [r for r in map(tuple, cand.tolist()) if r not in seen]
        seen.update(fresh)
        if len(seen) > MAX_LATTICE:
            raise TooLarge(f"lcm lattice exceeds {MAX_LATTICE} elements")
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, G.shape[1])
    return np.array(sorted(seen), dtype=np.int64)


def lcm_lattice(I: MonomialIdeal) -> set[Monomial]:
    """lcms of all nonempty subsets of G(I)."""
    _require_proper(I)
    return {Monomial(I.ring, tuple(r)) for r in _lattice_array(I).tolist()}


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers β_{i,m}(I) of the ideal plus the derived invariants of S/I.

    ``entries[(i, m)]`` is β_{i,m}(I), so β_{i+1,m}(S/I) in quotient indexing.
    """

    ring: Ring
    entries: dict[tuple[int, Monomial], int] = field(compare=False)
    pd_quotient: int
    depth_quotient: int
    dim_quotient: int

    def totals(self) -> list[int]:
        """Total Betti numbers of S/I in homological degrees 0..pd."""
        out = [1] + [0] * self.pd_quotient
        for (i, _), b in self.entries.items():
            out[i + 1] += b
        return out

    def graded(self) -> dict[tuple[int, int], int]:
        """β_{i,j}(S/I) keyed by (homological degree i, internal degree j)."""
        out = {(0, 0): 1}
        for (i, m), b in self.entries.items():
            key = (i + 1, m.degree)
            out[key] = out.get(key, 0) + b
        return out

    def format(self) -> str:
        graded = self.graded()
        cols = range(self.pd_quotient + 1)
        rows = sorted({j - i for i, j in graded})
        width = max(len(str(v)) for v in list(graded.values()) + self.totals()) + 1
        head = "       " + "".join(f"{i:>{width}}" for i in cols)
        lines = [head]
        for r in rows:
            cells = []
            for i in cols:
                v = graded.get((i, i + r), 0)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>5}: " + "".join(cells))
        lines.append("total: " + "".join(f"{v:>{width}}" for v in self.totals()))
        return "\n".join(lines)


@lru_cache(maxsize=1 << 14)
def betti_table(I: MonomialIdeal) -> BettiTable:
    _require_proper(I)
    n = I.ring.n
    if n > MAX_VERTICES:
        raise TooLarge(f"ring has {n} variables (limit {MAX_VERTICES})")
    G = np.array([g.exps for g in I.gens], dtype=np.int64)
    L = _lattice_array(I)
    bit = 1 << np.arange(n, dtype=np.int64)
    divides = np.all(G[None, :, :] <= L[:, None, :], axis=2)
    slack = ((G[None, :, :] < L[:, None, :]) * bit).sum(axis=2)
    supp = ((L > 0) * bit).sum(axis=1)
    entries: dict[tuple[int, Monomial], int] = {}
    top = 0
    for k in range(len(L)):
        facets = set(slack[k][divides[k]].tolist())
        if int(supp[k]) in facets:
            continue
        common = -1
        for f in facets:
            common &= f
        if common:
            continue  # cone over a shared vertex
        facets = {f for f in facets if not any(f != g and f & g == f for g in facets)}
        ranks = _koszul_ranks(tuple(sorted(facets)))
        m = None
        for i, b in enumerate(ranks):
            if b:
                m = m or Monomial(I.ring, tuple(L[k].tolist()))
                entries[(i, m)] = b
                top = max(top, i)
    pd = top + 1
    return BettiTable(I.ring, dict(sorted(entries.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key()))),
                      pd, n - pd, dim_quotient(I))


def projective_dimension(I: MonomialIdeal) -> int:
    """pd S/I."""
    return betti_table(I).pd_quotient


def depth(I: MonomialIdeal) -> int:
    """depth S/I = n - pd S/I."""
    return betti_table(I).depth_quotient
