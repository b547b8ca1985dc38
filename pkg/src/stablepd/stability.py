"""Stable projective dimension and the Cohen-Macaulay style predicates around it."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .decomposition import (
    MonomialPrime,
    ass_equals_min,
    is_equidimensional,
    is_unmixed,
)
from .errors import NotProper
from .homology import betti_table, projective_dimension
from .ideal import MonomialIdeal
from .localization import localize, primes_at_or_above


@dataclass
class StabilityReport:
    pd: int
    depth: int
    dim: int
    stable: bool
    examined: list[tuple[MonomialPrime, int]] = field(default_factory=list)
    witness: Optional[MonomialPrime] = None
    cm: bool = False
    gcm: Optional[bool] = None  # None when the caller skipped the generalized-CM check
    unmixed: bool = False
    ass_eq_min: bool = False

    def to_dict(self) -> dict:
        return {
            "pd": self.pd,
            "depth": self.depth,
            "dim": self.dim,
            "stable": self.stable,
            "examined": [{"prime": str(p), "pd": d} for p, d in self.examined],
            "witness": str(self.witness) if self.witness is not None else None,
            "cm": self.cm,
            "gcm": self.gcm,
            "unmixed": self.unmixed,
            "ass_eq_min": self.ass_eq_min,
        }


def _require_proper(I: MonomialIdeal) -> None:
    if not I.is_proper_nonzero():
        raise NotProper(f"{I} must be a proper nonzero ideal")


def localized_pd(I: MonomialIdeal, p: MonomialPrime) -> int:
    """pd S(p)/I(p); p must contain I."""
    return projective_dimension(localize(I, p).ideal)


def is_cohen_macaulay(I: MonomialIdeal) -> bool:
    _require_proper(I)
    bt = betti_table(I)
    return bt.depth_quotient == bt.dim_quotient


def is_generalized_cm(I: MonomialIdeal) -> bool:
    """Equidimensional, and S(p)/I(p) is CM at every p in V*(I) other than the maximal ideal."""
    _require_proper(I)
    if not is_equidimensional(I):
        return False
    for p in primes_at_or_above(I, 0):
        if not p.is_maximal() and not is_cohen_macaulay(localize(I, p).ideal):
            return False
    return True


def is_stable_pd(I: MonomialIdeal, exhaustive: bool = False) -> StabilityReport:
    """Check pd S(p)/I(p) = pd S/I at every p in V*(I) with height p >= pd S/I.

    Stops at the first prime where the localized pd drops unless ``exhaustive``.
    """
    _require_proper(I)
    bt = betti_table(I)
    pd = bt.pd_quotient
    examined: list[tuple[MonomialPrime, int]] = []
    witness = None
    for p in primes_at_or_above(I, pd):
        d = localized_pd(I, p)
        examined.append((p, d))
        if d != pd and witness is None:
            witness = p
            if not exhaustive:
                break
    return StabilityReport(
        pd=pd,
        depth=bt.depth_quotient,
        dim=bt.dim_quotient,
        stable=witness is None,
        examined=examined,
        witness=witness,
        cm=bt.depth_quotient == bt.dim_quotient,
        unmixed=is_unmixed(I),
        ass_eq_min=ass_equals_min(I),
    )


def classify(I: MonomialIdeal) -> StabilityReport:
    """Exhaustive stability report with the generalized-CM flag filled in."""
    report = is_stable_pd(I, exhaustive=True)
    report.gcm = is_generalized_cm(I)
    return report
