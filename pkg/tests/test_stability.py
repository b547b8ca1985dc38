import random

import pytest

from stablepd.decomposition import MonomialPrime, height
from stablepd.errors import NotProper
from stablepd.ideal import MonomialIdeal, intersect, power
from stablepd.localization import primes_at_or_above
from stablepd.ring import Ring
from stablepd.stability import (
    classify,
    is_cohen_macaulay,
    is_generalized_cm,
    is_stable_pd,
    localized_pd,
)

from conftest import ideal
from helpers import random_ideal


@pytest.fixture
def ex14(xyz):
    return ideal(xyz, "x^2*y", "x^2*z", "x*y*z")


def test_stable_but_not_cm_with_positive_depth(ex14):
    # monomial primes alone do not force CM-or-depth-zero
    r = is_stable_pd(ex14, exhaustive=True)
    assert r.stable and not r.cm and r.depth > 0
    assert [(str(p), d) for p, d in r.examined] == [
        ("(x,y)", 2), ("(x,z)", 2), ("(y,z)", 2), ("(x,y,z)", 2)]


def test_unstable_examples(r4):
    I = intersect(ideal(r4, "x1", "x2"), ideal(r4, "x3", "x4"))
    r = is_stable_pd(I)
    assert not r.stable and str(r.witness) == "(x1,x2,x3)"
    assert (r.witness, 2) in r.examined
    E = ideal(r4, "x1*x2", "x2*x3", "x3*x4", "x1*x4", "x1*x3")
    r = is_stable_pd(E)
    assert not r.stable and str(r.witness) == "(x1,x2,x3)"
    assert localized_pd(E, r.witness) == 2


def test_short_circuit_vs_exhaustive(r4):
    I = intersect(ideal(r4, "x1", "x2"), ideal(r4, "x3", "x4"))
    short = is_stable_pd(I)
    full = is_stable_pd(I, exhaustive=True)
    assert len(short.examined) == 1
    assert len(full.examined) == 5
    assert short.witness == full.witness


def test_positive_depth_stable_example(r4):
    sq = lambda *v: power(ideal(r4, *v), 2)
    I = intersect(ideal(r4, "x1", "x4"), ideal(r4, "x2", "x3"),
                  sq("x1", "x2", "x3"), sq("x1", "x2", "x4"), sq("x1", "x3", "x4"), sq("x2", "x3", "x4"))
    r = is_stable_pd(I)
    assert r.stable and r.pd == 3


def test_depth_zero_is_stable(xyz):
    I = ideal(xyz, "x^2", "y^2", "z^2", "x*y*z")
    r = is_stable_pd(I)
    assert r.depth == 0 and r.stable
    assert [str(p) for p, _ in r.examined] == ["(x,y,z)"]


def test_cm_examples(r4):
    path = ideal(r4, "x1*x2", "x2*x3", "x3*x4")
    assert is_cohen_macaulay(path)
    assert not is_cohen_macaulay(power(path, 2))
    assert is_cohen_macaulay(MonomialPrime(r4, (0, 3)).as_ideal())


def test_generalized_cm_examples(r4, ex14):
    assert is_generalized_cm(intersect(ideal(r4, "x1", "x2"), ideal(r4, "x3", "x4")))
    assert not is_generalized_cm(ex14)
    assert is_generalized_cm(ideal(r4, "x1*x2", "x2*x3", "x3*x4"))


def test_classify_examples(xyz, r4):
    R3 = Ring.standard(3)
    I = intersect(ideal(R3, "x1"), ideal(R3, "x2", "x3"), ideal(R3, "x1^2", "x2"), ideal(R3, "x1^2", "x3"))
    r = classify(I)
    assert r.pd == 2 and r.stable
    rad = ideal(r4, "x1", "x2*x4", "x3*x4")
    assert not classify(rad).stable
    P = classify(MonomialPrime(r4, (1, 2)).as_ideal())
    assert P.cm and P.stable and P.unmixed and P.gcm


def test_report_dict_is_field_for_field(ex14):
    d = classify(ex14).to_dict()
    assert set(d) == {"pd", "depth", "dim", "stable", "examined", "witness", "cm", "gcm", "unmixed", "ass_eq_min"}
    assert d["examined"][0] == {"prime": "(x,y)", "pd": 2}


def test_not_proper(xyz):
    with pytest.raises(NotProper):
        is_stable_pd(MonomialIdeal.zero(xyz))
    with pytest.raises(NotProper):
        is_cohen_macaulay(MonomialIdeal.unit(xyz))


def _random(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        I = random_ideal(rng)
        if I.is_proper_nonzero():
            out.append(I)
    return out


@pytest.mark.parametrize("I", _random(60, 21), ids=str)
def test_cm_iff_pd_unchanged_everywhere(I):
    r = classify(I)
    everywhere = all(localized_pd(I, p) == r.pd for p in primes_at_or_above(I, 0))
    assert r.cm == everywhere
    if r.cm:
        assert r.stable and r.gcm
    if r.depth == 0:
        assert r.stable
    if height(I) == I.ring.n - 1:
        assert r.stable
    if r.gcm:
        assert r.stable == (r.cm or r.depth == 0)
    if r.ass_eq_min or r.unmixed:
        assert r.stable == r.cm
    assert r.stable == all(d == r.pd for _, d in r.examined)
