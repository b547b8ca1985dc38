import pytest
from hypothesis import given, settings

from stablepd.errors import RingMismatch
from stablepd.ideal import (
    MonomialIdeal,
    colon,
    intersect,
    minimize,
    power,
    product,
    radical,
    support,
)
from stablepd.ring import Ring

from conftest import ideal
from oracles import monomials_up_to, member
from strategies import ideal_pairs, ideals


def test_minimize_examples(xyz):
    m = xyz.monomial
    assert minimize([m("x"), m("x^2")]).gens == (m("x"),)
    three = minimize([m("x^2*y"), m("x^2*z"), m("x*y*z")])
    assert set(three.gens) == {m("x^2*y"), m("x^2*z"), m("x*y*z")}
    assert minimize([], ring=xyz).is_zero()


def test_canonical_order(xyz):
    I = ideal(xyz, "z", "y^2", "x*z", "x^2")
    assert [str(g) for g in I.gens] == ["z", "x^2", "y^2"]
    assert I == ideal(xyz, "y^2", "x^2", "z")


def test_product_examples(xyz, r4):
    assert product(ideal(xyz, "x"), ideal(xyz, "x*y", "x*z", "y*z")) == ideal(xyz, "x^2*y", "x^2*z", "x*y*z")
    I = ideal(xyz, "x*y", "z^2")
    assert product(I, MonomialIdeal.unit(xyz)) == I
    got = product(ideal(r4, "x1", "x2", "x3"), ideal(r4, "x1", "x4"))
    assert got == ideal(r4, "x1^2", "x1*x2", "x1*x3", "x1*x4", "x2*x4", "x3*x4")


def test_intersect_examples(xyz):
    R = Ring.parse("x,y,z,u")
    assert intersect(ideal(R, "x", "y"), ideal(R, "y", "z", "u")) == ideal(R, "y", "x*z", "x*u")
    four = intersect(ideal(xyz, "x"), ideal(xyz, "x^2", "y"), ideal(xyz, "x^2", "z"), ideal(xyz, "y", "z"))
    assert four == ideal(xyz, "x^2*y", "x^2*z", "x*y*z")
    I = ideal(xyz, "x*y", "z")
    assert intersect(I, MonomialIdeal.unit(xyz)) == I


def test_colon_examples(xyz):
    I = ideal(xyz, "x^2*y", "x^2*z", "x*y*z")
    assert colon(I, xyz.monomial("x*y")) == ideal(xyz, "x", "z")
    assert colon(I, xyz.one()) == I
    assert colon(ideal(xyz, "x^2"), xyz.monomial("x")) == ideal(xyz, "x")


def test_radical_and_support(r4, xyz):
    I = product(ideal(r4, "x1", "x2", "x3"), ideal(r4, "x1", "x4"))
    assert radical(I) == ideal(r4, "x1", "x2*x4", "x3*x4")
    assert radical(ideal(xyz, "x", "y*z")) == ideal(xyz, "x", "y*z")
    assert radical(ideal(xyz, "x^2", "y")) == ideal(xyz, "x", "y")
    assert support(I) == {0, 1, 2, 3}
    assert support(MonomialIdeal.zero(r4)) == set()
    assert support(ideal(r4, "x1*x3")) == {0, 2}


def test_membership_and_containment(xyz):
    I = ideal(xyz, "x^2", "y*z")
    assert xyz.monomial("x^3*y") in I
    assert xyz.monomial("x*y") not in I
    assert ideal(xyz, "x^2*y") <= I
    assert not I <= ideal(xyz, "x^2")


def test_zero_unit_mismatch(xyz):
    assert MonomialIdeal.unit(xyz).is_unit()
    assert MonomialIdeal.zero(xyz).is_zero()
    with pytest.raises(RingMismatch):
        product(ideal(xyz, "x"), ideal(Ring.parse("x,y"), "x"))
    with pytest.raises(ValueError):
        power(ideal(xyz, "x"), 0)


@given(ideal_pairs())
@settings(max_examples=60, deadline=None)
def test_arithmetic_laws(pair):
    I, J = pair
    assert product(I, J) == product(J, I)
    assert intersect(I, J) == intersect(J, I)
    assert product(I, J) <= intersect(I, J)
    assert radical(radical(I)) == radical(I)
    assert radical(product(I, J)) == radical(intersect(I, J))


@given(ideal_pairs(max_gens=3, max_exp=2))
@settings(max_examples=40, deadline=None)
def test_intersection_is_setwise(pair):
    I, J = pair
    K = intersect(I, J)
    for u in monomials_up_to(I.ring, 4):
        assert member(K, u) == (member(I, u) and member(J, u))


@given(ideals(max_gens=4))
@settings(max_examples=40, deadline=None)
def test_minimal_generators_are_antichain(I):
    for a in I.gens:
        for b in I.gens:
            if a != b:
                assert not all(x <= y for x, y in zip(a.exps, b.exps))


def test_prime_powers_have_prime_radical(r4):
    P = ideal(r4, "x1", "x3", "x4")
    for k in range(1, 4):
        assert radical(power(P, k)) == P
