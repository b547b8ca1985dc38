import pytest
from hypothesis import given, strategies as st

from stablepd.errors import ParseError, RingMismatch, UnknownVariable
from stablepd.ring import Monomial, Ring, mono_divides, mono_lcm, mono_quotient_saturating, parse_monomial

from strategies import RINGS, monomials


def test_ring_parse_forms():
    assert Ring.parse("x1..x4").names == ("x1", "x2", "x3", "x4")
    assert Ring.parse("x, y ,z,u").n == 4
    assert Ring.parse("a,x1..x2").names == ("a", "x1", "x2")
    assert Ring.standard(2) == Ring.parse("x1,x2")


@pytest.mark.parametrize("bad", ["", "x,x", "1x", "x3..x1"])
def test_ring_rejects(bad):
    with pytest.raises(ValueError):
        Ring.parse(bad)


def test_divides_examples(xyz):
    m = xyz.monomial
    assert mono_divides(xyz.one(), m("x^2*y*z"))
    assert not mono_divides(m("x^2"), m("x"))
    assert mono_divides(m("x^2*y"), m("x^2*y*z"))


def test_lcm_examples(xyz):
    m = xyz.monomial
    assert mono_lcm(m("x"), m("y")) == m("x*y")
    assert mono_lcm(m("x*y^2"), m("x*y^2")) == m("x*y^2")
    assert mono_lcm(m("x^2*y"), m("x*z")) == m("x^2*y*z")


def test_saturating_quotient_examples(xyz):
    m = xyz.monomial
    assert mono_quotient_saturating(m("x^2*y"), m("x")) == m("x*y")
    assert mono_quotient_saturating(m("x"), m("y")) == m("x")
    assert mono_quotient_saturating(m("x*z^3"), m("x*z^3")) == xyz.one()


def test_ring_mismatch(xyz):
    other = Ring.parse("x,y")
    with pytest.raises(RingMismatch):
        mono_lcm(xyz.monomial("x"), other.monomial("x"))


def test_monomial_text_round_trip(xyz):
    assert str(xyz.monomial("z*x^2*x")) == "x^3*z"
    assert str(xyz.one()) == "1"
    assert parse_monomial(" y ^ 2 * z ", xyz).exps == (0, 2, 1)
    with pytest.raises(UnknownVariable):
        xyz.monomial("w")
    with pytest.raises(ParseError):
        xyz.monomial("x^0")


def test_negative_exponent_rejected(xyz):
    with pytest.raises(ValueError):
        Monomial(xyz, (0, -1, 0))


ring_and_three = st.sampled_from(RINGS).flatmap(
    lambda R: st.tuples(monomials(R), monomials(R), monomials(R)))


@given(ring_and_three)
def test_lcm_and_divisibility_laws(abc):
    a, b, c = abc
    one = a.ring.one()
    assert mono_lcm(a, b) == mono_lcm(b, a)
    assert mono_lcm(mono_lcm(a, b), c) == mono_lcm(a, mono_lcm(b, c))
    assert mono_lcm(a, a) == a
    assert mono_lcm(a, one) == a
    assert mono_divides(a, b) == (mono_lcm(a, b) == b)
    if mono_divides(a, b) and mono_divides(b, a):
        assert a == b


@given(ring_and_three)
def test_text_form_reparses(abc):
    for m in abc:
        assert parse_monomial(str(m), m.ring) == m
