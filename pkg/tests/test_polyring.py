from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kgroth.polyring import (LocPoly, NotDivisible, Poly, TruncSeries, VarId, a, b, bar, binom_half,
                             divide_unit, exact_divide, ominus, oplus, oplus_all, sqrt_series,
                             substitute, to_text, unit_power, x)

VARS = [x(1), x(2), x(3), a(1), b(1), b(2)]


@st.composite
def polys(draw, max_terms=4):
    out = Poly()
    for _ in range(draw(st.integers(0, max_terms))):
        mono = Poly.const(draw(st.integers(-3, 3)))
        for v in draw(st.lists(st.sampled_from(VARS), max_size=3)):
            mono = mono * v
        if draw(st.booleans()):
            mono = mono.mul_beta(draw(st.integers(1, 2)))
        out = out + mono
    return out


@st.composite
def graded(draw):
    """A graded-homogeneous polynomial of degree 1 or 2 (deg beta = -1)."""
    d = draw(st.integers(1, 2))
    out = Poly()
    for _ in range(draw(st.integers(1, 3))):
        k = draw(st.integers(0, 2))
        mono = Poly.const(draw(st.integers(1, 3))).mul_beta(k) if k else Poly.const(draw(st.integers(1, 3)))
        for v in draw(st.lists(st.sampled_from(VARS), min_size=d + k, max_size=d + k)):
            mono = mono * v
        out = out + mono
    return out


# -- examples

def test_oplus_expands():
    assert oplus(x(1), x(2)) == x(1) + x(2) + (x(1) * x(2)).mul_beta()


def test_ominus_example():
    assert ominus(x(1), x(2)) == LocPoly(x(1) - x(2), {VarId.parse("x2").slot: 1})
    assert ominus(x(1), x(1)).is_zero()


def test_bar_and_zero_ominus():
    assert bar(b(1)) == LocPoly(-b(1), {VarId.parse("b1").slot: 1})
    assert ominus(Poly(), x(1)) == bar(x(1))


def test_bar_is_involution():
    assert substitute(bar(VarId.parse("b1")), {VarId.parse("b1"): bar(VarId.parse("b1"))}) == LocPoly.coerce(b(1))


@pytest.mark.parametrize("v", ["x1", "a2", "b3", "c1", "t1"])
def test_oplus_with_bar_vanishes(v):
    assert oplus(LocPoly.var(VarId.parse(v)), bar(VarId.parse(v))).is_zero()


def test_substitute_examples():
    s = substitute(x(1) + a(1), {VarId.parse("x1"): 0, VarId.parse("a1"): bar(VarId.parse("b1"))})
    assert s == bar(VarId.parse("b1"))
    t1 = VarId.parse("t1")
    assert substitute(oplus(x(1), x(2)), {VarId.parse("x1"): LocPoly.var(t1), VarId.parse("x2"): bar(t1)}).is_zero()
    assert substitute(x(1) * b(2), {}) == LocPoly.coerce(x(1) * b(2))


def test_exact_division():
    assert exact_divide(x(1) ** 2 - x(2) ** 2, x(1) - x(2)) == x(1) + x(2)
    assert exact_divide(Poly.const(2) * oplus(x(1), x(2)), Poly.const(2)) == oplus(x(1), x(2))
    with pytest.raises(NotDivisible):
        exact_divide(x(1) + Poly.const(1), x(2))


def test_divide_unit():
    slot = VarId.parse("x1").slot
    assert divide_unit(unit_power(slot, 3), slot) == unit_power(slot, 2)
    assert divide_unit(x(1), slot) is None


def test_sqrt_coefficients():
    s = sqrt_series(TruncSeries(Poly.const(1) + x(1), 4))
    expected = [Fraction(1), Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16), Fraction(-5, 128)]
    assert [binom_half(k) for k in range(5)] == expected
    ref = Poly()
    for k, c in enumerate(expected):
        ref = ref + (x(1) ** k) * Poly.const(c) if k else Poly.const(1)
    assert s == TruncSeries(ref, 4)
    assert sqrt_series(TruncSeries(Poly.const(1), 3)) == TruncSeries(Poly.const(1), 3)


def test_bar_series():
    # -x/(1+beta x) = -x + beta x^2 - beta^2 x^3 + ...
    s = TruncSeries.from_value(bar(VarId.parse("x1")), 3)
    ref = -x(1) + (x(1) ** 2).mul_beta() - (x(1) ** 3).mul_beta(2)
    assert s == TruncSeries(ref, 3)


def test_json_and_text_roundtrip():
    p = oplus(x(1), b(2)) * Poly.const(Fraction(3, 2))
    assert Poly.from_json(p.to_json()) == p
    assert to_text(oplus(x(1), x(2))) == "x1 + x2 + β*x1*x2"
    q = bar(VarId.parse("b1")) * LocPoly.coerce(x(1))
    assert LocPoly.from_json(q.to_json()) == q


# -- properties

@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p - p).is_zero()


@given(polys(), polys(), polys())
def test_oplus_associative_commutative(p, q, r):
    assert oplus(p, q) == oplus(q, p)
    assert oplus(oplus(p, q), r) == oplus(p, oplus(q, r))
    assert oplus_all(p, q, r) == oplus(oplus(p, q), r)


@given(polys(), polys())
def test_locpoly_ring_matches_poly(p, q):
    assert LocPoly.coerce(p) * LocPoly.coerce(q) == LocPoly.coerce(p * q)
    assert (LocPoly.coerce(p) + LocPoly.coerce(q)).to_poly() == p + q


@given(polys(), st.sampled_from(VARS))
def test_ominus_inverts_oplus(p, v):
    # denominators are restricted to (1 + beta v) for single variables v
    assert LocPoly.coerce(p) == ominus(oplus(p, v), v)


@given(polys(), polys().filter(lambda p: not p.is_zero()))
def test_exact_divide_roundtrip(p, q):
    assert exact_divide(p * q, q) == p


@given(graded(), graded())
def test_grading_multiplicative(p, q):
    assert p.is_homogeneous() and q.is_homogeneous()
    assert (p * q).degree() == p.degree() + q.degree()


@given(polys(max_terms=3))
def test_sqrt_squares_back(p):
    s = TruncSeries(Poly.const(1) + p.set_zero([]) * x(1), 4)   # no constant term in the tail
    r = sqrt_series(s)
    assert r * r == s
