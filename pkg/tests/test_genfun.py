from fractions import Fraction

import pytest

from kgroth.genfun import (BadIndex, GrothFamily, build_A, build_F, build_G_A_double, build_G_A_double_direct,
                           build_G_second, grading_ok, groth, stanley, triple_expand)
from kgroth.hecke import HeckeElt, HFactor, product_chain
from kgroth.polyring import (Poly, TruncSeries, VarId, a, b, bar, binom_half, oplus, oplus_all, x)
from kgroth.symfun import gq
from kgroth.weyl import HAT, GroupElt, group


def v(name):
    return VarId.parse(name)


def test_A_examples():
    grp = group("A", 2)
    assert build_A(1, 2, x(1)) == HeckeElt.one(grp).mul_h(1, x(1))
    grp3 = group("A", 3)
    assert build_A(1, 3, x(1)) == product_chain(grp3, [HFactor(2, x(1)), HFactor(1, x(1))])
    with pytest.raises(BadIndex):
        build_A(3, 3, x(1))


def test_F_identity_coefficient():
    for L in "BCD":
        assert build_F(L, 3, x(1)).coefficient((1, 2, 3)) == Poly.const(1)


def test_type_A_small():
    G = build_G_A_double(2)
    assert G.coefficient((1, 2)) == Poly.const(1)
    assert G.coefficient((2, 1)) == oplus(a(1), b(1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_row_form_matches_definition(n):
    assert build_G_A_double(n) == build_G_A_double_direct(n)


def test_A4_1432_specialization():
    p = groth("A", 4, GroupElt("A", 4, (1, 4, 3, 2)))
    sub = {v(f"a{i}").slot: Poly.const(1) for i in range(1, 4)}
    sub.update({v(f"b{i}").slot: Poly() for i in range(1, 4)})
    assert p.subs(sub) == Poly.const(5) + Poly.beta() * 5 + Poly.beta(2)


@pytest.mark.parametrize("letter", "BCD")
def test_identity_coefficient_is_one(letter):
    assert groth(letter, 2, GroupElt.identity(letter, 2)) == Poly.const(1)


def test_C2_s0_is_factorial_GQ1():
    assert groth("C", 2, GroupElt.from_word("C", 2, (0,))) == gq((1,), 2, True)


def test_D2_s1_s1h_is_square():
    p = groth("D", 2, GroupElt.from_word("D", 2, (1, HAT)))
    ab = [v(n).slot for n in ("a1", "b1")]
    assert p.set_zero(ab) == oplus(x(1), x(2)) ** 2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_C_s0_stanley_is_gq1(n):
    s0 = GroupElt.from_word("C", n, (0,))
    assert stanley("C", n, s0) == gq((1,), n)
    assert gq((1,), n) == oplus_all(*[oplus(x(i), x(i)) for i in range(1, n + 1)])


@pytest.mark.parametrize("letter", "BCD")
def test_stanley_inverse_symmetry(letter):
    for w in group(letter, 3).elements():
        assert stanley(letter, 3, w) == stanley(letter, 3, w.inverse())


@pytest.mark.parametrize("letter", "BCD")
def test_strong_stability(letter):
    # G_{n,w} with the same x-alphabet does not depend on the rank n
    for w in group(letter, 2).elements():
        assert groth(letter, 3, w.embed(3), nx=2) == groth(letter, 2, w)


@pytest.mark.parametrize("letter", "BCD")
def test_weak_stability_of_F(letter):
    x3 = [v("x3").slot]
    for w in group(letter, 2).elements():
        assert stanley(letter, 3, w.embed(3)).set_zero(x3) == stanley(letter, 2, w)


@pytest.mark.parametrize("letter", "BCD")
def test_grading_and_nonnegativity(letter):
    for w in group(letter, 2).elements():
        p = groth(letter, 2, w)
        assert grading_ok(p, w.length())
        assert p.coefficients_nonnegative()


@pytest.mark.parametrize("n", [3, 4])
def test_type_A_grading(n):
    for w in group("A", n).elements():
        p = groth("A", n, w)
        assert grading_ok(p, w.length()) and p.coefficients_nonnegative()


@pytest.mark.parametrize("letter", "BCD")
def test_triple_expansion(letter):
    for w in group(letter, 2).elements():
        assert triple_expand(letter, 2, w) == groth(letter, 2, w)


def test_triple_expansion_identity():
    assert triple_expand("C", 3, GroupElt.identity("C", 3)) == Poly.const(1)


def test_type_A_subgroup_embedding():
    # w in the S_2 part: G^B = G^C = G^{A_3}_{1^2 x w}(x1,x2,a1; x1,x2,b1)
    sub = {v("a1").slot: x(1), v("a2").slot: x(2), v("a3").slot: a(1),
           v("b1").slot: x(1), v("b2").slot: x(2), v("b3").slot: b(1)}
    for win in ((1, 2), (2, 1)):
        gA = groth("A", 4, GroupElt("A", 4, (1, 2) + tuple(2 + k for k in win))).subs(sub)
        assert groth("C", 2, GroupElt("C", 2, win)) == gA
        assert groth("B", 2, GroupElt("B", 2, win)) == gA


def test_family_descriptor():
    w = GroupElt.from_word("C", 2, (0,))
    assert GrothFamily("C", 2).extract(w) == groth("C", 2, w)
    assert GrothFamily("C", 2, "stanley").extract(w) == stanley("C", 2, w)


# -- second kind

def _series(val, trunc):
    return TruncSeries.from_value(val, trunc)


def _bars_sum():
    return oplus_all(*[bar(v(f"{f}{i}")) for f in "ab" for i in (1, 2)])


def test_second_kind_s0_type_C():
    G = build_G_second("C", 2, 3)
    s0 = GroupElt.from_word("C", 2, (0,))
    assert G.coefficient(s0.window) == _series(_bars_sum(), 3)
    assert G.coefficient((1, 2)) == TruncSeries(Poly.const(1), 3)


def test_second_kind_s0_type_B():
    trunc = 3
    G = build_G_second("B", 2, trunc)
    S = _series(_bars_sum(), trunc)
    # (sqrt(1 + beta S) - 1) / beta = sum_k binom(1/2, k) beta^(k-1) S^k
    ref = TruncSeries(Poly(), trunc)
    power = TruncSeries(Poly.const(1), trunc)
    for k in range(1, trunc + 1):
        power = power * S
        ref = ref + power.mul_beta(k - 1) * TruncSeries(Poly.const(binom_half(k)), trunc)
    assert G.coefficient(GroupElt.from_word("B", 2, (0,)).window) == ref
    assert binom_half(2) == Fraction(-1, 8)


@pytest.mark.parametrize("letter", "BCD")
def test_second_kind_weak_stability(letter):
    trunc = 3
    G2, G3 = build_G_second(letter, 2, trunc), build_G_second(letter, 3, trunc)
    zero = [v("a3").slot, v("b3").slot]
    for w in group(letter, 2).elements():
        c3, c2 = G3.coefficient(w.embed(3).window), G2.coefficient(w.window)
        c3 = c3.poly if isinstance(c3, TruncSeries) else c3     # absent terms come back as Poly zero
        c2 = c2.poly if isinstance(c2, TruncSeries) else c2
        assert c3.set_zero(zero) == c2
