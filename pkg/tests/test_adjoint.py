import pytest

from kgroth.adjoint import (adjoint, adjoint_closed, adjoint_genfun_check, adjoint_identity_closed,
                            adjoint_relative, change_of_parameter_check, interval_sum, operator_identity_check,
                            x_exponent)
from kgroth.config import GuardExceeded
from kgroth.genfun import grading_ok, groth
from kgroth.polyring import LocPoly, Poly, VarId, unit_power
from kgroth.weyl import GroupElt, group

CASES = [("B", 2), ("C", 2), ("D", 2), ("A", 3)]


def test_top_element():
    for letter, n in CASES:
        grp = group(letter, n)
        w0 = grp.elt(grp.longest)
        assert adjoint(w0, n).value == LocPoly.coerce(groth(letter, n, w0))


@pytest.mark.parametrize("letter,e", [("B", 3), ("C", 4), ("D", 2)])
def test_identity_closed_form_rank_2(letter, e):
    assert x_exponent(letter, 2) == e
    expected = (unit_power(VarId.parse("a1").slot, 1) * unit_power(VarId.parse("b1").slot, 1)
                * unit_power(VarId.parse("x1").slot, e) * unit_power(VarId.parse("x2").slot, e))
    assert adjoint(GroupElt.identity(letter, 2)).value == LocPoly.coerce(expected)
    assert adjoint_identity_closed(letter, 2) == expected


@pytest.mark.parametrize("letter", "BCD")
def test_identity_closed_form_rank_3(letter):
    assert adjoint(GroupElt.identity(letter, 3)).value == LocPoly.coerce(adjoint_identity_closed(letter, 3))


@pytest.mark.parametrize("letter,n", CASES)
def test_interval_sums(letter, n):
    for w in group(letter, n).elements():
        val = adjoint(w, n).value
        assert val == LocPoly.coerce(interval_sum(w, n))
        assert grading_ok(val.to_poly(), w.length())


def test_relative_examples():
    grp = group("C", 2)
    for w in grp.elements():
        assert adjoint_relative(w, w) == groth("C", 2, w)
    w0 = grp.elt(grp.longest)
    assert LocPoly.coerce(adjoint_relative(GroupElt.identity("C", 2), w0)) == adjoint(GroupElt.identity("C", 2)).value
    s1, s12 = GroupElt.from_word("A", 3, (1,)), GroupElt.from_word("A", 3, (1, 2))
    assert adjoint_relative(s1, s12) == groth("A", 3, s1) + groth("A", 3, s12).mul_beta()
    with pytest.raises(ValueError):
        adjoint_relative(s12, s1)


def test_beta_minus_one_alternating_sum():
    grp = group("C", 2)
    for w in grp.elements():
        val = adjoint(w).value.to_poly().subs({0: Poly.const(-1)})
        alt = Poly()
        for v in grp.elements():
            if w.bruhat_leq(v):
                sign = -1 if (v.length() - w.length()) % 2 else 1
                alt = alt + groth("C", 2, v).subs({0: Poly.const(-1)}) * sign
        assert val == alt


@pytest.mark.parametrize("letter", "BCD")
def test_factorization(letter):
    assert adjoint_genfun_check(letter, 2)
    for w in group(letter, 2).elements():
        assert adjoint(w).value == adjoint_closed(w)


def test_factorization_type_A():
    assert adjoint_genfun_check("A", 3)


@pytest.mark.parametrize("letter", "BCD")
def test_operator_identities(letter):
    assert operator_identity_check(letter, 2)


@pytest.mark.parametrize("letter,words", [("C", [(), (0,), (1, 0)]), ("B", [(0,), (0, 1)]),
                                          ("D", [(1,), (1, -1)])])
def test_change_of_parameter(letter, words):
    for word in words:
        assert change_of_parameter_check(GroupElt.from_word(letter, 2, word))


def test_guard():
    with pytest.raises(GuardExceeded):
        adjoint(GroupElt.identity("C", 4))
