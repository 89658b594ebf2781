import pytest
from hypothesis import given, strategies as st

from kgroth.divdiff import pi
from kgroth.genfun import stanley
from kgroth.polyring import LocPoly, Poly, oplus, oplus_all, x
from kgroth.symfun import (LengthExceedsN, expand_in_gp, gp, gq, gx, is_beta_supersymmetric,
                           is_symmetric, strict_partitions)
from kgroth.weyl import grassmannian_elements, group


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gp1_gq1_closed_forms(n):
    assert gp((1,), n) == oplus_all(*[x(i) for i in range(1, n + 1)])
    assert gq((1,), n) == oplus_all(*[oplus(x(i), x(i)) for i in range(1, n + 1)])


def test_empty_partition_and_length_guard():
    assert gp((), 3) == Poly.const(1)
    assert gq((), 2, True) == Poly.const(1)
    with pytest.raises(LengthExceedsN):
        gp((2, 1), 1)
    with pytest.raises(ValueError):
        gp((1, 1), 3)


def test_strict_partitions():
    assert strict_partitions(4, 2) == [(), (1,), (2,), (2, 1), (3,), (3, 1), (4,)]


def test_beta_zero_limit_of_gq():
    # Q_lambda = 2^len P_lambda at beta = 0
    for lam in [(1,), (2, 1), (3, 1)]:
        lhs = gq(lam, 3).subs({0: Poly()})
        rhs = gp(lam, 3).subs({0: Poly()}) * (2 ** len(lam))
        assert lhs == rhs


@pytest.mark.parametrize("n", [2, 3])
def test_supersymmetry_of_factorial_functions(n):
    for lam in strict_partitions(4, n):
        if lam:
            assert is_beta_supersymmetric(gp(lam, n, True), n)
            assert is_beta_supersymmetric(gq(lam, n, True), n)


def test_non_symmetric_is_rejected():
    assert not is_symmetric(x(1), 2)
    assert not is_beta_supersymmetric(x(1), 2)
    # symmetric but not supersymmetric
    assert not is_beta_supersymmetric(x(1) + x(2) + Poly.const(1), 2)
    assert not is_beta_supersymmetric(x(1) * x(1) + x(2) * x(2), 2)


@pytest.mark.parametrize("letter", "BCD")
def test_stanley_functions_are_supersymmetric(letter):
    for w in group(letter, 2).elements():
        assert is_beta_supersymmetric(stanley(letter, 2, w), 2)


def test_gq1_expansion():
    e = expand_in_gp(gq((1,), 3), 3)
    assert e.coeffs == {(1,): Poly.const(2), (2,): Poly.beta()}
    assert e.reconstruct() == gq((1,), 3)


def test_gp_expands_to_itself():
    for lam in [(1,), (2, 1), (3, 1), (3, 2, 1)]:
        assert expand_in_gp(gp(lam, 3), 3).coeffs == {lam: Poly.const(1)}


COEFFS = st.sampled_from([Poly.const(1), Poly.const(-2), Poly.beta(), Poly.beta(2) * 3])


@given(st.dictionaries(st.sampled_from([(1,), (2,), (2, 1), (3,), (3, 1)]), COEFFS, min_size=1, max_size=3))
def test_expansion_recovers_coefficients(combo):
    f = Poly()
    for lam, c in combo.items():
        f = f + c * gp(lam, 3)
    assert expand_in_gp(f, 3).coeffs == combo


@pytest.mark.parametrize("letter,basis", [("B", gp), ("C", gq), ("D", gp)])
def test_grassmannian_stanley_functions(letter, basis):
    for w in grassmannian_elements(letter, 3):
        lam = w.strict_partition()
        assert stanley(letter, 3, w) == basis(lam, 3)


# type D uses an even number of variables: the factorial GP only has mod 2 stability
@pytest.mark.parametrize("letter,n", [("B", 3), ("C", 3), ("D", 4)])
def test_factorial_characterization(letter, n):
    def G(elt):
        return LocPoly.coerce(gx(letter, elt.strict_partition(), n))
    for w in grassmannian_elements(letter, n):
        if w.strict_partition() not in [(), (1,), (2,), (2, 1)]:
            continue
        for i in range(1, n):
            sw = w.left(i)
            expected = G(sw) if sw.length() < w.length() else G(w).mul_beta() * -1
            assert pi(i, "b", gx(letter, w.strict_partition(), n), letter) == expected
