"""Weyl-group actions on the a- and b-alphabets and isobaric divided differences.

    pi_i f  = (f - (1 + beta*alpha_i) s_i f) / alpha_i,     psi_i = pi_i + beta

with alpha_i = v_i + bar(v_{i+1}) (formal sum) for i >= 1, and for the special
nodes alpha_0 = bar(v_1) (type B), bar(v_1) + bar(v_1) (type C),
alpha_1h = bar(v_1) + bar(v_2) (type D).  All divisions are exact or raise.

The s_0 / s_1h action on x-dependent expressions is not defined pointwise on
polynomials in finitely many x; such calls raise UnsupportedXAction.  Those
cases are verified through generating-function identities instead
(``special_node_identity``).
"""

from __future__ import annotations

from typing import Iterable

from .genfun import F_factors, G_A_factors, build_Fbar, _grp
from .hecke import HeckeElt, product_chain
from .polyring import (Family, LocPoly, VarId, bar, oplus, substitute)
from .weyl import HAT, GroupElt, WeylGroup


class UnsupportedXAction(NotImplementedError):
    pass


def _var(family: str, i: int) -> VarId:
    return VarId(Family(family), i)


def _x_slots_present(f: LocPoly) -> bool:
    xs = {s for s in f.num.variables() if VarId.from_slot(s).family == Family.X}
    return bool(xs) or any(VarId.from_slot(s).family == Family.X for s, _ in f.den)


def act(s: int, family: str, f) -> LocPoly:
    """s^{(family)} applied to f."""
    f = LocPoly.coerce(f)
    if s >= 1:
        return f.rename({_var(family, s): _var(family, s + 1), _var(family, s + 1): _var(family, s)})
    if _x_slots_present(f):
        raise UnsupportedXAction("s_0 / s_1h on x-dependent values is defined only on generating functions")
    if s == 0:
        return substitute(f, {_var(family, 1): bar(_var(family, 1))})
    if s == HAT:
        return substitute(f, {_var(family, 1): bar(_var(family, 2)),
                              _var(family, 2): bar(_var(family, 1))})
    raise ValueError(f"bad generator {s}")


def act_word(word: Iterable[int], family: str, f) -> LocPoly:
    """w f for w = s_{i1} ... s_{ik}: the rightmost generator acts first."""
    out = LocPoly.coerce(f)
    for s in reversed(tuple(word)):
        out = act(s, family, out)
    return out


def alpha(s: int, family: str, letter: str) -> LocPoly:
    v = lambda i: LocPoly.var(_var(family, i))
    if s >= 1:
        return oplus(v(s), bar(_var(family, s + 1)))
    if s == 0:
        if letter == "B":
            return bar(_var(family, 1))
        if letter == "C":
            return oplus(bar(_var(family, 1)), bar(_var(family, 1)))
        raise ValueError("s_0 only exists in types B and C")
    if s == HAT:
        return oplus(bar(_var(family, 1)), bar(_var(family, 2)))
    raise ValueError(f"bad generator {s}")


def pi(s: int, family: str, f, letter: str = "C") -> LocPoly:
    f = LocPoly.coerce(f)
    al = alpha(s, family, letter)
    num = f - (al.mul_beta() + 1) * act(s, family, f)
    return num.divide(al)


def psi(s: int, family: str, f, letter: str = "C") -> LocPoly:
    f = LocPoly.coerce(f)
    return pi(s, family, f, letter) + f.mul_beta()


def psi_explicit(s: int, family: str, f, letter: str = "C") -> LocPoly:
    """(s f - f)/(v_{i+1} - v_i) style form of psi (formal difference)."""
    f = LocPoly.coerce(f)
    v = lambda i: LocPoly.var(_var(family, i))
    if s >= 1:
        from .polyring import ominus
        den = ominus(v(s + 1), v(s))
    elif s == 0:
        den = v(1) if letter == "B" else oplus(v(1), v(1))
    else:
        den = oplus(v(1), v(2))
    return (act(s, family, f) - f).divide(den)


def pi_word(word: Iterable[int], family: str, f, letter: str = "C") -> LocPoly:
    out = LocPoly.coerce(f)
    for s in reversed(tuple(word)):
        out = pi(s, family, out, letter)
    return out


def psi_word(word: Iterable[int], family: str, f, letter: str = "C") -> LocPoly:
    """psi_{i1} ... psi_{ik} f, innermost (rightmost) first."""
    out = LocPoly.coerce(f)
    for s in reversed(tuple(word)):
        out = psi(s, family, out, letter)
    return out


def psi_elt(w: GroupElt, family: str, f) -> LocPoly:
    return psi_word(w.reduced_word(), family, f, w.letter)


# -- recurrences

def pi_recurrence_expected(grp: WeylGroup, gen: HeckeElt, w: int, s: int, side: str):
    """Right-hand side of the divided-difference recurrence for G_w."""
    ws = grp.rmul(w, s) if side == "a" else grp.lmul(w, s)
    if grp.lengths[ws] == grp.lengths[w] - 1:
        return LocPoly.coerce(gen.coefficient(ws))
    return LocPoly.coerce(gen.coefficient(w)).mul_beta() * -1


def pi_recurrences_hold(gen: HeckeElt, letter: str, gens: Iterable[int] | None = None) -> list:
    """Check pi^(a)_i G_w and pi^(b)_i G_w for all w; returns failing (w, s, side)."""
    grp = gen.group
    gens = [s for s in grp.gens if s >= 1] if gens is None else list(gens)
    bad = []
    for w in range(len(grp)):
        g = gen.coefficient(w)
        for s in gens:
            for side, fam in (("a", "a"), ("b", "b")):
                if pi(s, fam, g, letter) != pi_recurrence_expected(grp, gen, w, s, side):
                    bad.append((grp.windows[w], s, side))
    return bad


def special_node_identity(letter: str, n: int) -> bool:
    """The generating-function form of psi_0 (types B, C) or psi_1h (type D).

    F(x) F(a_1) G_A(s a) - F(x) G_A(a) = alpha' * F(x) G_A(a) u_s, with
    alpha' = a_1, a_1 + a_1 or a_1 + a_2 and s a the action on a."""
    grp = _grp(letter, n)
    Fx = build_Fbar(letter, n).map_coeffs(LocPoly.coerce)
    avals = [LocPoly.var(_var("a", i)) for i in range(1, n)]
    base = product_chain(grp, G_A_factors(n, avals), Fx)
    if letter in "BC":
        s = 0
        pref = product_chain(grp, F_factors(letter, n, LocPoly.var(_var("a", 1))), Fx)
        moved = [bar(_var("a", 1))] + avals[1:]
        den = avals[0] if letter == "B" else oplus(avals[0], avals[0])
    else:
        s = HAT
        pref = product_chain(grp, F_factors(letter, n, LocPoly.var(_var("a", 1))), Fx)
        pref = product_chain(grp, F_factors(letter, n, LocPoly.var(_var("a", 2))), pref)
        moved = [bar(_var("a", 2))]
        if n > 2:
            moved.append(bar(_var("a", 1)))
        moved += avals[len(moved):]
        den = oplus(LocPoly.var(_var("a", 1)), LocPoly.var(_var("a", 2)))
    lhs = product_chain(grp, G_A_factors(n, moved), pref) - base
    rhs = base.mul_gen(s).scale(den)
    return lhs == rhs
