"""Adjoint polynomials H^X_{w,v} = psi^{(a)}_{w^-1 v}(G_v) and H^X_{n,w} = H_{w,w0}.

psi^{(a)}_i acts on the G-basis by

    psi_i G_z = G_{z s_i} + beta G_z   if z s_i < z,      0 otherwise,

which follows from the divided-difference recurrences (also for s_0 and
s_1h, where the pointwise action on x is not available).  Relative adjoint
polynomials are therefore computed as G-basis combinations first and
expanded into polynomials at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import GuardExceeded, guards
from .genfun import build_G_A_double, build_G_first
from .hecke import HeckeElt
from .polyring import (Family, LocPoly, Poly, VarId, bar, substitute, unit_power)
from .weyl import GroupElt, WeylGroup, group


@dataclass(frozen=True)
class AdjointPoly:
    letter: str
    n: int
    w: GroupElt
    value: LocPoly

    def to_json(self) -> dict:
        return {"type": self.letter, "n": self.n, "w": list(self.w.window),
                "value": self.value.to_json()}


def _gen(letter: str, n: int) -> HeckeElt:
    if n > guards().max_rank_adjoint:
        raise GuardExceeded(f"adjoint polynomials need rank <= {guards().max_rank_adjoint}")
    return build_G_A_double(n) if letter == "A" else build_G_first(letter, n)


def psi_on_basis(grp: WeylGroup, combo: dict, s: int) -> dict:
    """psi^{(a)}_s applied to sum_z c_z G_z (dict index -> coefficient)."""
    out: dict = {}
    for z, c in combo.items():
        zs = grp.rmul(z, s)
        if grp.lengths[zs] > grp.lengths[z]:
            continue
        for k, v in ((zs, c), (z, c.mul_beta())):
            acc = out.get(k, Poly()) + v
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
    return out


def relative_combination(w: GroupElt, v: GroupElt) -> dict:
    """H_{w,v} as {z: coefficient} in the G-basis."""
    grp = group(v.letter, v.n)
    u = w.inverse() * v
    combo = {grp.idx(v): Poly.const(1)}
    for s in reversed(u.reduced_word()):
        combo = psi_on_basis(grp, combo, s)
    return combo


def adjoint_relative(w: GroupElt, v: GroupElt) -> Poly:
    if not w.bruhat_leq(v):
        raise ValueError(f"{w} is not below {v}")
    gen = _gen(v.letter, v.n)
    out = Poly()
    for z, c in relative_combination(w, v).items():
        out = out + c * gen.coefficient(z)
    return out


def interval_sum(w: GroupElt, n: int) -> Poly:
    """sum_{w <= v <= w0} beta^{l(v) - l(w)} G_v."""
    grp = group(w.letter, n)
    gen = _gen(w.letter, n)
    i = grp.idx(w.embed(n))
    out = Poly()
    for v in range(len(grp)):
        if grp.bruhat_leq(i, v):
            out = out + gen.coefficient(v).mul_beta(grp.lengths[v] - grp.lengths[i])
    return out


def adjoint(w: GroupElt, n: int | None = None) -> AdjointPoly:
    n = w.n if n is None else n
    grp = group(w.letter, n)
    w0 = grp.elt(grp.longest)
    val = adjoint_relative(w.embed(n), w0)
    return AdjointPoly(w.letter, n, w, LocPoly.coerce(val))


def x_exponent(letter: str, n: int) -> int:
    return {"B": 2 * n - 1, "C": 2 * n, "D": 2 * n - 2, "A": 0}[letter]


def adjoint_identity_closed(letter: str, n: int) -> Poly:
    """prod (1+beta a_i)^{n-i} (1+beta b_i)^{n-i} prod (1+beta x_i)^{e}."""
    out = Poly.const(1)
    for i in range(1, n):
        out = out * unit_power(VarId(Family.A, i).slot, n - i) * unit_power(VarId(Family.B, i).slot, n - i)
    if letter != "A":
        e = x_exponent(letter, n)
        for i in range(1, n + 1):
            out = out * unit_power(VarId(Family.X, i).slot, e)
    return out


def bar_all(f, n: int, families=("a", "b", "x")) -> LocPoly:
    sigma = {}
    for fam in families:
        for i in range(1, n + 1):
            sigma[VarId(Family(fam), i)] = bar(VarId(Family(fam), i))
    return substitute(f, sigma)


def adjoint_closed(w: GroupElt, n: int | None = None) -> LocPoly:
    """(-1)^{l(w)} H_{n,e} G_{n,w}(a-bar, b-bar; x-bar)."""
    n = w.n if n is None else n
    g = _gen(w.letter, n).coefficient(w.embed(n).window)
    val = LocPoly.coerce(adjoint_identity_closed(w.letter, n)) * bar_all(g, n)
    return -val if w.length() % 2 else val


def adjoint_genfun_check(letter: str, n: int) -> bool:
    """sum (-1)^{l(w)} H_{n,w} u_w = H_{n,e} G_n(a-bar, b-bar; x-bar), coefficientwise."""
    grp = group(letter, n)
    for i in range(len(grp)):
        w = grp.elt(i)
        lhs = adjoint(w, n).value
        if w.length() % 2:
            lhs = -lhs
        g = _gen(letter, n).coefficient(i)
        rhs = LocPoly.coerce(adjoint_identity_closed(letter, n)) * bar_all(g, n)
        if lhs != rhs:
            return False
    return True


def operator_identity_check(letter: str, n: int) -> bool:
    """pi^{(a)}_i H_n = H_n (-u_i) and pi^{(b)}_i H_n = (-u_i) H_n for i >= 1."""
    from .divdiff import pi
    grp = group(letter, n)
    H = HeckeElt(grp, {})
    for i in range(len(grp)):
        val = adjoint(grp.elt(i), n).value
        H.terms[i] = -val if grp.lengths[i] % 2 else val
    for s in (g for g in grp.gens if g >= 1):
        right, left = -H.mul_gen(s, "right"), -H.mul_gen(s, "left")
        for i in range(len(grp)):
            c = H.coefficient(i)
            if pi(s, "a", c, letter) != LocPoly.coerce(right.coefficient(i)):
                return False
            if pi(s, "b", c, letter) != LocPoly.coerce(left.coefficient(i)):
                return False
    return True


def change_of_parameter_check(w: GroupElt, n: int | None = None) -> bool:
    """G_w(a,b;x) = sum_{u <= w} H_{u,w}(c-bar, b; 0) G_{u^-1 w}(a, c; x)."""
    n = w.n if n is None else n
    w = w.embed(n)
    grp = group(w.letter, n)
    gen = _gen(w.letter, n)
    xs = [VarId(Family.X, i) for i in range(1, n + 1)]
    to_c = {VarId(Family.B, i): VarId(Family.C, i) for i in range(1, n + 1)}
    cbar = {VarId(Family.A, i): bar(VarId(Family.C, i)) for i in range(1, n + 1)}
    total = LocPoly.coerce(0)
    for ui in range(len(grp)):
        u = grp.elt(ui)
        if not u.bruhat_leq(w):
            continue
        h = substitute(adjoint_relative(u, w).set_zero(xs), cbar)
        v = u.inverse() * w
        total = total + h * LocPoly.coerce(gen.coefficient(v.window).rename(to_c))
    return total == LocPoly.coerce(gen.coefficient(w.window))
