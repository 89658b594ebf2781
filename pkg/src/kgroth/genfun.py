"""Generating functions in the IdCoxeter algebra and the polynomials they define.

All products are built as chains of h-factors and expanded once; named
polynomial families are then read off as coefficients of u_w.

    A_i(x)          h_{n-1}(x) ... h_i(x)
    G_A(a)          A_1(a_1) A_2(a_2) ... A_{n-1}(a_{n-1})
    G_A(b-bar)^-1   [n-1,n-1]_{b_{n-1}} ... [1,n-1]_{b_1}     (no bars needed)
    F^X(x)          palindromic products around h_0 / h_0^2 / h_1 h_1h
    G^X_n(a,b;x)    G_A(b-bar)^-1  F^X(x_1) ... F^X(x_n)  G_A(a)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import guards
from .hecke import HeckeElt, HFactor, interval_factors, product_chain
from .polyring import (Poly, TruncSeries, a, b, bar, binom_half, oplus, x)
from .weyl import HAT, GroupElt, WeylGroup, group


class BadIndex(ValueError):
    pass


@dataclass(frozen=True)
class GrothFamily:
    """Names one generating function: type letter, rank and kind."""
    letter: str
    n: int
    kind: str = "first"      # first | typeA | stanley | second
    nx: int | None = None    # number of x variables (default n)
    trunc: int = 4           # only for kind == "second"

    def build(self) -> HeckeElt:
        if self.kind == "first":
            return build_G_first(self.letter, self.n, self.nx)
        if self.kind == "typeA":
            return build_G_A_double(self.n)
        if self.kind == "stanley":
            return build_Fbar(self.letter, self.n, self.nx)
        if self.kind == "second":
            return build_G_second(self.letter, self.n, self.trunc)
        raise ValueError(f"unknown family kind {self.kind!r}")

    def extract(self, w: GroupElt):
        return self.build().coefficient(w.window)


# -- factor chains

def A_factors(i: int, n: int, v) -> list[HFactor]:
    if not 1 <= i <= n - 1:
        raise BadIndex(f"A_{i} needs 1 <= i <= {n - 1}")
    return interval_factors(n - 1, i, v)


def F_factors(letter: str, n: int, v) -> list[HFactor]:
    if letter == "B":
        middle = [HFactor(0, v)]
        outer = interval_factors(n - 1, 1, v) if n > 1 else []
    elif letter == "C":
        middle = [HFactor(0, v), HFactor(0, v)]
        outer = interval_factors(n - 1, 1, v) if n > 1 else []
    elif letter == "D":
        if n < 2:
            raise BadIndex("type D needs rank >= 2")
        middle = [HFactor(1, v), HFactor(HAT, v)]
        outer = interval_factors(n - 1, 2, v) if n > 2 else []
    else:
        raise BadIndex(f"no F factor for type {letter}")
    return outer + middle + list(reversed(outer))


def G_A_factors(n: int, vals: list) -> list[HFactor]:
    """G_A(v_1, ..., v_{n-1})."""
    out = []
    for i in range(1, n):
        out += A_factors(i, n, vals[i - 1])
    return out


def G_A_bar_inverse_factors(n: int, bvals: list) -> list[HFactor]:
    """G_A(b-bar_1, ..., b-bar_{n-1})^{-1}, written with the b_k themselves."""
    out = []
    for k in range(n - 1, 0, -1):
        out += interval_factors(k, n - 1, bvals[k - 1])
    return out


def row_factors(n: int, avals: list, bvals: list) -> list[HFactor]:
    """Row k: h_{n-1}(a_k + b_{n-k}) ... h_k(a_k + b_1) with + the formal sum."""
    out = []
    for k in range(1, n):
        for j in range(n - 1, k - 1, -1):
            out.append(HFactor(j, oplus(avals[k - 1], bvals[j - k])))
    return out


def count_h_factors(letter: str, n: int, nx: int | None = None) -> int:
    """Number of h-factors in the rank-n first-kind product (a degree bound)."""
    nx = n if nx is None else nx
    if letter == "A":
        return n * (n - 1) // 2
    per = len(F_factors(letter, n, 0))
    return n * (n - 1) + nx * per


# -- builders

def _grp(letter: str, n: int) -> WeylGroup:
    guards().check_rank(letter, n)
    return group(letter, n)


def build_A(i: int, n: int, v, letter: str = "A") -> HeckeElt:
    grp = _grp(letter, n)
    return product_chain(grp, A_factors(i, n, v))


def build_F(letter: str, n: int, v) -> HeckeElt:
    return product_chain(_grp(letter, n), F_factors(letter, n, v))


@lru_cache(maxsize=64)
def build_Fbar(letter: str, n: int, nx: int | None = None) -> HeckeElt:
    """F^X(x_1) ... F^X(x_nx)."""
    nx = n if nx is None else nx
    grp = _grp(letter, n)
    out = HeckeElt.one(grp)
    for i in range(1, nx + 1):
        out = product_chain(grp, F_factors(letter, n, x(i)), out)
    return out


@lru_cache(maxsize=64)
def build_G_A(n: int, family: str = "a", letter: str = "A") -> HeckeElt:
    """Single Grothendieck generating function G_A in one alphabet."""
    v = {"a": a, "b": b, "x": x}[family]
    return product_chain(_grp(letter, n), G_A_factors(n, [v(i) for i in range(1, n)]))


@lru_cache(maxsize=64)
def build_G_A_double(n: int, letter: str = "A") -> HeckeElt:
    grp = _grp(letter, n)
    return product_chain(grp, row_factors(n, [a(i) for i in range(1, n)],
                                             [b(i) for i in range(1, n)]))


def build_G_A_double_direct(n: int) -> HeckeElt:
    """G_A(b-bar)^{-1} G_A(a) from the definition (independent of the row form)."""
    grp = _grp("A", n)
    chain = G_A_bar_inverse_factors(n, [b(i) for i in range(1, n)])
    chain += G_A_factors(n, [a(i) for i in range(1, n)])
    return product_chain(grp, chain)


@lru_cache(maxsize=64)
def build_G_prefix(letter: str, n: int) -> HeckeElt:
    grp = _grp(letter, n)
    return product_chain(grp, G_A_bar_inverse_factors(n, [b(i) for i in range(1, n)]))


@lru_cache(maxsize=64)
def build_G_first(letter: str, n: int, nx: int | None = None) -> HeckeElt:
    """G^X_n(a,b;x) with x_1..x_nx (nx defaults to n)."""
    if letter not in "BCD":
        raise BadIndex("first-kind functions exist for types B, C, D")
    nx = n if nx is None else nx
    grp = _grp(letter, n)
    out = build_G_prefix(letter, n)
    for i in range(1, nx + 1):
        out = product_chain(grp, F_factors(letter, n, x(i)), out)
    return product_chain(grp, G_A_factors(n, [a(i) for i in range(1, n)]), out)


def extract(gen: HeckeElt, w) -> Poly:
    if isinstance(w, GroupElt):
        return gen.coefficient(w.window)
    return gen.coefficient(w)


def groth(letter: str, n: int, w: GroupElt, nx: int | None = None) -> Poly:
    """G^X_{n,w}(a,b;x); type A gives the double Grothendieck G^{A_{n-1}}_w(a,b)."""
    if letter == "A":
        return build_G_A_double(n).coefficient(w.window)
    return build_G_first(letter, n, nx).coefficient(w.window)


def stanley(letter: str, n: int, w: GroupElt, nx: int | None = None) -> Poly:
    return build_Fbar(letter, n, nx).coefficient(w.window)


# -- second kind (truncated series)

def _series_elt(grp: WeylGroup, elt: HeckeElt, trunc: int) -> HeckeElt:
    return elt.map_coeffs(lambda c: TruncSeries.from_value(c, trunc))


def sqrt_hecke(elt: HeckeElt, trunc: int) -> HeckeElt:
    """sqrt(1 + T) = sum binom(1/2, k) T^k, with T the non-identity part.

    T has coefficients of variable degree >= 1, so T^k vanishes beyond
    the truncation degree."""
    grp = elt.group
    one = HeckeElt.one(grp, TruncSeries(Poly.const(1), trunc))
    T = elt - one
    out, power = one, one
    for k in range(1, trunc + 1):
        power = power * T
        if power.is_zero():
            break
        out = out + power.scale(binom_half(k))
    return out


def build_sqrt_F(letter: str, n: int, values: list, trunc: int) -> HeckeElt:
    """sqrt(F(v_1)) ... sqrt(F(v_k)) with each v a LocPoly expanded as a series."""
    grp = _grp(letter, n)
    out = HeckeElt.one(grp, TruncSeries(Poly.const(1), trunc))
    for v in values:
        Fv = product_chain(grp, F_factors(letter, n, TruncSeries.from_value(v, trunc)),
                           HeckeElt.one(grp, TruncSeries(Poly.const(1), trunc)))
        out = out * sqrt_hecke(Fv, trunc)
    return out


@lru_cache(maxsize=32)
def build_G_second(letter: str, n: int, trunc: int = 4) -> HeckeElt:
    """G_A(b-bar)^{-1} sqrt(F(b-bar)) sqrt(F(a-bar)) G_A(a), coefficients truncated."""
    grp = _grp(letter, n)
    one = TruncSeries(Poly.const(1), trunc)
    prefix = _series_elt(grp, build_G_prefix(letter, n), trunc)
    abars = [bar(f"a{i}") for i in range(1, n + 1)]
    bbars = [bar(f"b{i}") for i in range(1, n + 1)]
    mid = build_sqrt_F(letter, n, bbars, trunc) * build_sqrt_F(letter, n, abars, trunc)
    tail = product_chain(grp, [HFactor(f.gen, TruncSeries(f.arg, trunc))
                               for f in G_A_factors(n, [a(i) for i in range(1, n)])],
                         HeckeElt.one(grp, one))
    return prefix * mid * tail


# -- Demazure-triple expansion

def triple_expand(letter: str, n: int, w: GroupElt, nx: int | None = None) -> Poly:
    """sum over v1 * u * v2 = w (Demazure) of beta^excess G^A_{v1^-1}(b) F_u(x) G^A_{v2}(a).

    At finite rank the sum is over v1, v2 in S_n and u in W(X_n); the beta
    power records the lengths lost in the Demazure products."""
    grp = _grp(letter, n)
    target = grp.idx(w)
    GA_a = build_G_A(n, "a", letter)
    GA_b = build_G_A(n, "b", letter)
    Fb = build_Fbar(letter, n, nx)
    L = grp.lengths
    total = Poly()
    for v1, p in GA_b.terms.items():
        v1 = grp.inv[v1]
        for u, f in Fb.terms.items():
            vu = grp.demazure(v1, u)
            if not grp.bruhat_leq(vu, target):
                continue
            for v2, g in GA_a.terms.items():
                z = grp.demazure(vu, v2)
                if z != target:
                    continue
                k = L[v1] + L[u] + L[v2] - L[z]
                term = p * f * g
                total = total + (term.mul_beta(k) if k else term)
    return total


def grading_ok(p: Poly, length: int) -> bool:
    return p.is_zero() or p.degree() == length
