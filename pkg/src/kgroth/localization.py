"""Algebraic localization, GKM conditions, Schubert recurrences and LR expansion.

For v in W(X_n) the localization of f(a, b; x) at v substitutes

    a_i -> bar(b_k) if v(i) = k > 0,   b_k       if v(i) = -k
    x_i -> 0        if v(i) > 0,       bar(b_k)  if v(i) = -k

and W acts on the b-alphabet by b_k -> b_{v(k)} with b_{-k} = bar(b_k).
Values live in Z[beta][b, bar b], i.e. LocPoly with (1 + beta b_k) denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .config import GuardExceeded, guards
from .divdiff import act, alpha, psi_word
from .genfun import build_G_A_double, build_G_first
from .hecke import HeckeElt
from .polyring import (Family, LocPoly, NotDivisible, PolyError, VarId, bar, substitute)
from .weyl import GroupElt, WeylGroup, group


class NonTriangular(ArithmeticError):
    pass


class ResidualNonzero(ArithmeticError):
    pass


def _b(k: int) -> LocPoly:
    """b_k with the convention b_{-k} = bar(b_k)."""
    if k > 0:
        return LocPoly.var(VarId(Family.B, k))
    return bar(VarId(Family.B, -k))


def phi_map(window: tuple, n_a: int | None = None, n_x: int | None = None) -> dict:
    """The substitution realizing localization at the element with this window."""
    sigma = {}
    n = len(window)
    for i in range(1, (n if n_a is None else n_a) + 1):
        sigma[VarId(Family.A, i).slot] = _b(-window[i - 1])
    for i in range(1, (n if n_x is None else n_x) + 1):
        vi = window[i - 1]
        sigma[VarId(Family.X, i).slot] = _b(vi) if vi < 0 else LocPoly.coerce(0)
    return sigma


def phi(f, v: GroupElt) -> LocPoly:
    """Localization of f at v; a_i, x_i beyond the rank are left untouched."""
    return substitute(f, phi_map(v.window))


def b_action(window: tuple, f) -> LocPoly:
    """v^{(b)} f : b_k -> b_{v(k)}."""
    return substitute(f, {VarId(Family.B, k).slot: _b(window[k - 1]) for k in range(1, len(window) + 1)})


def generating_function(letter: str, n: int) -> HeckeElt:
    return build_G_A_double(n) if letter == "A" else build_G_first(letter, n)


@dataclass
class LocalizedClass:
    """A function W(X_n) -> Z[beta][b, bar b], indexed by group element index."""
    group: WeylGroup
    values: list

    def __call__(self, v) -> LocPoly:
        i = v if isinstance(v, int) else self.group.idx(v)
        return self.values[i]

    def to_json(self) -> list:
        return [{"v": list(self.group.windows[i]), "value": val.to_json()}
                for i, val in enumerate(self.values)]


def phi_table_of(f, letter: str, n: int) -> LocalizedClass:
    grp = group(letter, n)
    return LocalizedClass(grp, [substitute(f, phi_map(w)) for w in grp.windows])


@lru_cache(maxsize=16)
def schubert_tables(letter: str, n: int) -> tuple:
    """Localizations of every G_w at every v: tables[w][v]."""
    guards().check_rank(letter, n, guards().max_rank_lr if letter != "A" else None)
    gen = generating_function(letter, n)
    grp = gen.group
    maps = [phi_map(w) for w in grp.windows]
    out = []
    for w in range(len(grp)):
        f = gen.coefficient(w)
        out.append(LocalizedClass(grp, [substitute(f, m) for m in maps]))
    return tuple(out)


def phi_table(w: GroupElt) -> LocalizedClass:
    return schubert_tables(w.letter, w.n)[w.idx]


# -- roots and GKM

@lru_cache(maxsize=16)
def positive_roots(letter: str, n: int) -> tuple:
    """(reflection index, alpha(b)) for each reflection s_alpha = w s_i w^-1."""
    grp = group(letter, n)
    seen = {}
    for w in range(len(grp)):
        for s in grp.gens:
            refl = grp.mul(grp.mul(w, grp.from_word([s])), grp.inv[w])
            if refl in seen:
                continue
            al = b_action(grp.windows[w], alpha(s, "b", letter))
            seen[refl] = al
    return tuple(sorted(seen.items()))


def gkm_check(c: LocalizedClass, letter: str | None = None) -> bool:
    grp = c.group
    letter = letter or grp.letter
    for refl, al in positive_roots(letter, grp.n):
        for v in range(len(grp)):
            sv = grp.mul(refl, v)
            if sv < v:
                continue
            d = c(v) - c(sv)
            if d.is_zero():
                continue
            try:
                d.divide(al)
            except (NotDivisible, PolyError):
                return False
    return True


def function_pi(c: LocalizedClass, s: int, letter: str | None = None) -> LocalizedClass:
    """(pi_i f)(v) = (f(v) - (1 + beta alpha_i) s_i f(s_i v)) / alpha_i."""
    grp = c.group
    letter = letter or grp.letter
    al = alpha(s, "b", letter)
    unit = al.mul_beta() + 1
    vals = []
    for v in range(len(grp)):
        sv = grp.lmul(v, s)
        vals.append((c(v) - unit * act(s, "b", c(sv))).divide(al))
    return LocalizedClass(grp, vals)


def recurrence_check(letter: str, n: int, w: int | None = None) -> bool:
    """Initial condition and left recurrence for the localized Schubert classes."""
    tables = schubert_tables(letter, n)
    grp = tables[0].group
    targets = range(len(grp)) if w is None else [w]
    for wi in targets:
        psi_w = tables[wi]
        if psi_w(0) != LocPoly.coerce(1 if wi == 0 else 0):
            return False
        for v in range(len(grp)):
            for s in grp.gens:
                sv = grp.lmul(v, s)
                if grp.lengths[sv] > grp.lengths[v]:
                    continue
                al = alpha(s, "b", letter)
                moved = act(s, "b", psi_w(sv))
                swi = grp.lmul(wi, s)
                if grp.lengths[swi] > grp.lengths[wi]:
                    expected = moved
                else:
                    expected = (al.mul_beta() + 1) * moved + al * act(s, "b", tables[swi](sv))
                if psi_w(v) != expected:
                    return False
    return True


def localize_words(w: GroupElt, v: GroupElt, word: Iterable[int] | None = None) -> LocPoly:
    """Word-sum localization along a reduced word of v.

    Dynamic programming over the word: the state is the Demazure product of
    the chosen letters; choosing letter k multiplies the weight by
    (s_{i_1}...s_{i_{k-1}})^{(b)} alpha_{i_k}(b), plus a beta for each
    letter that does not raise the Demazure product."""
    grp = group(w.letter, w.n)
    word = tuple(v.reduced_word() if word is None else word)
    states = {0: LocPoly.coerce(1)}
    prefix = 0
    for s in word:
        root = b_action(grp.windows[prefix], alpha(s, "b", w.letter))
        new: dict = {}
        for z, c in states.items():
            new[z] = new.get(z, LocPoly.coerce(0)) + c
            zs = grp.demazure_gen(z, s)
            term = c * root
            if zs == z:
                term = term.mul_beta()
            new[zs] = new.get(zs, LocPoly.coerce(0)) + term
        states = {z: c for z, c in new.items() if not c.is_zero()}
        prefix = grp.rmul(prefix, s)
    return states.get(grp.idx(w), LocPoly.coerce(0))


def vanishing_holds(letter: str, n: int) -> bool:
    tables = schubert_tables(letter, n)
    grp = tables[0].group
    for w in range(len(grp)):
        for v in range(len(grp)):
            val = tables[w](v)
            if grp.bruhat_leq(w, v):
                if v == w and val.is_zero():
                    return False
            elif not val.is_zero():
                return False
    return True


# -- Littlewood-Richardson coefficients

def _solve(values: LocalizedClass, letter: str, n: int) -> dict:
    tables = schubert_tables(letter, n)
    grp = tables[0].group
    coeffs: dict = {}
    for z in range(len(grp)):          # indices are sorted by (length, window)
        acc = values(z)
        for wi, c in coeffs.items():
            acc = acc - c * tables[wi](z)
        if acc.is_zero():
            continue
        diag = tables[z](z)
        if diag.is_zero():
            raise NonTriangular(f"localization of G_{grp.windows[z]} vanishes at itself")
        try:
            coeffs[z] = acc.divide(diag)
        except (NotDivisible, PolyError) as exc:
            raise ResidualNonzero(str(exc)) from exc
    return coeffs


def lr_expand(u: GroupElt, v: GroupElt, n: int | None = None) -> dict:
    """G_u G_v = sum_w c_w G_w, with c_w in Z[beta][b, bar b]."""
    letter = u.letter
    n = max(u.n, v.n) if n is None else n
    limit = guards().max_rank_lr
    while True:
        if n > limit:
            raise GuardExceeded(f"LR expansion needs rank > {limit}")
        gen = generating_function(letter, n)
        grp = gen.group
        pu, pv = gen.coefficient(u.embed(n).window), gen.coefficient(v.embed(n).window)
        product = pu * pv
        tables = schubert_tables(letter, n)
        values = LocalizedClass(grp, [tables[grp.idx(u.embed(n))](z) * tables[grp.idx(v.embed(n))](z)
                                      for z in range(len(grp))])
        coeffs = _solve(values, letter, n)
        residual = LocPoly.coerce(product)
        for wi, c in coeffs.items():
            residual = residual - c * LocPoly.coerce(gen.coefficient(wi))
        if residual.is_zero():
            return {grp.elt(wi): c for wi, c in coeffs.items()}
        n += 1


def interpolate(F, letter: str, n: int) -> dict:
    """Coefficients psi^{(a)}_v(F)|_e for v in W(X_n)."""
    grp = group(letter, n)
    e = grp.windows[0]
    out = {}
    for v in range(len(grp)):
        val = psi_word(grp.word(v), "a", F, letter)
        val = substitute(val, phi_map(e))
        if not val.is_zero():
            out[grp.elt(v)] = val
    return out


def triangular_coefficients(F, letter: str, n: int) -> dict:
    """Expansion of F in the G_w read off from its localizations."""
    vals = phi_table_of(F, letter, n)
    grp = vals.group
    return {grp.elt(i): c for i, c in _solve(vals, letter, n).items()}
