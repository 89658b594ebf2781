"""The IdCoxeter algebra: u_i^2 = beta*u_i plus braid relations.

An element is a finite sum  sum_w c_w u_w  over an enumerated Weyl group,
stored as a dict from element index to coefficient.  Coefficients may be
``Poly``, ``LocPoly``, ``TruncSeries`` or plain numbers; all that is needed
is ring arithmetic and ``mul_beta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import BETA, LocPoly, Poly, TruncSeries, bar, oplus
from .weyl import GroupElt, WeylGroup, gen_name, group


def beta_times(c):
    if isinstance(c, (Poly, LocPoly, TruncSeries)):
        return c.mul_beta()
    return BETA * c


class HeckeElt:
    __slots__ = ("group", "terms")

    def __init__(self, grp: WeylGroup, terms: dict | None = None):
        self.group = grp
        self.terms = terms if terms is not None else {}

    @staticmethod
    def one(grp: WeylGroup, c=1) -> "HeckeElt":
        return HeckeElt(grp, {0: Poly.coerce(c) if isinstance(c, int) else c})

    @staticmethod
    def basis(grp: WeylGroup, w, c=1) -> "HeckeElt":
        i = w if isinstance(w, int) else grp.idx(w)
        return HeckeElt(grp, {i: Poly.coerce(c) if isinstance(c, int) else c})

    def copy(self) -> "HeckeElt":
        return HeckeElt(self.group, dict(self.terms))

    # -- arithmetic
    def _check(self, other: "HeckeElt"):
        if other.group is not self.group:
            raise ValueError("elements of different IdCoxeter algebras")

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return HeckeElt(self.group, out)

    def __neg__(self):
        return HeckeElt(self.group, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, c) -> "HeckeElt":
        out = {}
        for k, v in self.terms.items():
            p = v * c
            if p:
                out[k] = p
        return HeckeElt(self.group, out)

    def mul_gen(self, s: int, side: str = "right") -> "HeckeElt":
        """Multiply by u_s on the given side."""
        g = self.group
        table = g.right if side == "right" else g.left
        pos = g.gpos[s]
        lengths = g.lengths
        out: dict = {}
        for i, c in self.terms.items():
            j = table[i][pos]
            if lengths[j] > lengths[i]:
                _accumulate(out, j, c)
            else:
                _accumulate(out, i, beta_times(c))
        return HeckeElt(g, out)

    def mul_h(self, s: int, v, side: str = "right") -> "HeckeElt":
        """Multiply by h_s(v) = 1 + v*u_s."""
        if not v:
            return self
        return self + self.mul_gen(s, side).scale(v)

    def mul_word(self, word: Iterable[int]) -> "HeckeElt":
        out = self
        for s in word:
            out = out.mul_gen(s)
        return out

    def __mul__(self, other):
        if not isinstance(other, HeckeElt):
            return self.scale(other)
        self._check(other)
        out = HeckeElt(self.group)
        for j, c in other.terms.items():
            out = out + self.mul_word(self.group.word(j)).scale(c)
        return out

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        if other.group is not self.group:
            return False
        keys = set(self.terms) | set(other.terms)
        for k in keys:
            a, b = self.terms.get(k), other.terms.get(k)
            if a is None or b is None:
                if (a if a is not None else b):
                    return False
            elif not a == b:
                return False
        return True

    def is_zero(self) -> bool:
        return not any(self.terms.values())

    # -- access
    def coefficient(self, w):
        i = w if isinstance(w, int) else self.group.idx(w)
        return self.terms.get(i, Poly())

    def support(self) -> list[GroupElt]:
        return [self.group.elt(i) for i in sorted(self.terms)]

    def map_coeffs(self, f) -> "HeckeElt":
        out = {}
        for k, c in self.terms.items():
            v = f(c)
            if v:
                out[k] = v
        return HeckeElt(self.group, out)

    def augment(self):
        """Image under u_i -> beta (an algebra homomorphism)."""
        total = Poly()
        for i, c in self.terms.items():
            k = self.group.lengths[i]
            total = c.mul_beta(k) + total if k else c + total
        return total

    def to_json(self) -> list:
        g = self.group
        items = sorted(self.terms.items(), key=lambda kv: (g.lengths[kv[0]], g.windows[kv[0]]))
        return [{"window": list(g.windows[i]), "coefficient": c.to_json()} for i, c in items]

    def __repr__(self):
        g = self.group
        parts = [f"({c})*u[{','.join(map(str, g.windows[i]))}]" for i, c in sorted(self.terms.items())]
        return " + ".join(parts) if parts else "0"


def _accumulate(out: dict, k, c):
    if k in out:
        v = out[k] + c
        if v:
            out[k] = v
        else:
            del out[k]
    elif c:
        out[k] = c


@dataclass(frozen=True)
class HFactor:
    gen: int
    arg: object

    def __str__(self):
        return f"h_{gen_name(self.gen)}({self.arg})"


def h(grp: WeylGroup, s: int, v) -> HeckeElt:
    """1 + v*u_s."""
    return HeckeElt.one(grp).mul_h(s, v)


def product_chain(grp: WeylGroup, factors: Sequence[HFactor], start: HeckeElt | None = None) -> HeckeElt:
    out = start if start is not None else HeckeElt.one(grp)
    for f in factors:
        out = out.mul_h(f.gen, f.arg)
    return out


def interval_factors(i: int, j: int, v) -> list[HFactor]:
    """[i, j]_v = h_i(v) h_{i+1}(v) ... h_j(v), read in either direction."""
    step = 1 if j >= i else -1
    return [HFactor(k, v) for k in range(i, j + step, step)]


# -- Yang-Baxter identities

def yang_baxter_sides(i: int, j: int, m: int, x, y) -> tuple[list[HFactor], list[HFactor]]:
    """The two factor chains of the Yang-Baxter relation for a pair with m_ij = m."""
    if m == 2:
        return [HFactor(i, x), HFactor(j, y)], [HFactor(j, y), HFactor(i, x)]
    xy = oplus(x, y)
    if m == 3:
        return ([HFactor(i, x), HFactor(j, xy), HFactor(i, y)],
                [HFactor(j, y), HFactor(i, xy), HFactor(j, x)])
    if m == 4:
        xyy = oplus(xy, y)
        return ([HFactor(i, x), HFactor(j, xy), HFactor(i, xyy), HFactor(j, y)],
                [HFactor(j, y), HFactor(i, xyy), HFactor(j, xy), HFactor(i, x)])
    raise ValueError(f"unsupported braid order {m}")


def braid_order(grp: WeylGroup, i: int, j: int) -> int:
    """Order of s_i s_j."""
    k = grp.mul(grp.from_word([i]), grp.from_word([j]))
    m, cur = 1, k
    while cur != 0:
        cur = grp.mul(cur, k)
        m += 1
    return m


def braid_relation_holds(grp: WeylGroup, i: int, j: int) -> bool:
    m = braid_order(grp, i, j)
    one = HeckeElt.one(grp)
    lhs = one.mul_word([i, j] * (m // 2) + [i] * (m % 2))
    rhs = one.mul_word([j, i] * (m // 2) + [j] * (m % 2))
    return lhs == rhs


def inverse_chain(factors: Sequence[HFactor]) -> list[HFactor]:
    """Factor chain of the inverse: reversed order, barred arguments."""
    return [HFactor(f.gen, _bar_value(f.arg)) for f in reversed(factors)]


def _bar_value(v):
    return bar(v) if not isinstance(v, (int, Fraction)) else bar(Poly.coerce(v))


def hecke_group(letter: str, n: int) -> WeylGroup:
    return group(letter, n)
