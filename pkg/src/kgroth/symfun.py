"""K-theoretic factorial Schur P- and Q-functions and beta-supersymmetry.

GP/GQ are computed from their symmetrization formula: the rational terms

    w( prod_{i<=r} [x_i|b]^{lam_i} prod_{i<j} (x_i + x_j)/(x_i - x_j) )

(with + and - the formal-group operations) share the Vandermonde product as
a common denominator once the extra factors prod_{r<i<j} (x_i - x_j) are
multiplied in, so the orbit sum is  (1/V) sum_w sgn(w) w(P * V').  The
division by V is done one linear factor at a time, then by (n - r)!.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .config import GuardExceeded, guards
from .polyring import (SLOT_BITS, LocPoly, Poly, VarId, Family, b, bar, divide_linear,
                       exact_divide, oplus, substitute, t, x, decode)


class LengthExceedsN(ValueError):
    pass


class NotInSpan(ArithmeticError):
    pass


def _xslot(i: int) -> int:
    return VarId(Family.X, i).slot


def factorial_power(v: Poly, k: int, params: Sequence, doubled: bool = False) -> Poly:
    """[v|b]^k, or [[v|b]]^k = (v + v)(v + b_1)...(v + b_{k-1}) when doubled."""
    out = Poly.const(1)
    if k == 0:
        return out
    if doubled:
        out = oplus(v, v)
        rest = params[: k - 1]
    else:
        rest = params[:k]
    for p in rest:
        out = out * oplus(v, p)
    return out


def _params(kind: str, k: int, factorial_b: bool) -> list:
    """Parameter sequence used in [x|.]: b, (0, b) for type B, or zeros."""
    if not factorial_b:
        return [Poly()] * k
    if kind == "GB":
        return [Poly()] + [b(i) for i in range(1, k)]
    return [b(i) for i in range(1, k + 1)]


@lru_cache(maxsize=512)
def _symmetrize(lam: tuple, n: int, doubled: bool, kind: str, factorial_b: bool) -> Poly:
    r = len(lam)
    if r > n:
        raise LengthExceedsN(f"partition {lam} longer than {n}")
    if n > guards().max_gp_vars:
        raise GuardExceeded(f"{n} variables exceeds the symmetrization guard")
    params = _params(kind, max(lam, default=0) + 1, factorial_b)
    P = Poly.const(1)
    for i in range(1, r + 1):
        xi = x(i)
        P = P * factorial_power(xi, lam[i - 1], params, doubled)
        for j in range(i + 1, n + 1):
            # (x_i + x_j)/(x_i - x_j) = (x_i + x_j)(1 + beta x_j)/(x_i - x_j) formally
            P = P * oplus(xi, x(j)) * (x(j).mul_beta() + 1)
    for i in range(r + 1, n + 1):
        for j in range(i + 1, n + 1):
            P = P * (x(i) - x(j))
    total = Poly()
    slots = [_xslot(i) for i in range(1, n + 1)]
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        image = P.rename({slots[i]: slots[perm[i]] for i in range(n)})
        total = total + (image if sign > 0 else -image)
    # divide by the Vandermonde prod_{i<j} (x_i - x_j)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = divide_linear(total, _xslot(i), x(j))
    return exact_divide(total, Poly.const(factorial(n - r)))


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, k = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            k += 1
        if k % 2 == 0:
            sign = -sign
    return sign


def _check_strict(lam):
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(lam[i] <= lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"{lam} is not a strict partition")
    return lam


def gp(lam: Sequence[int], n: int, factorial_b: bool = False) -> Poly:
    """GP_lam(x_1..x_n | b), or GP_lam(x_1..x_n) when factorial_b is False."""
    return _symmetrize(_check_strict(lam), n, False, "GP", factorial_b)


def gq(lam: Sequence[int], n: int, factorial_b: bool = False) -> Poly:
    return _symmetrize(_check_strict(lam), n, True, "GQ", factorial_b)


def gb(lam: Sequence[int], n: int) -> Poly:
    """GP_lam(x | 0, b): the factorial function attached to type B."""
    return _symmetrize(_check_strict(lam), n, False, "GB", True)


def gx(letter: str, lam: Sequence[int], n: int) -> Poly:
    """The factorial P/Q-function matching the type: B -> GB, C -> GQ, D -> GP."""
    if letter == "B":
        return gb(lam, n)
    if letter == "C":
        return gq(lam, n, True)
    if letter == "D":
        return gp(lam, n, True)
    raise ValueError(f"no factorial function for type {letter}")


def strict_partitions(max_size: int, max_len: int) -> list[tuple]:
    out = []

    def rec(prefix, remaining, cap):
        out.append(tuple(prefix))
        if len(prefix) == max_len:
            return
        for p in range(min(cap, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p - 1)

    rec([], max_size, max_size)
    return sorted(out, key=lambda l: (sum(l), l))


# -- supersymmetry

def is_symmetric(f: Poly, n: int) -> bool:
    for i in range(1, n):
        if f.rename({_xslot(i): _xslot(i + 1), _xslot(i + 1): _xslot(i)}) != f:
            return False
    return True


def is_beta_supersymmetric(f, n: int) -> bool:
    """Symmetric in x_1..x_n and f(t, t-bar, x_3, ...) = f(0, 0, x_3, ...)."""
    f = f if isinstance(f, Poly) else f.to_poly()
    if n < 2 or not is_symmetric(f, n):
        return False
    lhs = substitute(f, {_xslot(1): LocPoly.coerce(t(1)), _xslot(2): bar(VarId(Family.T, 1))})
    rhs = f.set_zero([_xslot(1), _xslot(2)])
    return lhs == LocPoly.coerce(rhs)


# -- expansion in the GP basis

@dataclass
class GPExpansion:
    n: int
    coeffs: dict  # strict partition -> Poly

    def to_json(self) -> list:
        return [{"partition": list(lam), "coef": c.to_json()}
                for lam, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))]

    def is_positive(self) -> bool:
        return all(c.coefficients_nonnegative() for c in self.coeffs.values())

    def reconstruct(self, basis=gp) -> Poly:
        out = Poly()
        for lam, c in self.coeffs.items():
            out = out + c * basis(lam, self.n)
        return out


def _x_exponents(m: int, n: int) -> tuple:
    ex = [0] * n
    for s, e in decode(m):
        for i in range(1, n + 1):
            if s == _xslot(i):
                ex[i - 1] = e
    return tuple(ex)


def expand_in_gp(f: Poly, n: int, basis=gp, max_steps: int = 10000) -> GPExpansion:
    """Triangular elimination on the lowest x-degree part, lex-leading monomial first."""
    coeffs: dict = {}
    residual = f
    for _ in range(max_steps):
        if residual.is_zero():
            return GPExpansion(n, coeffs)
        by_exp: dict = {}
        for m, c in residual.terms.items():
            by_exp.setdefault(_x_exponents(m, n), {})[m] = c
        low = min(sum(e) for e in by_exp)
        lead = max(e for e in by_exp if sum(e) == low)
        lam = tuple(p for p in lead if p)
        if list(lead) != sorted(lead, reverse=True) or any(
                lam[i] <= lam[i + 1] for i in range(len(lam) - 1)):
            raise NotInSpan(f"leading exponent {lead} is not a strict partition")
        coeff = Poly({m - _x_mono(lead): c for m, c in by_exp[lead].items()})
        coeffs[lam] = coeffs.get(lam, Poly()) + coeff
        if not coeffs[lam]:
            del coeffs[lam]
        residual = residual - coeff * basis(lam, n)
    raise NotInSpan("expansion did not terminate")


def _x_mono(ex: tuple) -> int:
    m = 0
    for i, e in enumerate(ex, start=1):
        m += e << (SLOT_BITS * _xslot(i))
    return m
