"""Exact arithmetic in Z[beta][a, b, x, ...] and its localization at (1 + beta*v).

Monomials are packed into a single Python int: every variable owns a 16-bit
slot, beta owns slot 0.  Multiplying monomials is integer addition, and the
integer order of packed monomials is a lex monomial order (highest slot most
significant), which is what exact division uses.

Three value types live here:

* ``Poly``      sparse polynomial, coefficients int (or Fraction for series work)
* ``LocPoly``   ``Poly / prod (1 + beta*v)^e``, kept reduced
* ``TruncSeries`` polynomial with rational coefficients, truncated in total
  variable degree (beta is not counted)
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Union

SLOT_BITS = 16
_MASK = (1 << SLOT_BITS) - 1
MAX_INDEX = 24


class Family(str, Enum):
    """Variable alphabets, in monomial-order priority after beta."""
    A = "a"
    B = "b"
    X = "x"
    C = "c"
    T = "t"


_FAMILY_POS = {f: i for i, f in enumerate(Family)}
_N_SLOTS = 1 + len(Family) * MAX_INDEX
# top bit of every slot; used to detect borrows in monomial division
_GUARD = sum(1 << (SLOT_BITS * k + SLOT_BITS - 1) for k in range(_N_SLOTS))
BETA_UNIT = 1


class PolyError(ArithmeticError):
    pass


class NotDivisible(PolyError):
    pass


class DenominatorNotSupported(PolyError):
    pass


class BadConstantTerm(PolyError):
    pass


@dataclass(frozen=True, order=True)
class VarId:
    family: Family
    index: int

    def __post_init__(self):
        if not 1 <= self.index <= MAX_INDEX:
            raise ValueError(f"variable index out of range: {self.index}")
        object.__setattr__(self, "family", Family(self.family))

    @property
    def slot(self) -> int:
        return 1 + _FAMILY_POS[self.family] * MAX_INDEX + self.index - 1

    @property
    def name(self) -> str:
        return f"{self.family.value}{self.index}"

    @staticmethod
    def from_slot(slot: int) -> "VarId":
        fam, idx = divmod(slot - 1, MAX_INDEX)
        return VarId(list(Family)[fam], idx + 1)

    @staticmethod
    def parse(name: str) -> "VarId":
        return VarId(Family(name[0]), int(name[1:]))

    def __str__(self):
        return self.name


def _unit(slot: int) -> int:
    return 1 << (SLOT_BITS * slot)


def decode(m: int) -> list[tuple[int, int]]:
    """Packed monomial -> [(slot, exponent)] with nonzero exponents, slot ascending."""
    out = []
    slot = 0
    while m:
        e = m & _MASK
        if e:
            out.append((slot, e))
        m >>= SLOT_BITS
        slot += 1
    return out


def encode(pairs: Iterable[tuple[int, int]]) -> int:
    m = 0
    for slot, e in pairs:
        if e < 0 or e >= 1 << (SLOT_BITS - 1):
            raise OverflowError("exponent out of range")
        m += e << (SLOT_BITS * slot)
    return m


def exponent(m: int, slot: int) -> int:
    return (m >> (SLOT_BITS * slot)) & _MASK


@lru_cache(maxsize=1 << 16)
def var_degree(m: int) -> int:
    """Total degree of a monomial ignoring beta."""
    m >>= SLOT_BITS
    d = 0
    while m:
        d += m & _MASK
        m >>= SLOT_BITS
    return d


def graded_degree(m: int) -> int:
    """Degree with deg(beta) = -1 and every other variable of degree 1."""
    return var_degree(m) - (m & _MASK)


def _mono_divides(num: int, den: int) -> int | None:
    d = (num | _GUARD) - den
    if d < 0 or (d & _GUARD) != _GUARD:
        return None
    return d - _GUARD + (num & _GUARD)


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _slot_of(v) -> int:
    if isinstance(v, VarId):
        return v.slot
    if isinstance(v, str):
        return VarId.parse(v).slot
    return int(v)


class Poly:
    """Sparse polynomial; immutable by convention."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict | None = None):
        self.terms = terms if terms is not None else {}
        self._hash = None

    # -- construction
    @staticmethod
    def clean(terms: dict) -> "Poly":
        return Poly({m: _normalize_coeff(c) for m, c in terms.items() if c != 0})

    @staticmethod
    def const(c) -> "Poly":
        return Poly({0: _normalize_coeff(c)} if c != 0 else {})

    @staticmethod
    def var(v: Union[VarId, str]) -> "Poly":
        return Poly({_unit(_slot_of(v)): 1})

    @staticmethod
    def beta(k: int = 1) -> "Poly":
        return Poly({k * BETA_UNIT: 1})

    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    # -- inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == 0 for m in self.terms)

    def constant_term(self):
        return self.terms.get(0, 0)

    def __len__(self):
        return len(self.terms)

    def variables(self) -> set[int]:
        """Slots (beta excluded) appearing in the polynomial."""
        acc = 0
        for m in self.terms:
            acc |= m
        out = set()
        slot = 0
        while acc:
            if acc & _MASK:
                out.add(slot)
            acc >>= SLOT_BITS
            slot += 1
        out.discard(0)
        return out

    def max_exponent(self, slot: int) -> int:
        return max((exponent(m, slot) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        """Graded-homogeneous with deg(beta) = -1."""
        return len({graded_degree(m) for m in self.terms}) <= 1

    def degree(self) -> int | None:
        degs = {graded_degree(m) for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def coefficients_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    # -- arithmetic
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if len(self.terms) < len(other.terms):
            small, out = self.terms, dict(other.terms)
        else:
            small, out = other.terms, dict(self.terms)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _normalize_coeff(s)
            else:
                out.pop(m, None)
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly({m: _normalize_coeff(c * other) for m, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (m1, c1), = a.items()
            return Poly({m1 + m2: c1 * c2 for m2, c2 in b.items()})
        out: dict = {}
        get = out.get
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = m1 + m2
                out[m] = get(m, 0) + c1 * c2
        return Poly.clean(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, m: int, c=1) -> "Poly":
        return Poly({m + k: v * c for k, v in self.terms.items()})

    def mul_beta(self, k: int = 1) -> "Poly":
        return self.mul_monomial(k * BETA_UNIT)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if isinstance(other, LocPoly):
            return other == self
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- substitutions
    def rename(self, mapping: Mapping) -> "Poly":
        """Simultaneous renaming of variables (slot -> slot)."""
        mp = {_slot_of(k): _slot_of(v) for k, v in mapping.items()}
        if not mp:
            return self
        out: dict = {}
        for m, c in self.terms.items():
            pairs = [(mp.get(s, s), e) for s, e in decode(m)]
            k = encode(pairs)
            out[k] = out.get(k, 0) + c
        return Poly.clean(out)

    def set_zero(self, slots: Iterable) -> "Poly":
        """Specialize the given variables to 0."""
        mask = 0
        for s in slots:
            mask |= _MASK << (SLOT_BITS * _slot_of(s))
        if not mask:
            return self
        return Poly({m: c for m, c in self.terms.items() if not m & mask})

    def subs(self, sigma: Mapping) -> "Poly":
        """Simultaneous substitution by polynomials (or ints)."""
        images = {_slot_of(k): Poly.coerce(v) for k, v in sigma.items()}
        zero = [s for s, p in images.items() if p.is_zero()]
        p = self.set_zero(zero)
        images = {s: q for s, q in images.items() if not q.is_zero()}
        if not images:
            return p
        groups: dict = {}
        for m, c in p.terms.items():
            key = []
            rest = m
            for s in images:
                e = exponent(m, s)
                if e:
                    key.append((s, e))
                    rest -= e << (SLOT_BITS * s)
            grp = groups.setdefault(tuple(key), {})
            grp[rest] = c
        cache: dict = {}

        def power(s, e):
            if (s, e) not in cache:
                cache[(s, e)] = images[s] ** e
            return cache[(s, e)]

        out = Poly()
        for key, rest_terms in groups.items():
            img = Poly.const(1)
            for s, e in key:
                img = img * power(s, e)
            out = out + Poly(rest_terms) * img
        return out

    def coefficient_map(self, slots: Iterable) -> dict[int, "Poly"]:
        """Split by the exponents of ``slots``: packed key -> coefficient Poly."""
        mask = 0
        for s in slots:
            mask |= _MASK << (SLOT_BITS * _slot_of(s))
        out: dict = {}
        for m, c in self.terms.items():
            out.setdefault(m & mask, {})[m & ~mask] = c
        return {k: Poly(v) for k, v in out.items()}

    # -- printing
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: monomial_sort_key(mc[0]))

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Poly({to_text(self)})"

    def to_json(self) -> list:
        return [_term_json(m, c) for m, c in self.sorted_terms()]

    @staticmethod
    def from_json(data: list) -> "Poly":
        out = {}
        for t in data:
            pairs = [(0, int(t.get("beta", 0)))]
            pairs += [(VarId.parse(k).slot, int(e)) for k, e in t.get("vars", {}).items()]
            coef = Fraction(t["coef"])
            out[encode(pairs)] = _normalize_coeff(coef)
        return Poly.clean(out)


def monomial_sort_key(m: int):
    pairs = decode(m)
    beta_e = pairs[0][1] if pairs and pairs[0][0] == 0 else 0
    body = [(s, e) for s, e in pairs if s != 0]
    deg = sum(e for _, e in body)
    # graded; then lex with a1 > a2 > ... > b1 > ... ; then beta power
    lex = []
    for s, e in body:
        lex.append(s)
        lex.append(-e)
    return (deg, tuple(lex), beta_e)


def _var_name(slot: int) -> str:
    return "β" if slot == 0 else VarId.from_slot(slot).name


def _mono_text(m: int) -> str:
    parts = []
    for s, e in decode(m):
        parts.append(_var_name(s) if e == 1 else f"{_var_name(s)}^{e}")
    return "*".join(parts)


def to_text(p: Poly) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(p.sorted_terms()):
        mono = _mono_text(m)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _term_json(m: int, c) -> dict:
    pairs = decode(m)
    beta_e = 0
    vars_ = {}
    for s, e in pairs:
        if s == 0:
            beta_e = e
        else:
            vars_[VarId.from_slot(s).name] = e
    return {"coef": str(c), "beta": beta_e, "vars": vars_}


# ---------------------------------------------------------------------------
# exact division

def exact_divide(p: Poly, q: Poly) -> Poly:
    """p / q when q divides p; raises NotDivisible otherwise."""
    p, q = Poly.coerce(p), Poly.coerce(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return Poly()
    if len(q.terms) == 1:
        (mq, cq), = q.terms.items()
        out = {}
        for m, c in p.terms.items():
            d = _mono_divides(m, mq)
            if d is None:
                raise NotDivisible("monomial does not divide")
            out[d] = _divide_coeff(c, cq)
        return Poly(out)
    lq = max(q.terms)
    lc = q.terms[lq]
    rest = [(m, c) for m, c in q.terms.items() if m != lq]
    rem = dict(p.terms)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        m = -heapq.heappop(heap)
        c = rem.pop(m, 0)
        if c == 0:
            continue
        while heap and -heap[0] == m:
            heapq.heappop(heap)
        d = _mono_divides(m, lq)
        if d is None:
            raise NotDivisible("leading monomial not divisible")
        t = _divide_coeff(c, lc)
        quot[d] = t
        for mr, cr in rest:
            k = d + mr
            v = rem.get(k, 0) - t * cr
            if v:
                if k not in rem:
                    heapq.heappush(heap, -k)
                rem[k] = v
            else:
                rem.pop(k, None)
    return Poly.clean(quot)


def _divide_coeff(c, d):
    if isinstance(c, int) and isinstance(d, int):
        if c % d == 0:
            return c // d
        raise NotDivisible(f"coefficient {c} not divisible by {d}")
    return _normalize_coeff(Fraction(c) / Fraction(d))


def divide_unit(p: Poly, slot: int) -> Poly | None:
    """p / (1 + beta*v) if exact, else None."""
    if p.is_zero():
        return p
    shift = SLOT_BITS * slot
    by_deg: dict[int, dict] = {}
    for m, c in p.terms.items():
        e = (m >> shift) & _MASK
        by_deg.setdefault(e, {})[m - (e << shift)] = c
    top = max(by_deg)
    if top == 0:
        return None
    # p_k = q_k + beta*q_{k-1}
    q: list[dict] = []
    prev: dict = {}
    for k in range(top):
        cur = dict(by_deg.get(k, {}))
        for m, c in prev.items():
            mm = m + BETA_UNIT
            v = cur.get(mm, 0) - c
            if v:
                cur[mm] = v
            else:
                cur.pop(mm, None)
        q.append(cur)
        prev = cur
    last = {m + BETA_UNIT: c for m, c in prev.items()}
    if last != by_deg.get(top, {}):
        return None
    out = {}
    for k, terms in enumerate(q):
        add = k << shift
        for m, c in terms.items():
            out[m + add] = c
    return Poly(out)


def divide_linear(p: Poly, slot: int, other: Poly) -> Poly:
    """p / (v - other) where ``other`` does not involve v; NotDivisible if inexact."""
    shift = SLOT_BITS * slot
    by_deg: dict[int, Poly] = {}
    for m, c in p.terms.items():
        e = (m >> shift) & _MASK
        by_deg.setdefault(e, {})[m - (e << shift)] = c
    if not by_deg:
        return Poly()
    by_deg = {k: Poly(v) for k, v in by_deg.items()}
    top = max(by_deg)
    # p = (v - o) q, q_{k-1} = p_k + o q_k (descending)
    q = [Poly()] * top
    carry = Poly()
    for k in range(top, 0, -1):
        carry = by_deg.get(k, Poly()) + other * carry if k < top else by_deg[top]
        q[k - 1] = carry
    if by_deg.get(0, Poly()) + other * carry != Poly():
        raise NotDivisible("linear factor does not divide")
    out: dict = {}
    for k, part in enumerate(q):
        add = k << shift
        for m, c in part.terms.items():
            out[m + add] = c
    return Poly(out)


@lru_cache(maxsize=4096)
def unit_power(slot: int, e: int) -> Poly:
    """(1 + beta*v)^e."""
    return Poly({0: 1, BETA_UNIT + _unit(slot): 1}) ** e


# ---------------------------------------------------------------------------
# localized polynomials

class LocPoly:
    """num / prod_v (1 + beta*v)^den[v], with num reduced against den."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den: Mapping | None = None, *, reduced: bool = False):
        num = Poly.coerce(num)
        den = {s: e for s, e in (den or {}).items() if e > 0}
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = tuple(sorted(den.items()))
        self._hash = None

    @staticmethod
    def coerce(x) -> "LocPoly":
        if isinstance(x, LocPoly):
            return x
        return LocPoly(Poly.coerce(x), reduced=True)

    @staticmethod
    def var(v) -> "LocPoly":
        return LocPoly(Poly.var(v), reduced=True)

    def is_poly(self) -> bool:
        return not self.den

    def to_poly(self) -> Poly:
        if self.den:
            raise DenominatorNotSupported("value has a nontrivial denominator")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def _den_dict(self) -> dict:
        return dict(self.den)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = LocPoly.coerce(other)
        if not isinstance(other, LocPoly):
            return NotImplemented
        if not self.den and not other.den:
            return LocPoly(self.num + other.num, reduced=True)
        d1, d2 = self._den_dict(), other._den_dict()
        common = {s: max(d1.get(s, 0), d2.get(s, 0)) for s in set(d1) | set(d2)}
        n1 = self.num
        for s, e in common.items():
            if e - d1.get(s, 0):
                n1 = n1 * unit_power(s, e - d1.get(s, 0))
        n2 = other.num
        for s, e in common.items():
            if e - d2.get(s, 0):
                n2 = n2 * unit_power(s, e - d2.get(s, 0))
        return LocPoly(n1 + n2, common)

    __radd__ = __add__

    def __neg__(self):
        return LocPoly(-self.num, self._den_dict(), reduced=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = LocPoly.coerce(other)
        if not isinstance(other, LocPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = LocPoly.coerce(other)
        if not isinstance(other, LocPoly):
            return NotImplemented
        if not self.den and not other.den:
            return LocPoly(self.num * other.num, reduced=True)
        den = self._den_dict()
        for s, e in other.den:
            den[s] = den.get(s, 0) + e
        return LocPoly(self.num * other.num, den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return LocPoly.coerce(1).divide(self ** (-k))
        out = LocPoly.coerce(1)
        for _ in range(k):
            out = out * self
        return out

    def mul_beta(self, k: int = 1) -> "LocPoly":
        return LocPoly(self.num.mul_beta(k), self._den_dict(), reduced=True)

    def divide(self, other) -> "LocPoly":
        """Exact quotient in the localized ring; NotDivisible if impossible."""
        other = LocPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        units, core = split_units(other.num)
        num = exact_divide(self.num, core) if not core.is_constant() or core.constant_term() != 1 else self.num
        for s, e in other.den:
            num = num * unit_power(s, e)
        den = self._den_dict()
        for s, e in units.items():
            den[s] = den.get(s, 0) + e
        return LocPoly(num, den)

    def __truediv__(self, other):
        return self.divide(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = LocPoly.coerce(other)
        if not isinstance(other, LocPoly):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if not self.den:
            return to_text(self.num)
        den = "*".join(
            f"(1 + β*{_var_name(s)})" + (f"^{e}" if e > 1 else "") for s, e in self.den
        )
        return f"({to_text(self.num)})/({den})"

    __repr__ = __str__

    def to_json(self) -> dict | list:
        if not self.den:
            return self.num.to_json()
        return {"num": self.num.to_json(), "den": {_var_name(s): e for s, e in self.den}}

    @staticmethod
    def from_json(data) -> "LocPoly":
        if isinstance(data, list):
            return LocPoly(Poly.from_json(data))
        den = {VarId.parse(k).slot: int(e) for k, e in data.get("den", {}).items()}
        return LocPoly(Poly.from_json(data["num"]), den)

    def set_zero(self, slots) -> "LocPoly":
        slots = {_slot_of(s) for s in slots}
        den = {s: e for s, e in self.den if s not in slots}
        return LocPoly(self.num.set_zero(slots), den)

    def rename(self, mapping: Mapping) -> "LocPoly":
        mp = {_slot_of(k): _slot_of(v) for k, v in mapping.items()}
        den = {}
        for s, e in self.den:
            t = mp.get(s, s)
            den[t] = den.get(t, 0) + e
        return LocPoly(self.num.rename(mp), den, reduced=True)

    def homogeneous(self) -> bool:
        # the denominator factors (1 + beta*v) are of degree 0
        return self.num.is_homogeneous()


def _reduce(num: Poly, den: dict) -> tuple[Poly, dict]:
    if num.is_zero():
        return num, {}
    out = {}
    present = num.variables()
    for s, e in den.items():
        k = 0
        if s in present:
            while k < e:
                q = divide_unit(num, s)
                if q is None:
                    break
                num = q
                k += 1
        if e - k:
            out[s] = e - k
    return num, out


def split_units(p: Poly) -> tuple[dict, Poly]:
    """Write p = prod (1 + beta*v)^e * core, pulling out every unit factor."""
    units = {}
    for s in sorted(p.variables()):
        while True:
            q = divide_unit(p, s)
            if q is None:
                break
            p = q
            units[s] = units.get(s, 0) + 1
    return units, p


Scalar = Union[int, Fraction, Poly, LocPoly]


def as_loc(x: Scalar) -> LocPoly:
    return LocPoly.coerce(x)


def oplus(p: Scalar, q: Scalar):
    """p + q + beta*p*q."""
    if isinstance(p, LocPoly) or isinstance(q, LocPoly):
        p, q = as_loc(p), as_loc(q)
        return p + q + (p * q).mul_beta()
    p, q = Poly.coerce(p), Poly.coerce(q)
    return p + q + (p * q).mul_beta()


def oplus_all(*items: Scalar):
    out = Poly()
    for it in items:
        out = oplus(out, it)
    return out


def ominus(p: Scalar, q: Scalar) -> LocPoly:
    """(p - q)/(1 + beta*q); the denominator must be a product of units."""
    p, q = as_loc(p), as_loc(q)
    d = q.mul_beta() + 1
    units, core = split_units(d.num)
    if not core.is_constant() or core.constant_term() not in (1, -1):
        raise DenominatorNotSupported(f"1 + β*({q}) is not a product of (1 + β*v)")
    sign = core.constant_term()
    num = (p - q).num * sign
    for s, e in d.den:
        num = num * unit_power(s, e)
    den = (p - q)._den_dict()
    for s, e in units.items():
        den[s] = den.get(s, 0) + e
    return LocPoly(num, den)


def bar(v) -> LocPoly:
    """-v/(1 + beta*v) for a variable or any admissible value."""
    if isinstance(v, (VarId, str)):
        s = _slot_of(v)
        return LocPoly(-Poly.var(s), {s: 1}, reduced=True)
    return ominus(0, v)


def substitute(p: Scalar, sigma: Mapping) -> LocPoly:
    """Simultaneous substitution of variables by LocPoly values."""
    p = as_loc(p)
    images = {_slot_of(k): as_loc(v) for k, v in sigma.items()}
    zero = {s for s, v in images.items() if v.is_zero()}
    num = p.num.set_zero(zero)
    images = {s: v for s, v in images.items() if s not in zero}
    # common denominator for the numerator images
    groups: dict = {}
    for m, c in num.terms.items():
        key = []
        rest = m
        for s in images:
            e = exponent(m, s)
            if e:
                key.append((s, e))
                rest -= e << (SLOT_BITS * s)
        groups.setdefault(tuple(key), {})[rest] = c
    max_e = {s: 0 for s in images}
    for key in groups:
        for s, e in key:
            max_e[s] = max(max_e[s], e)
    common: dict = {}
    for s, e in max_e.items():
        for t, k in images[s].den:
            common[t] = common.get(t, 0) + k * e
    num_cache: dict = {}
    den_cache: dict = {}

    def num_pow(s, e):
        if (s, e) not in num_cache:
            num_cache[(s, e)] = images[s].num ** e
        return num_cache[(s, e)]

    def den_pow(s, e):
        if (s, e) not in den_cache:
            acc = Poly.const(1)
            for t, k in images[s].den:
                acc = acc * unit_power(t, k * e)
            den_cache[(s, e)] = acc
        return den_cache[(s, e)]

    total = Poly()
    for key, rest_terms in groups.items():
        factor = Poly.const(1)
        got = dict(key)
        for s in images:
            e = got.get(s, 0)
            if e:
                factor = factor * num_pow(s, e)
            if max_e[s] - e and images[s].den:
                factor = factor * den_pow(s, max_e[s] - e)
        total = total + Poly(rest_terms) * factor
    result = LocPoly(total, common)
    # original denominator of p: divide by the substituted (1 + beta*v)
    for s, e in p.den:
        if s in images or s in zero:
            unit = images[s].mul_beta() + 1 if s in images else LocPoly.coerce(1)
            for _ in range(e):
                result = result.divide(unit)
        else:
            result = result * LocPoly(1, {s: e}, reduced=True)
    return result


# ---------------------------------------------------------------------------
# truncated series

class TruncSeries:
    """Polynomial with rational coefficients, truncated above variable degree ``trunc``."""

    __slots__ = ("poly", "trunc")

    def __init__(self, poly, trunc: int):
        poly = Poly.coerce(poly)
        self.poly = Poly({m: c for m, c in poly.terms.items() if var_degree(m) <= trunc})
        self.trunc = trunc

    @staticmethod
    def from_value(x: Scalar, trunc: int) -> "TruncSeries":
        """Expand a LocPoly (1/(1+beta*v) as a geometric series)."""
        x = as_loc(x)
        acc = TruncSeries(x.num, trunc)
        for s, e in x.den:
            inv = {}
            for k in range(trunc + 1):
                inv[k * (BETA_UNIT + _unit(s))] = _neg_binom(e, k)
            acc = acc * TruncSeries(Poly.clean(inv), trunc)
        return acc

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.from_value(other, self.trunc)

    def __add__(self, other):
        other = self._coerce(other)
        return TruncSeries(self.poly + other.poly, min(self.trunc, other.trunc))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.poly, self.trunc)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        t = min(self.trunc, other.trunc)
        a, b = self.poly.terms, other.poly.terms
        out: dict = {}
        for m1, c1 in a.items():
            d1 = var_degree(m1)
            if d1 > t:
                continue
            for m2, c2 in b.items():
                if d1 + var_degree(m2) > t:
                    continue
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return TruncSeries(Poly.clean(out), t)

    __rmul__ = __mul__

    def mul_beta(self, k: int = 1) -> "TruncSeries":
        return TruncSeries(self.poly.mul_beta(k), self.trunc)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.from_value(other, self.trunc)
        t = min(self.trunc, other.trunc)
        return TruncSeries(self.poly, t).poly == TruncSeries(other.poly, t).poly

    def __hash__(self):
        return hash((self.poly, self.trunc))

    def constant_part(self) -> Poly:
        return Poly({m: c for m, c in self.poly.terms.items() if var_degree(m) == 0})

    def __str__(self):
        return f"{to_text(self.poly)} + O(deg {self.trunc + 1})"

    __repr__ = __str__


def _neg_binom(e: int, k: int) -> int:
    # coefficient of (beta*v)^k in (1 + beta*v)^(-e)
    return (-1) ** k * comb(e + k - 1, k)


def binom_half(k: int) -> Fraction:
    """Generalized binomial coefficient C(1/2, k)."""
    out = Fraction(1)
    for j in range(k):
        out *= (Fraction(1, 2) - j) / (j + 1)
    return out


def sqrt_series(s: TruncSeries) -> TruncSeries:
    """The square root with constant term 1."""
    if s.constant_part() != Poly.const(1):
        raise BadConstantTerm("constant term must be 1")
    t = s - 1
    out = TruncSeries(Poly.const(1), s.trunc)
    power = TruncSeries(Poly.const(1), s.trunc)
    for k in range(1, s.trunc + 1):
        power = power * t
        if power.is_zero():
            break
        out = out + power * binom_half(k)
    return out


# convenient constructors
def a(i: int) -> Poly:
    return Poly.var(VarId(Family.A, i))


def b(i: int) -> Poly:
    return Poly.var(VarId(Family.B, i))


def x(i: int) -> Poly:
    return Poly.var(VarId(Family.X, i))


def c(i: int) -> Poly:
    return Poly.var(VarId(Family.C, i))


def t(i: int) -> Poly:
    return Poly.var(VarId(Family.T, i))


BETA = Poly.beta()
ONE = Poly.const(1)
ZERO = Poly()
