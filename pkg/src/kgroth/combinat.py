"""Combinatorial models: compatible sequences and extended EYD (pipe dream) sums.

Both expand a product of h-factors term by term.  A compatible-sequence
term pairs a Hecke word (product beta^k u_w) with a weakly increasing
labelling saying which x-factor each letter came from.  An EYD pattern picks
a reduced subword of a fixed factor sequence Delta; the remaining letters
that do not change the Demazure product contribute (1 + beta wt).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .genfun import F_factors
from .polyring import Family, Poly, VarId, a, b, oplus, x
from .weyl import HAT, GroupElt, WeylGroup, gen_name, group


class NegativeTwoPower(ArithmeticError):
    pass


# -- Hecke words

@dataclass(frozen=True)
class HeckeWord:
    word: tuple
    target: GroupElt

    @property
    def excess(self) -> int:
        return len(self.word) - self.target.length()

    def text(self) -> str:
        return ",".join(gen_name(s) for s in self.word)


def hecke_words(w: GroupElt, cap: int) -> list[HeckeWord]:
    """All words of length <= cap whose u-product is beta^k u_w."""
    grp = w.group
    target = w.idx
    out = []

    def rec(state: int, word: list):
        if state == target:
            out.append(HeckeWord(tuple(word), w))
        if len(word) == cap:
            return
        for s in grp.gens:
            nxt = grp.demazure_gen(state, s)
            if grp.bruhat_leq(nxt, target):
                word.append(s)
                rec(nxt, word)
                word.pop()

    rec(0, [])
    return out


# -- compatible sequences

def _flat(s: int) -> int:
    return 1 if s == HAT else s


def _key(s: int, letter: str) -> int:
    return _flat(s) if letter == "D" else s


def _peak(word: Sequence[int], i: int, letter: str) -> bool:
    """word[i-1] <= word[i] >= word[i+1] (flattened in type D), 0-based i."""
    p, c, q = (_key(word[k], letter) for k in (i - 1, i, i + 1))
    return p <= c >= q


def _pair_ok(word, seq, i: int, letter: str) -> bool:
    """Constraints involving positions i-1, i only (0-based, i >= 1)."""
    same = seq[i - 1] == seq[i]
    if letter == "A":
        return not (same and word[i - 1] <= word[i])
    if not same or word[i - 1] != word[i]:
        return True
    if letter == "B":
        return word[i] != 0        # one h_0 per x-factor
    if letter == "D":
        return word[i] not in (1, HAT)
    return True


def is_compatible(word: Sequence[int], seq: Sequence[int], letter: str, n: int) -> bool:
    ell = len(word)
    if len(seq) != ell or any(seq[i] > seq[i + 1] for i in range(ell - 1)):
        return False
    if any(not 1 <= v <= n for v in seq):
        return False
    if letter == "A":
        if any(seq[i] > word[i] for i in range(ell)):
            return False
    for i in range(1, ell):
        if not _pair_ok(word, seq, i, letter):
            return False
    if letter != "A":
        # the missing neighbours at both ends count as n, so no end is a peak
        for i in range(1, ell - 1):
            if _peak(word, i, letter) and not seq[i - 1] < seq[i + 1]:
                return False
    return True


def compatible_seqs(word: Sequence[int], letter: str, n: int) -> list[tuple]:
    """Every weakly increasing sequence in 1..n compatible with the word."""
    ell = len(word)
    out = []

    def rec(seq: list):
        i = len(seq)
        if i == ell:
            if is_compatible(word, seq, letter, n):
                out.append(tuple(seq))
            return
        lo = seq[-1] if seq else 1
        for v in range(lo, n + 1):
            seq.append(v)
            if _prefix_ok(word, seq, letter):
                rec(seq)
            seq.pop()

    rec([])
    return out


def _prefix_ok(word, seq, letter: str) -> bool:
    i = len(seq) - 1
    if letter == "A" and seq[i] > word[i]:
        return False
    if i >= 1 and not _pair_ok(word, seq, i, letter):
        return False
    if letter != "A" and i >= 2 and _peak(word, i - 1, letter) and not seq[i - 2] < seq[i]:
        return False
    return True


def gamma(word: Sequence[int], seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(word) - 1) if word[i] == word[i + 1] and seq[i] == seq[i + 1])


def distinct(seq: Sequence[int]) -> int:
    return len(set(seq))


def o_count(word: Sequence[int], letter: str) -> int:
    if letter == "B":
        return sum(1 for s in word if s == 0)
    if letter == "D":
        return sum(1 for s in word if s in (1, HAT))
    return 0


def two_power(word, seq, letter: str):
    """2^{|b| - gamma - o}; in type D single terms may carry 1/2."""
    e = distinct(seq) - gamma(word, seq) - o_count(word, letter)
    if e < 0:
        if letter != "D":
            raise NegativeTwoPower(f"exponent {e} for {word}, {seq}")
        return Fraction(1, 2 ** -e)
    return 2 ** e


def compatible_pairs(w: GroupElt, n: int, cap: int | None = None) -> Iterator[tuple]:
    """(word, seq) with word in R(w) and seq compatible, built jointly."""
    letter = w.letter
    grp = w.group
    target = w.idx
    if cap is None:
        cap = (grp.n * (grp.n - 1) // 2) if letter == "A" else n * len(F_factors(letter, grp.n, 0))
    word: list = []
    seq: list = []

    def rec(state: int):
        if state == target:
            if is_compatible(word, seq, letter, n):
                yield tuple(word), tuple(seq)
        if len(word) == cap:
            return
        for s in grp.gens:
            nxt = grp.demazure_gen(state, s)
            if not grp.bruhat_leq(nxt, target):
                continue
            lo = seq[-1] if seq else 1
            for v in range(lo, n + 1):
                word.append(s)
                seq.append(v)
                if _prefix_ok(word, seq, letter):
                    yield from rec(nxt)
                word.pop()
                seq.pop()

    yield from rec(0)


def stanley_via_compat(w: GroupElt, n: int) -> Poly:
    """F^X_w(x_1..x_n) from compatible sequences (X = B, C, D)."""
    total = Poly()
    L = w.length()
    for word, seq in compatible_pairs(w, n):
        mono = Poly.const(1)
        for v in seq:
            mono = mono * x(v)
        coeff = two_power(word, seq, w.letter)
        total = total + mono.mul_beta(len(word) - L) * Poly.const(coeff)
    return total


def grothA_via_compat(w: GroupElt) -> Poly:
    """Double Grothendieck G_w(a, b) for w in S_n from compatible sequences."""
    n = w.n
    total = Poly()
    L = w.length()
    for word, seq in compatible_pairs(w, n - 1):
        term = Poly.const(1)
        for s, v in zip(word, seq):
            term = term * oplus(a(v), b(s - v + 1))
        total = total + term.mul_beta(len(word) - L)
    return total


# -- Delta sequences and extended EYDs

@dataclass(frozen=True)
class DeltaWord:
    letter: str
    n: int
    gens: tuple
    coords: tuple
    weights: tuple

    def __len__(self):
        return len(self.gens)

    def to_json(self) -> list:
        return [{"k": k + 1, "gen": gen_name(s), "coord": list(c), "weight": wt.to_json()}
                for k, (s, c, wt) in enumerate(zip(self.gens, self.coords, self.weights))]


def _pq(n: int):
    p = lambda i: x(n + 1 - i) if i <= n else a(i - n)
    q = lambda j: x(j) if j <= n else b(j - n)
    return p, q


def _delta_a_part(n: int, top: int):
    """Triangle Delta^A_{n-1}; row m holds s_{n-m}..s_{n-1} at height top - m."""
    gens, coords = [], []
    for m in range(1, n):
        for i in range(1, m + 1):
            gens.append(n - m + i - 1)
            coords.append((i, top - m))
    return gens, coords


def delta(letter: str, n: int) -> DeltaWord:
    if letter == "A":
        gens, coords = _delta_a_part(n, n)
        weights = [oplus(a(i), b(j)) for i, j in coords]
        return DeltaWord(letter, n, tuple(gens), tuple(coords), tuple(weights))
    if letter == "D" and n % 2:
        raise ValueError("the type D sequence is defined for even rank")
    gens, coords = _delta_a_part(n, 2 * n)
    for s in range(n):
        for t in range(1, n + 1):
            i, j = s + t, n - s
            if letter == "D":
                if t == 1:
                    continue
                gen = (HAT if j % 2 == 0 else 1) if t == 2 else t - 1
            else:
                gen = t - 1
            gens.append(gen)
            coords.append((i, j))
    p, q = _pq(n)
    weights = []
    for i, j in coords:
        if letter == "B" and i + j == n + 1:
            weights.append(q(j))
        else:
            weights.append(oplus(p(i), q(j)))
    return DeltaWord(letter, n, tuple(gens), tuple(coords), tuple(weights))


@dataclass(frozen=True)
class EYDPattern:
    boxes: tuple      # 1-based positions in Delta
    circles: tuple

    def weight(self, dw: DeltaWord) -> Poly:
        out = Poly.const(1)
        for k in self.boxes:
            out = out * dw.weights[k - 1]
        for k in self.circles:
            out = out * (dw.weights[k - 1].mul_beta() + 1)
        return out

    def to_json(self, dw: DeltaWord) -> dict:
        return {"boxes": [list(dw.coords[k - 1]) for k in self.boxes],
                "circles": [list(dw.coords[k - 1]) for k in self.circles],
                "weight": self.weight(dw).to_json()}


def movable_positions(dw: DeltaWord, boxes: Sequence[int], grp: WeylGroup) -> tuple:
    """Positions outside the boxes that are descents of the product of earlier boxes."""
    out = []
    state = 0
    box_set = set(boxes)
    for k, s in enumerate(dw.gens, start=1):
        if k in box_set:
            state = grp.rmul(state, s)
        elif state and grp.is_descent(state, s):
            out.append(k)
    return tuple(out)


def rsub(dw: DeltaWord, w: GroupElt) -> list[EYDPattern]:
    """All subsequences of Delta giving a reduced word of w."""
    grp = group(w.letter, dw.n)
    w = w.embed(dw.n) if w.n != dw.n else w
    target = grp.idx(w)
    L = grp.lengths
    out = []
    gens = dw.gens

    def rec(start: int, state: int, chosen: list):
        if L[state] == L[target]:
            if state == target:
                out.append(EYDPattern(tuple(chosen), movable_positions(dw, chosen, grp)))
            return
        for k in range(start, len(gens)):
            nxt = grp.rmul(state, gens[k])
            if L[nxt] != L[state] + 1:
                continue
            # nxt must be a prefix of a reduced word of w
            if L[grp.mul(grp.inv[nxt], target)] != L[target] - L[nxt]:
                continue
            chosen.append(k + 1)
            rec(k + 1, nxt, chosen)
            chosen.pop()

    rec(0, 0, [])
    return out


def groth_via_eyd(letter: str, n: int, w: GroupElt) -> Poly:
    """The EYD state sum; odd type D ranks use rank n+1 with x_{n+1} = 0."""
    if letter == "D" and n % 2:
        dw = delta(letter, n + 1)
        total = sum((p.weight(dw) for p in rsub(dw, w.embed(n + 1))), Poly())
        return total.set_zero([VarId(Family.X, n + 1)])
    dw = delta(letter, n)
    return sum((p.weight(dw) for p in rsub(dw, w)), Poly())
