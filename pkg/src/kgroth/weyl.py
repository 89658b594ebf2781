"""Weyl groups of types A, B, C, D as (signed) permutations in window notation.

A group element of rank n is stored as its window ``(w(1), ..., w(n))`` with
negative entries standing for barred values.  Type A of rank n means the
symmetric group S_n (generators s_1..s_{n-1}); B and C are the same
hyperoctahedral group (extra generator s_0), and D is its index-two subgroup
with the generator s_1h (written HAT = -1 internally, ``1h`` in text).

Right multiplication by a generator acts on positions, left multiplication
acts on values:

    w * s_i    swaps positions i, i+1         s_i * w   swaps values i, i+1
    w * s_0    negates position 1             s_0 * w   swaps values 1, -1
    w * s_1h   (w1, w2) -> (-w2, -w1)         s_1h * w  1 <-> -2, 2 <-> -1

Every group is enumerated once (``group(letter, n)``) and all products are
then table lookups on element indices.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

HAT = -1
LETTERS = ("A", "B", "C", "D")
DEFAULT_CAP = 10 ** 6


class WeylError(ValueError):
    pass


class InvalidGenerator(WeylError):
    pass


class NotGrassmannian(WeylError):
    pass


class TooLarge(WeylError):
    pass


@dataclass(frozen=True)
class WeylType:
    letter: str
    rank: int

    def __post_init__(self):
        if self.letter not in LETTERS:
            raise WeylError(f"unknown type {self.letter!r}")
        if self.rank < 1 or (self.letter == "D" and self.rank < 2):
            raise WeylError(f"bad rank {self.rank} for type {self.letter}")

    def generators(self) -> tuple[int, ...]:
        rest = tuple(range(1, self.rank))
        if self.letter == "A":
            return rest
        if self.letter == "D":
            return (HAT,) + rest
        return (0,) + rest

    def __str__(self):
        return f"{self.letter}{self.rank}"


def gen_name(s: int) -> str:
    return "1h" if s == HAT else str(s)


def parse_gen(tok: str) -> int:
    tok = tok.strip()
    if tok in ("1h", "1^", "1hat"):
        return HAT
    try:
        return int(tok)
    except ValueError:
        raise InvalidGenerator(f"bad generator {tok!r}") from None


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_gen(t) for t in text.split(","))


def word_text(word: Sequence[int]) -> str:
    return ",".join(gen_name(s) for s in word)


# -- raw window operations

def _check_gen(letter: str, n: int, s: int):
    if s == HAT:
        ok = letter == "D" and n >= 2
    elif s == 0:
        ok = letter in ("B", "C")
    else:
        ok = 1 <= s < n
    if not ok:
        raise InvalidGenerator(f"generator {gen_name(s)} invalid for {letter}{n}")


def right_act(win: tuple, s: int) -> tuple:
    w = list(win)
    if s == 0:
        w[0] = -w[0]
    elif s == HAT:
        w[0], w[1] = -w[1], -w[0]
    else:
        w[s - 1], w[s] = w[s], w[s - 1]
    return tuple(w)


def _left_value(v: int, s: int) -> int:
    if s == 0:
        return -v if abs(v) == 1 else v
    if s == HAT:
        return {1: -2, 2: -1, -1: 2, -2: 1}.get(v, v)
    a = abs(v)
    if a == s:
        return s + 1 if v > 0 else -(s + 1)
    if a == s + 1:
        return s if v > 0 else -s
    return v


def left_act(win: tuple, s: int) -> tuple:
    return tuple(_left_value(v, s) for v in win)


def is_right_descent(win: tuple, s: int) -> bool:
    if s == 0:
        return win[0] < 0
    if s == HAT:
        return win[0] + win[1] < 0
    return win[s - 1] > win[s]


def compose(w: tuple, v: tuple) -> tuple:
    """(w v)(i) = w(v(i))."""
    return tuple(w[abs(k) - 1] if k > 0 else -w[abs(k) - 1] for k in v)


def inverse_window(w: tuple) -> tuple:
    out = [0] * len(w)
    for i, v in enumerate(w, start=1):
        out[abs(v) - 1] = i if v > 0 else -i
    return tuple(out)


def length_formula(letter: str, w: tuple) -> int:
    """Closed-form length; used as an independent check of the group tables."""
    n = len(w)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    if letter == "A":
        return inv
    if letter == "D":
        return inv + sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
    return inv + sum(1 for i in range(n) for j in range(i, n) if w[i] + w[j] < 0)


# -- groups

def group_order(letter: str, n: int) -> int:
    f = 1
    for k in range(2, n + 1):
        f *= k
    if letter == "A":
        return f
    if letter == "D":
        return f * 2 ** (n - 1)
    return f * 2 ** n


def _windows(letter: str, n: int) -> Iterable[tuple]:
    for perm in permutations(range(1, n + 1)):
        if letter == "A":
            yield perm
            continue
        for signs in product((1, -1), repeat=n):
            if letter == "D" and signs.count(-1) % 2:
                continue
            yield tuple(p * s for p, s in zip(perm, signs))


class WeylGroup:
    """An enumerated Weyl group with multiplication tables on element indices."""

    def __init__(self, letter: str, n: int, cap: int = DEFAULT_CAP):
        self.type = WeylType(letter, n)
        self.letter, self.n = letter, n
        if group_order(letter, n) > cap:
            raise TooLarge(f"|W({letter}{n})| exceeds cap {cap}")
        self.gens = self.type.generators()
        # BFS from the identity gives lengths and a shortlex ordering
        e = tuple(range(1, n + 1))
        order = [e]
        dist = {e: 0}
        queue = deque([e])
        while queue:
            w = queue.popleft()
            for s in self.gens:
                v = right_act(w, s)
                if v not in dist:
                    dist[v] = dist[w] + 1
                    order.append(v)
                    queue.append(v)
        order.sort(key=lambda w: (dist[w], w))
        self.windows: list[tuple] = order
        self.index = {w: i for i, w in enumerate(order)}
        self.lengths = [dist[w] for w in order]
        self.gpos = {s: k for k, s in enumerate(self.gens)}
        self.right = [[self.index[right_act(w, s)] for s in self.gens] for w in order]
        self.left = [[self.index[left_act(w, s)] for s in self.gens] for w in order]
        self.inv = [self.index[inverse_window(w)] for w in order]
        self.identity = 0
        self.longest = max(range(len(order)), key=lambda i: self.lengths[i])
        self._words: dict[int, tuple] = {}
        self._bruhat: dict[tuple[int, int], bool] = {}

    def __len__(self):
        return len(self.windows)

    def __repr__(self):
        return f"WeylGroup({self.letter}{self.n})"

    def elements(self) -> list["GroupElt"]:
        return [GroupElt(self.letter, self.n, w) for w in self.windows]

    def elt(self, i: int) -> "GroupElt":
        return GroupElt(self.letter, self.n, self.windows[i])

    def idx(self, w: "GroupElt | tuple") -> int:
        win = w.window if isinstance(w, GroupElt) else tuple(w)
        return self.index[win]

    def rmul(self, i: int, s: int) -> int:
        return self.right[i][self.gpos[s]]

    def lmul(self, i: int, s: int) -> int:
        return self.left[i][self.gpos[s]]

    def mul(self, i: int, j: int) -> int:
        for s in self.word(j):
            i = self.rmul(i, s)
        return i

    def is_descent(self, i: int, s: int) -> bool:
        return self.lengths[self.rmul(i, s)] < self.lengths[i]

    def is_left_descent(self, i: int, s: int) -> bool:
        return self.lengths[self.lmul(i, s)] < self.lengths[i]

    def word(self, i: int) -> tuple:
        """Reduced word, smallest right descent removed first."""
        if i not in self._words:
            out = []
            j = i
            while self.lengths[j]:
                s = next(s for s in self.gens if self.is_descent(j, s))
                out.append(s)
                j = self.rmul(j, s)
            self._words[i] = tuple(reversed(out))
        return self._words[i]

    def from_word(self, word: Iterable[int]) -> int:
        i = 0
        for s in word:
            if s not in self.gpos:
                _check_gen(self.letter, self.n, s)
            i = self.rmul(i, s)
        return i

    def demazure(self, i: int, j: int) -> int:
        for s in self.word(j):
            k = self.rmul(i, s)
            if self.lengths[k] > self.lengths[i]:
                i = k
        return i

    def demazure_gen(self, i: int, s: int) -> int:
        k = self.rmul(i, s)
        return k if self.lengths[k] > self.lengths[i] else i

    def bruhat_leq(self, i: int, j: int) -> bool:
        if i == j or i == 0:
            return True
        if self.lengths[i] >= self.lengths[j]:
            return False
        key = (i, j)
        if key not in self._bruhat:
            s = next(s for s in self.gens if self.is_descent(j, s))
            js = self.rmul(j, s)
            is_ = self.rmul(i, s)
            if self.lengths[is_] < self.lengths[i]:
                res = self.bruhat_leq(is_, js)
            else:
                res = self.bruhat_leq(i, js)
            self._bruhat[key] = res
        return self._bruhat[key]

    def interval(self, i: int, j: int) -> list[int]:
        return [k for k in range(len(self)) if self.bruhat_leq(i, k) and self.bruhat_leq(k, j)]

    def sn_part(self) -> list[int]:
        """Indices of the elements lying in the type-A subgroup S_n."""
        return [i for i, w in enumerate(self.windows) if all(v > 0 for v in w)]


def _guard_cap() -> int:
    env = os.environ.get("GROTH_GUARD")
    return int(env) if env else DEFAULT_CAP


@lru_cache(maxsize=None)
def _group(letter: str, n: int, cap: int) -> WeylGroup:
    return WeylGroup(letter, n, cap)


def group(letter: str, n: int) -> WeylGroup:
    return _group(letter, n, _guard_cap())


@dataclass(frozen=True)
class GroupElt:
    letter: str
    n: int
    window: tuple

    def __post_init__(self):
        w = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", w)
        WeylType(self.letter, self.n)
        if len(w) != self.n or sorted(abs(v) for v in w) != list(range(1, self.n + 1)):
            raise WeylError(f"{list(w)} is not a signed permutation of rank {self.n}")
        negs = sum(1 for v in w if v < 0)
        if self.letter == "A" and negs:
            raise WeylError("type A windows have no negative entries")
        if self.letter == "D" and negs % 2:
            raise WeylError("type D windows need an even number of negative entries")

    # -- construction
    @staticmethod
    def identity(letter: str, n: int) -> "GroupElt":
        return GroupElt(letter, n, tuple(range(1, n + 1)))

    @staticmethod
    def from_word(letter: str, n: int, word: Iterable[int]) -> "GroupElt":
        win = tuple(range(1, n + 1))
        for s in word:
            _check_gen(letter, n, s)
            win = right_act(win, s)
        return GroupElt(letter, n, win)

    @staticmethod
    def parse(text: str, letter: str | None = None, n: int | None = None) -> "GroupElt":
        """``C3:[2,-3,1]`` or a bare ``[2,-3,1]`` / ``2,-3,1`` with explicit type."""
        text = text.strip()
        if ":" in text:
            head, text = text.split(":", 1)
            letter, n = head[0], int(head[1:])
        win = tuple(int(t) for t in text.strip("[] ").split(",") if t.strip())
        if letter is None:
            raise WeylError("missing type letter")
        return GroupElt(letter, n if n is not None else len(win), win)

    # -- group structure
    @property
    def group(self) -> WeylGroup:
        return group(self.letter, self.n)

    @property
    def idx(self) -> int:
        return self.group.index[self.window]

    def right(self, s: int) -> "GroupElt":
        _check_gen(self.letter, self.n, s)
        return GroupElt(self.letter, self.n, right_act(self.window, s))

    def left(self, s: int) -> "GroupElt":
        _check_gen(self.letter, self.n, s)
        return GroupElt(self.letter, self.n, left_act(self.window, s))

    def __mul__(self, other: "GroupElt") -> "GroupElt":
        if (other.letter, other.n) != (self.letter, self.n) and not _same_group(self, other):
            raise WeylError("elements of different groups")
        return GroupElt(self.letter, self.n, compose(self.window, other.window))

    def inverse(self) -> "GroupElt":
        return GroupElt(self.letter, self.n, inverse_window(self.window))

    def length(self) -> int:
        """Coxeter length, by stripping right descents one at a time."""
        w, k = self.window, 0
        gens = WeylType(self.letter, self.n).generators()
        while True:
            s = next((s for s in gens if is_right_descent(w, s)), None)
            if s is None:
                return k
            w = right_act(w, s)
            k += 1

    def reduced_word(self) -> tuple:
        return self.group.word(self.idx)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def bruhat_leq(self, other: "GroupElt") -> bool:
        g = self.group
        return g.bruhat_leq(self.idx, other.idx)

    def demazure(self, other: "GroupElt") -> "GroupElt":
        g = self.group
        return g.elt(g.demazure(self.idx, other.idx))

    def right_descents(self) -> list[int]:
        return [s for s in WeylType(self.letter, self.n).generators() if is_right_descent(self.window, s)]

    def embed(self, n: int) -> "GroupElt":
        """The same element viewed in the rank-n group (n >= rank)."""
        return GroupElt(self.letter, n, self.window + tuple(range(self.n + 1, n + 1)))

    def as_type(self, letter: str) -> "GroupElt":
        return GroupElt(letter, self.n, self.window)

    # -- Grassmannian dictionary
    def is_grassmannian(self) -> bool:
        w = self.window
        return all(w[i] < w[i + 1] for i in range(self.n - 1))

    def strict_partition(self) -> tuple:
        if not self.is_grassmannian():
            raise NotGrassmannian(f"{self} is not Grassmannian")
        lam = sorted((-v for v in self.window if v < 0), reverse=True)
        if self.letter == "D":
            lam = [k - 1 for k in lam if k > 1]
        elif self.letter == "A":
            raise NotGrassmannian("no strict partition in type A")
        return tuple(lam)

    def __str__(self):
        return f"{self.letter}{self.n}:[{','.join(map(str, self.window))}]"

    def window_text(self) -> str:
        return f"[{','.join(map(str, self.window))}]"

    def to_json(self) -> dict:
        return {"type": self.letter, "rank": self.n, "window": list(self.window)}

    @staticmethod
    def from_json(d: dict) -> "GroupElt":
        return GroupElt(d["type"], int(d["rank"]), tuple(d["window"]))


def _same_group(u: GroupElt, v: GroupElt) -> bool:
    return u.n == v.n and {u.letter, v.letter} <= {"B", "C"}


def enumerate_group(letter: str, n: int) -> list[GroupElt]:
    return group(letter, n).elements()


def grassmannian_elements(letter: str, n: int) -> list[GroupElt]:
    return [w for w in enumerate_group(letter, n) if w.is_grassmannian()]


def grassmannian_of(letter: str, n: int, lam: Sequence[int]) -> GroupElt:
    """The Grassmannian element whose strict partition is ``lam``."""
    for w in grassmannian_elements(letter, n):
        if w.strict_partition() == tuple(lam):
            return w
    raise NotGrassmannian(f"no Grassmannian element of {letter}{n} with partition {tuple(lam)}")


def all_windows(letter: str, n: int) -> list[tuple]:
    """Brute-force window list, independent of the BFS enumeration."""
    return list(_windows(letter, n))
