"""Run-time limits and defaults shared by the library, the CLI and the scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass, field


class GuardExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Guards:
    max_rank_a: int = 6        # S_n with n <= 6
    max_rank_bc: int = 4
    max_rank_d: int = 4
    max_rank_adjoint: int = 3
    max_rank_lr: int = 3
    max_gp_vars: int = 5       # orbit sums over S_n

    @staticmethod
    def from_env() -> "Guards":
        env = os.environ.get("GROTH_GUARD")
        if not env:
            return Guards()
        k = int(env)
        return Guards(k, k, k, k, k, k)

    def rank_limit(self, letter: str) -> int:
        return {"A": self.max_rank_a, "B": self.max_rank_bc, "C": self.max_rank_bc,
                "D": self.max_rank_d}[letter]

    def check_rank(self, letter: str, n: int, limit: int | None = None):
        lim = self.rank_limit(letter) if limit is None else limit
        if n > lim:
            raise GuardExceeded(f"rank {n} exceeds guard {lim} for type {letter} (set GROTH_GUARD)")


@dataclass(frozen=True)
class SeriesConfig:
    trunc: int = 4


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of the oracle-equivalence experiment script."""
    types: tuple = ("A", "B", "C", "D")
    ranks: tuple = (2, 3)
    sample: int = 10
    seed: int = 2024
    methods: tuple = ("genfun", "eyd", "compat")
    out: str | None = None


@dataclass(frozen=True)
class PositivityConfig:
    types: tuple = ("B", "C", "D")
    ranks: tuple = (2, 3)
    nvars: dict = field(default_factory=lambda: {2: 2, 3: 3})


def guards() -> Guards:
    return Guards.from_env()
