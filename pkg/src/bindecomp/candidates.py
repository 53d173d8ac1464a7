"""Candidate exponent pairs (m, n) for a factorization of an odd integer.

If M = A*B with top-bit indices m <= n, then 2^(m+n) < M < 2^(m+n+2), so
m + n is N - 1 or N. When the second-highest set bit k of M satisfies
k <= N/2, the sum m + n = N is impossible because A*B would exceed M.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bits import OddBinary


class SumKind(str, Enum):
    N_MINUS_1 = "N-1"
    N = "N"


@dataclass(frozen=True)
class ExponentPair:
    m: int
    n: int
    sum_kind: SumKind

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got ({self.m}, {self.n})")

    @property
    def k0(self) -> int:
        return self.m.bit_length() - 1

    @property
    def eps(self) -> tuple[int, ...]:
        """Binary digits of m, least significant first."""
        return tuple((self.m >> i) & 1 for i in range(self.m.bit_length()))

    @property
    def head_leaves(self) -> int:
        return 1 << (self.m - 1)

    def __str__(self):
        return f"({self.m},{self.n})"


def second_bit(M: OddBinary) -> int:
    """Position of the highest set bit of M strictly below N (0 for 2^N + 1)."""
    for i in range(M.N - 1, 0, -1):
        if M.gamma[i - 1]:
            return i
    return 0


def sum_n_excluded(M: OddBinary) -> bool:
    return M.N >= 2 and 2 * second_bit(M) <= M.N


def exponent_pairs(M: OddBinary) -> list[ExponentPair]:
    N = M.N
    pairs = [ExponentPair(m, N - 1 - m, SumKind.N_MINUS_1) for m in range(1, (N - 1) // 2 + 1)]
    if not sum_n_excluded(M):
        pairs += [ExponentPair(m, N - m, SumKind.N) for m in range(1, N // 2 + 1)]
    return pairs
