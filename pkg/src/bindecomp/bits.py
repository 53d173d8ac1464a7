"""Binary form of odd integers and of candidate factors.

An odd M >= 3 is stored as its top set-bit index N together with the
interior digits gamma_1..gamma_{N-1}; bits 0 and N are always 1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

UNSET = None


class BitsError(ValueError):
    """Base class for numeral and bit-vector errors."""


class NotOdd(BitsError):
    pass


class TooSmall(BitsError):
    pass


class Malformed(BitsError):
    pass


class UndecidedBit(BitsError):
    pass


_NUMERAL = re.compile(r"(?:0[xX][0-9a-fA-F]+|0[bB][01]+|[0-9]+)")


@dataclass(frozen=True)
class OddBinary:
    N: int
    gamma: tuple[int, ...]

    def __post_init__(self):
        if self.N < 1:
            raise TooSmall(f"top bit index must be >= 1, got {self.N}")
        if len(self.gamma) != self.N - 1:
            raise Malformed(f"expected {self.N - 1} interior digits, got {len(self.gamma)}")
        if any(g not in (0, 1) for g in self.gamma):
            raise Malformed("interior digits must be 0 or 1")

    @classmethod
    def from_int(cls, value: int) -> "OddBinary":
        if value < 3:
            raise TooSmall(f"{value} is smaller than 3")
        if value % 2 == 0:
            raise NotOdd(f"{value} is even")
        N = value.bit_length() - 1
        return cls(N, tuple((value >> i) & 1 for i in range(1, N)))

    @cached_property
    def value(self) -> int:
        return to_integer(self)

    def bit(self, i: int) -> int:
        """Digit of M at position i (0 beyond the top bit)."""
        if i == 0 or i == self.N:
            return 1
        if 0 < i < self.N:
            return self.gamma[i - 1]
        return 0

    def __str__(self):
        return str(self.value)


def parse_odd(text: str) -> OddBinary:
    """Parse a decimal, 0x-hex or 0b-binary numeral into an OddBinary.

    >>> parse_odd("45").gamma
    (0, 1, 1, 0)
    """
    s = text.strip()
    if not _NUMERAL.fullmatch(s):
        raise Malformed(f"not a decimal, 0x or 0b numeral: {text!r}")
    value = int(s, 0) if s[:2].lower() in ("0x", "0b") else int(s, 10)
    return OddBinary.from_int(value)


def to_integer(b: OddBinary) -> int:
    value = (1 << b.N) | 1
    for i, g in enumerate(b.gamma, start=1):
        if g:
            value |= 1 << i
    return value


def factor_value(m: int, bits: Sequence[Optional[int]]) -> int:
    """Value 2^m + sum(bits[i-1] * 2^i) + 1 of a factor with top index m."""
    if len(bits) != m - 1:
        raise ValueError(f"factor with top index {m} has {m - 1} interior bits, got {len(bits)}")
    value = (1 << m) | 1
    for i, bit in enumerate(bits, start=1):
        if bit is UNSET:
            raise UndecidedBit(f"bit {i} of factor is undecided")
        if bit:
            value |= 1 << i
    return value


@dataclass(frozen=True)
class PartialFactors:
    """Interior bits of both factors decided so far.

    ``alpha`` and ``beta`` hold alpha_1..alpha_{m-1} and beta_1..beta_{n-1};
    each entry is 0, 1 or UNSET. The boundary bits alpha_0, beta_0,
    alpha_m, beta_n are forced to 1 and not stored.
    """

    m: int
    n: int
    alpha: tuple[Optional[int], ...]
    beta: tuple[Optional[int], ...]

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if len(self.alpha) != self.m - 1 or len(self.beta) != self.n - 1:
            raise ValueError("interior bit vectors have the wrong length")

    @classmethod
    def empty(cls, m: int, n: int) -> "PartialFactors":
        return cls(m, n, (UNSET,) * (m - 1), (UNSET,) * (n - 1))

    def a(self, i: int) -> Optional[int]:
        if i == 0 or i == self.m:
            return 1
        if 0 < i < self.m:
            return self.alpha[i - 1]
        return 0

    def b(self, j: int) -> Optional[int]:
        if j == 0 or j == self.n:
            return 1
        if 0 < j < self.n:
            return self.beta[j - 1]
        return 0

    def with_bits(self, alpha: Optional[dict] = None, beta: Optional[dict] = None) -> "PartialFactors":
        """Copy with the given {index: bit} assignments applied."""
        al, be = list(self.alpha), list(self.beta)
        for i, v in (alpha or {}).items():
            al[i - 1] = v
        for j, v in (beta or {}).items():
            be[j - 1] = v
        return PartialFactors(self.m, self.n, tuple(al), tuple(be))

    def values(self) -> tuple[int, int]:
        return factor_value(self.m, self.alpha), factor_value(self.n, self.beta)
