"""Single bit-column equations of the product A*B = M.

Column j of the long multiplication reads

    coeff_j + carry_in_j = g_j + sum_i c[i, j] * 2^i

where coeff_j = sum_{a+b=j} alpha_a * beta_b, g_j is digit j of M and
c[i, j] is digit i of the overflow of column j, consumed at column j + i.
Because every unknown is 0 or 1, each column either fixes its new factor
bits by parity (one or two ways) or is a pure check; the carry digits are
then the binary digits of coeff + carry_in - g_j and never need branching.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bits import PartialFactors

RESOLVE_OPS = 4  # add carry, parity, subtract digit, halve


class Kind(str, Enum):
    FORCED = "FORCED"
    BRANCH = "BRANCH"
    CHECK_OK = "CHECK_OK"
    CONTRADICTION = "CONTRADICTION"


@dataclass(frozen=True)
class ColumnOutcome:
    kind: Kind
    total: int
    new_bits: tuple = ()
    out_digits: tuple[int, ...] = ()

    @property
    def width_used(self) -> int:
        return len(self.out_digits)

    @property
    def ok(self) -> bool:
        return self.kind is not Kind.CONTRADICTION


@dataclass(frozen=True)
class CarryLedger:
    """Spread-carry digits still in flight plus the equivalent single carry.

    ``window[k]`` lists the digits (i, source column, value) that land on
    column ``column + k``; digit c[i, j] lands on column j + i. ``acc`` is
    the carry into ``column`` in ordinary long-multiplication form.
    """

    column: int = 1
    window: tuple[tuple[tuple[int, int, int], ...], ...] = ()
    acc: int = 0

    def incoming(self, j: Optional[int] = None) -> list[tuple[int, int, int]]:
        """(i, source column, digit) for every digit scheduled into column j."""
        k = (self.column if j is None else j) - self.column
        if k < 0:
            raise ValueError("column already resolved")
        return list(self.window[k]) if k < len(self.window) else []

    def carry_in(self, j: Optional[int] = None) -> int:
        return sum(d for _, _, d in self.incoming(j))

    @property
    def scheduled(self) -> dict[int, list[int]]:
        """Map from destination column to its pending digits."""
        return {self.column + k: [d for _, _, d in w] for k, w in enumerate(self.window) if w}

    def pending_value(self, j: Optional[int] = None) -> int:
        """Value of every digit landing at or after column j, rebased to j."""
        j = self.column if j is None else j
        value = 0
        for k, w in enumerate(self.window):
            shift = self.column + k - j
            if shift >= 0:
                value += sum(d for _, _, d in w) << shift
        return value

    @property
    def empty(self) -> bool:
        return not any(d for w in self.window for _, _, d in w)

    def push(self, outcome: ColumnOutcome, coeff: int, target: int) -> "CarryLedger":
        """Consume the current column and schedule its outgoing digits."""
        j = self.column
        rest = list(self.window[1:])
        for i, d in enumerate(outcome.out_digits, start=1):
            while len(rest) < i:
                rest.append(())
            rest[i - 1] = tuple(sorted(rest[i - 1] + ((i, j, d),)))
        acc = (self.acc + coeff - target) >> 1
        return CarryLedger(j + 1, tuple(rest), acc)


def term_count(m: int, n: int, j: int) -> int:
    """Number of products alpha_a * beta_b with a + b = j."""
    return max(0, min(j, m) - max(0, j - n) + 1)


def coefficient_ops(m: int, n: int, j: int) -> int:
    t = term_count(m, n, j)
    return 2 * t - 1 if t else 0


def column_coefficient(pf: PartialFactors, j: int) -> tuple[int, frozenset[str]]:
    """Known part of the column-j coefficient and the names of its unset bits.

    Products that involve an unset bit are left out of the known part; by
    construction those are alpha_j * beta_0 and alpha_0 * beta_j only.
    """
    m, n = pf.m, pf.n
    if not 1 <= j <= m + n:
        raise IndexError(f"column {j} outside 1..{m + n}")
    known = 0
    unset = set()
    for a in range(max(0, j - n), min(j, m) + 1):
        x, y = pf.a(a), pf.b(j - a)
        if x is None:
            unset.add(f"a{a}")
        if y is None:
            unset.add(f"b{j - a}")
        if x is not None and y is not None:
            known += x * y
    return known, frozenset(unset)


def head_branches(parity_needed: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Assignments (alpha_j, beta_j) whose sum has the required parity."""
    if parity_needed & 1:
        return ((0, 1), (1, 0))
    return ((0, 0), (1, 1))


def forced_bit(parity_needed: int) -> int:
    return parity_needed & 1


def resolve_column(coeff: int, carry_in: int, target: int) -> ColumnOutcome:
    if coeff < 0 or carry_in < 0:
        raise ValueError("coefficient and carry-in must be nonnegative")
    total = coeff + carry_in
    if (total ^ target) & 1:
        return ColumnOutcome(Kind.CONTRADICTION, total)
    v = (total - target) >> 1
    digits = []
    while v:
        digits.append(v & 1)
        v >>= 1
    return ColumnOutcome(Kind.CHECK_OK, total, out_digits=tuple(digits))
