"""Symbolic export of the column equations of one exponent pair.

Each line is one column equation with named carry digits c[i, j] (digit i
of column j's overflow, landing on column j + i). The number of carry
digits per column comes from a DigitPlan: either the smallest width that
holds the largest possible column sum (``maxsum``), or the widths the
F4 worked example prints (``paper``), which follow the dyadic ranges
2^k <= j < 2^(k+1) - k - 1 (k digits) and the rest of the block (k + 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .column_solver import term_count
from .search import SystemSpec


class WidthSource(str, Enum):
    MAXSUM = "maxsum"
    PAPER_RANGES = "paper"


def range_width(j: int) -> int:
    """Carry digits given to head column j by the dyadic ranges."""
    if j < 1:
        return 0
    k = j.bit_length() - 1
    return k if j < (1 << (k + 1)) - k - 1 else k + 1


@dataclass(frozen=True)
class DigitPlan:
    spec: SystemSpec
    source: WidthSource
    widths: tuple[int, ...]  # widths[j] = h_j; widths[0] is unused

    @property
    def k0(self) -> int:
        return self.spec.pair.k0

    @property
    def last(self) -> int:
        return len(self.widths) - 1

    @property
    def ranges(self) -> dict[str, range]:
        m, n = self.spec.m, self.spec.n
        return {
            "head": range(1, m),
            "middle": range(m, n),
            "tail": range(n, m + n + 1),
            "flush": range(m + n + 1, self.last + 1),
        }

    def incoming(self, j: int) -> list[tuple[int, int]]:
        """(i, source column) of every carry digit that lands on column j."""
        return [(i, j - i) for i in range(1, j) if self.widths[j - i] >= i]

    def max_sum(self, j: int) -> int:
        return term_count(self.spec.m, self.spec.n, j) + len(self.incoming(j))


def _bits_for(max_sum: int) -> int:
    # smallest h with 1 + 2 + ... + 2^h >= max_sum
    return max(0, max_sum.bit_length() - 1)


def digit_plan(spec: SystemSpec, source: WidthSource = WidthSource.MAXSUM) -> DigitPlan:
    m, n, N = spec.m, spec.n, spec.M.N
    top = m + n
    widths = [0]
    if source is WidthSource.MAXSUM:
        j = 1
        while True:
            landing = sum(1 for i in range(1, j) if widths[j - i] >= i)
            if j > max(top, N) and landing == 0:
                break
            widths.append(_bits_for(term_count(m, n, j) + landing))
            j += 1
    else:
        # digits may land on column top + 1 only when that is the top bit of M
        limit = top + 1 if top == N - 1 else top - 1
        for j in range(1, max(top, N) + 1):
            landing = sum(1 for i in range(1, j) if widths[j - i] >= i)
            need = _bits_for(term_count(m, n, j) + landing)
            h = 1 if j == 1 else min(range_width(j), max(need, 2))
            widths.append(max(0, min(h, limit - j)))
    return DigitPlan(spec, WidthSource(source), tuple(widths))


def _term(a: int, b: int, m: int, n: int) -> str:
    x = None if a in (0, m) else f"a{a}"
    y = None if b in (0, n) else f"b{b}"
    if x and y:
        return f"{x}*{y}"
    return x or y or "1"


def column_terms(spec: SystemSpec, j: int) -> list[str]:
    """Left-hand product terms of column j, ascending in the alpha index."""
    m, n = spec.m, spec.n
    return [_term(a, j - a, m, n) for a in range(max(0, j - n), min(j, m) + 1)]


def carry_name(i: int, j: int) -> str:
    return f"c[{i},{j}]"


def equation(plan: DigitPlan, j: int) -> str:
    lhs = column_terms(plan.spec, j) + [carry_name(i, src) for i, src in plan.incoming(j)]
    rhs = [f"g{j}"] + [f"2^{i}*{carry_name(i, j)}" for i in range(1, plan.widths[j] + 1)]
    return f"col {j}: {' + '.join(lhs) or '0'} = {' + '.join(rhs)}"


def export_system(spec: SystemSpec, plan_source: WidthSource = WidthSource.MAXSUM) -> str:
    plan = digit_plan(spec, WidthSource(plan_source))
    m, n = spec.m, spec.n
    names = [f"a{i}" for i in range(1, m)] + [f"b{j}" for j in range(1, n)]
    names += [carry_name(i, j) for j in range(1, plan.last + 1) for i in range(1, plan.widths[j] + 1)]
    lines = [
        f"system: M={spec.M.value} m={m} n={n}",
        f"plan: {plan.source.value} k0={plan.k0}",
        "digits: " + " ".join(f"g{j}={spec.M.bit(j)}" for j in range(1, plan.last + 1)),
        "vars: " + " ".join(names),
    ]
    lines += [equation(plan, j) for j in range(1, plan.last + 1)]
    return "\n".join(lines) + "\n"


def width_discrepancies(spec: SystemSpec) -> list[tuple[int, int, int]]:
    """(column, max-sum width, printed-range width) wherever the two differ."""
    sound = digit_plan(spec, WidthSource.MAXSUM)
    paper = digit_plan(spec, WidthSource.PAPER_RANGES)
    last = max(sound.last, paper.last)
    pad = lambda w: w + (0,) * (last + 1 - len(w))
    return [(j, a, b) for j, (a, b) in enumerate(zip(pad(sound.widths), pad(paper.widths))) if j and a != b]
