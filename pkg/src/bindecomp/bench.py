"""Operation counts of factor_once over ranges of odd integers.

Counting model: every integer addition, subtraction, multiplication,
division, parity test and shift performed while forming a column
coefficient, resolving a column or updating the carry counts as one
operation. Converting M to binary is not counted as N divisions; the
bit extraction is a shift per column and is already in the tally.

Two bounds are attached to every row. The count bound
2 N^2 (2^[N/2] + 2^[(N-1)/2] - 2) + N is asserted by the test suite; the
closed form 4 (sqrt(M) - 1) (log2 M)^2 + log2 M is reported only, since it
rests on a per-equation accounting that is not pinned down.
"""
from __future__ import annotations

import csv
import io
import math
import time
from dataclasses import astuple, dataclass
from typing import Iterable, Optional, TextIO, Union

from .bits import OddBinary
from .search import factor_once

CSV_HEADER = ["M", "N", "pairs", "branches", "columns", "ops", "paper_bound", "verdict", "A", "B", "micros"]


def paper_bound(M: int) -> float:
    if M < 3:
        raise ValueError("M must be at least 3")
    lg = math.log2(M)
    return 4 * (math.sqrt(M) - 1) * lg * lg + lg


def count_bound(N: int) -> int:
    return 2 * N * N * (2 ** (N // 2) + 2 ** ((N - 1) // 2) - 2) + N


@dataclass
class BenchRow:
    M: int
    N: int
    pairs_examined: int
    branches: int
    columns_resolved: int
    primitive_ops: int
    paper_bound: float
    verdict: str
    A: Optional[int]
    B: Optional[int]
    wall_micros: int

    @property
    def within_count_bound(self) -> bool:
        return self.primitive_ops <= count_bound(self.N)

    @property
    def within_paper_bound(self) -> bool:
        return self.primitive_ops <= self.paper_bound

    def csv_fields(self) -> list[str]:
        out = []
        for v in astuple(self):
            if v is None:
                out.append("")
            elif isinstance(v, float):
                out.append(f"{v:.3f}")
            else:
                out.append(str(v))
        return out


def bench_one(M: int, check: bool = False) -> BenchRow:
    b = OddBinary.from_int(M)
    t0 = time.perf_counter()
    r = factor_once(b, check=check)
    micros = int((time.perf_counter() - t0) * 1e6)
    s = r.stats
    return BenchRow(M, b.N, r.pairs_examined, s.branches_opened, s.columns_resolved,
                    s.primitive_ops, paper_bound(M), r.verdict, r.A, r.B, micros)


def odd_range(lo: int, hi: int) -> range:
    if lo < 3 or hi < lo:
        raise ValueError(f"need 3 <= lo <= hi, got {lo}..{hi}")
    return range(lo | 1, hi + 1, 2)


def write_csv(rows: Iterable[BenchRow], sink: TextIO):
    w = csv.writer(sink, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow(row.csv_fields())


def read_csv(source: Union[str, TextIO]) -> list[BenchRow]:
    f = open(source, newline="", encoding="utf-8") if isinstance(source, str) else source
    with f:
        reader = csv.reader(f)
        if next(reader) != CSV_HEADER:
            raise ValueError("unexpected bench CSV header")
        rows = []
        for rec in reader:
            M, N, pairs, br, cols, ops, pb, verdict, A, B, us = rec
            rows.append(BenchRow(int(M), int(N), int(pairs), int(br), int(cols), int(ops), float(pb),
                                 verdict, int(A) if A else None, int(B) if B else None, int(us)))
    return rows


def run_bench(lo: int, hi: int, sink: Union[None, str, TextIO] = None, check: bool = False) -> list[BenchRow]:
    """One row per odd M in [lo, hi], written as CSV to ``sink`` when given."""
    factor_once(9, check=check)  # load the compiled kernel before timing anything
    rows = [bench_one(M, check) for M in odd_range(lo, hi)]
    if isinstance(sink, str):
        with open(sink, "w", newline="", encoding="utf-8") as f:
            write_csv(rows, f)
    elif sink is not None:
        write_csv(rows, sink)
    return rows


def summarize(rows: list[BenchRow]) -> dict:
    n = len(rows)
    within_count = sum(r.within_count_bound for r in rows)
    within_closed = sum(r.within_paper_bound for r in rows)
    return {
        "rows": n,
        "prime": sum(r.verdict == "prime" for r in rows),
        "composite": sum(r.verdict == "composite" for r in rows),
        "within_count_bound": within_count,
        "within_closed_form": within_closed,
        "closed_form_rate": within_closed / n if n else 1.0,
        "max_ops": max((r.primitive_ops for r in rows), default=0),
    }


def csv_text(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
