"""Human-readable per-branch column traces of one system."""
from __future__ import annotations

from typing import Iterator, Optional

from .search import ColumnRecord, Leaf, SystemSpec, solve_system
from .sysexport import carry_name, column_terms

DEFAULT_LINE_LIMIT = 10_000


def _column_line(spec: SystemSpec, rec: ColumnRecord, A: int, B: int) -> str:
    m, n, j = spec.m, spec.n, rec.j
    symbols = column_terms(spec, j) + [carry_name(i, src) for i, src, _ in rec.incoming]
    values = [((A >> a) & 1) & ((B >> (j - a)) & 1) for a in range(max(0, j - n), min(j, m) + 1)]
    values += [d for _, _, d in rec.incoming]
    total = rec.outcome.total
    parts = [
        f"  col {j} {rec.phase}: {' + '.join(symbols)} = {'+'.join(map(str, values))} = {total}",
        f"g{j}={rec.target}",
    ]
    if rec.new_bits:
        parts.append("set " + " ".join(f"{name}={v}" for name, v in rec.new_bits))
    if rec.outcome.ok:
        digits = rec.outcome.out_digits
        parts.append("out " + (" ".join(f"{carry_name(i, j)}={d}" for i, d in enumerate(digits, 1)) or "-"))
        parts.append("OK")
    else:
        parts.append("PRUNE")
    return "  ".join(parts)


def _leaf_lines(spec: SystemSpec, index: int, leaf: Leaf) -> list[str]:
    head = [b for rec in leaf.columns if rec.phase == "head" for b in rec.new_bits]
    choices = " ".join(f"{name}={v}" for name, v in head) or "no head choices"
    lines = [f"branch {index} {spec.pair}: {choices}"]
    lines += [_column_line(spec, rec, leaf.A, leaf.B) for rec in leaf.columns]
    if leaf.solved:
        lines.append(f"  OK A={leaf.A} B={leaf.B}")
    else:
        lines.append(f"  PRUNE {leaf.reason}")
    return lines


def trace_lines(spec: SystemSpec, limit: Optional[int] = DEFAULT_LINE_LIMIT) -> Iterator[str]:
    """Every branch of the system in canonical order, then the verdict."""
    yield f"trace: M={spec.M.value} N={spec.M.N} m={spec.m} n={spec.n} sum={spec.pair.sum_kind.value}"
    out: list[str] = []
    truncated = False
    count = 0

    def on_leaf(leaf: Leaf) -> bool:
        nonlocal truncated, count
        count += 1
        out.extend(_leaf_lines(spec, count, leaf))
        if limit is not None and len(out) >= limit:
            truncated = True
            return True
        return False

    found, stats = solve_system(spec, on_leaf=on_leaf, exhaustive=True)
    if truncated:
        out = out[:limit]
    yield from out
    if truncated:
        yield f"... output truncated at {limit} lines (use --no-limit)"
        return
    yield f"branches={stats.branches_opened} leaves={stats.leaves} columns={stats.columns_resolved} ops={stats.primitive_ops}"
    if found is None:
        yield "NO SOLUTION"
    else:
        yield f"SOLUTION A={found[0]} B={found[1]}"
