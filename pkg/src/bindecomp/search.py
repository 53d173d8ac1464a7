"""Branch-and-prune over the column equations of one exponent pair, and the
factor / primality drivers built on top of it.

Columns are resolved strictly left to right (least significant first).
Columns j < m introduce alpha_j and beta_j and split into two branches;
columns m <= j < n introduce beta_j alone, which parity forces; the rest
are checks. After column m + n the remaining carry has to equal the bits
of M above position m + n.
"""
from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Callable, Optional, Union

from .bits import NotOdd, OddBinary, TooSmall
from .candidates import ExponentPair, exponent_pairs
from .column_solver import (
    RESOLVE_OPS,
    CarryLedger,
    ColumnOutcome,
    Kind,
    coefficient_ops,
    forced_bit,
    head_branches,
    resolve_column,
)

try:
    from . import _kernel
except ImportError:  # pragma: no cover
    _kernel = None


class InternalInvariant(AssertionError):
    """The accumulated carry and the spread-carry digits disagree."""


@dataclass(frozen=True)
class SystemSpec:
    M: OddBinary
    pair: ExponentPair

    @property
    def m(self) -> int:
        return self.pair.m

    @property
    def n(self) -> int:
        return self.pair.n


@dataclass
class SearchStats:
    branches_opened: int = 0
    leaves: int = 0
    columns_resolved: int = 0
    primitive_ops: int = 0

    def __add__(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(*(getattr(self, f.name) + getattr(other, f.name) for f in fields(self)))

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class ColumnRecord:
    """One resolved column as seen along a single branch (trace mode)."""

    j: int
    phase: str  # head, middle or tail
    new_bits: tuple[tuple[str, int], ...]
    coeff: int
    incoming: tuple[tuple[int, int, int], ...]  # (i, source column, digit)
    target: int
    outcome: ColumnOutcome


@dataclass(frozen=True)
class Leaf:
    pair: ExponentPair
    columns: tuple[ColumnRecord, ...]
    solved: bool
    A: int
    B: int
    residual: int
    reason: str


@dataclass(frozen=True)
class SearchResult:
    verdict: str  # "prime" or "composite"
    A: Optional[int]
    B: Optional[int]
    stats: SearchStats
    witness_pair: Optional[ExponentPair] = None
    systems: tuple[tuple[ExponentPair, SearchStats], ...] = ()

    @property
    def is_prime(self) -> bool:
        return self.verdict == "prime"

    @property
    def pairs_examined(self) -> int:
        return len(self.systems)


def _unwind(path) -> tuple:
    out = []
    while path is not None:
        path, rec = path
        out.append(rec)
    return tuple(reversed(out))


def _check_carry(ledger: CarryLedger, acc: int, j: int, m: int):
    if ledger.acc != acc or ledger.pending_value(j) != acc:
        raise InternalInvariant(
            f"column {j}: accumulated carry {acc} but spread digits hold {ledger.pending_value(j)}"
        )
    if acc > m + 1:
        raise InternalInvariant(f"column {j}: carry {acc} exceeds m + 1 = {m + 1}")


def solve_system(
    spec: SystemSpec,
    *,
    check: bool = False,
    on_leaf: Optional[Callable[[Leaf], Optional[bool]]] = None,
    exhaustive: bool = False,
    compiled: Optional[bool] = None,
) -> tuple[Optional[tuple[int, int]], SearchStats]:
    """Depth-first search of one system; first solution in canonical order.

    ``check`` maintains the spread-carry ledger next to the accumulated
    carry and verifies they agree on every column. ``on_leaf`` (implies
    ``check``) receives every branch terminal with its column records and
    may return True to stop early. With ``exhaustive`` the search keeps
    going after a solution, which is what traces want. ``compiled`` picks
    the machine-word twin of this loop (default: whenever it applies).
    """
    M, m, n = spec.M, spec.m, spec.n
    Mv = M.value
    top = m + n
    residual = Mv >> (top + 1)
    trace = on_leaf is not None
    check = check or trace
    if compiled is None:
        compiled = _kernel is not None and M.N <= _kernel.MAX_BITS
    if compiled and not check:
        hit, a, b, *counts = _kernel.solve_word(Mv, m, n, exhaustive)
        return ((int(a), int(b)) if hit else None), SearchStats(*map(int, counts))
    stats = SearchStats()
    ops = 0
    found: Optional[tuple[int, int]] = None
    col_ops = [coefficient_ops(m, n, c) for c in range(top + 1)]

    # frame: (j, A, B, R, acc, ledger, path, pending choice, known part)
    # R holds beta reversed through column j: bit a is beta_{j-a}.
    stack = [(1, 1 | (1 << m), 1 | (1 << n), 1, 0, CarryLedger() if check else None, None, None, 0)]
    while stack:
        j, A, B, R, acc, ledger, path, choice, known = stack.pop()
        if choice is not None:
            stats.branches_opened += 1
        while True:
            if choice is None:
                if j > top:
                    ops += 1
                    solved = acc == residual
                    if check:
                        _check_carry(ledger, acc, j, m)
                        flush_ok = _flush(ledger, M, j)
                        if flush_ok != solved:
                            raise InternalInvariant(
                                f"residual check {solved} disagrees with carry flush {flush_ok}"
                            )
                    stats.leaves += 1
                    stop = False
                    if solved and found is None:
                        found = (A, B)
                        stop = not exhaustive
                    if trace:
                        reason = "OK" if solved else f"residual {acc} != {residual}"
                        leaf = Leaf(spec.pair, _unwind(path), solved, A, B, acc, reason)
                        stop = bool(on_leaf(leaf)) or stop
                    if stop:
                        stack.clear()
                    break
                R = (R << 1) | (j == n)
                known = (A & R).bit_count()
                ops += col_ops[j]
                if j < m:
                    first, second = head_branches((known + acc + (Mv >> j)) & 1)
                    stack.append((j, A, B, R, acc, ledger, path, second, known))
                    stats.branches_opened += 1
                    choice = first
                elif j < n:
                    choice = (0, forced_bit((known + acc + (Mv >> j)) & 1))
                else:
                    choice = (0, 0)

            a_bit, b_bit = choice
            choice = None
            t = (Mv >> j) & 1
            A |= a_bit << j
            B |= b_bit << j
            R |= b_bit
            coeff = known + a_bit + b_bit
            s = coeff + acc
            stats.columns_resolved += 1
            ops += RESOLVE_OPS
            ok = not ((s ^ t) & 1)
            if check:
                _check_carry(ledger, acc, j, m)
                outcome = resolve_column(coeff, ledger.carry_in(j), t)
                if outcome.ok != ok:
                    raise InternalInvariant(f"column {j}: parity verdicts disagree")
                if trace:
                    phase = "head" if j < m else "middle" if j < n else "tail"
                    bits = ()
                    if j < m:
                        bits = ((f"a{j}", a_bit), (f"b{j}", b_bit))
                        outcome = replace(outcome, kind=Kind.BRANCH, new_bits=bits)
                    elif j < n:
                        bits = ((f"b{j}", b_bit),)
                        outcome = replace(outcome, kind=Kind.FORCED, new_bits=bits)
                    rec = ColumnRecord(j, phase, bits, coeff, tuple(ledger.incoming(j)), t, outcome)
                    path = (path, rec)
                if ok:
                    ledger = ledger.push(outcome, coeff, t)
            if not ok:
                stats.leaves += 1
                if trace:
                    leaf = Leaf(spec.pair, _unwind(path), False, A, B, acc, f"column {j} sum {s} is odd")
                    if on_leaf(leaf):
                        stack.clear()
                break
            acc = (s - t) >> 1
            j += 1

    stats.primitive_ops = ops
    return found, stats


def _flush(ledger: CarryLedger, M: OddBinary, j: int) -> bool:
    """Resolve the empty columns past m + n against the high bits of M."""
    while j <= M.N or not ledger.empty:
        t = M.bit(j)
        outcome = resolve_column(0, ledger.carry_in(j), t)
        if not outcome.ok:
            return False
        ledger = ledger.push(outcome, 0, t)
        j += 1
    return True


def _as_odd(M: Union[int, OddBinary]) -> OddBinary:
    return M if isinstance(M, OddBinary) else OddBinary.from_int(M)


def factor_once(M: Union[int, OddBinary], *, check: bool = False) -> SearchResult:
    """Split M into two odd factors, or report it prime."""
    M = _as_odd(M)
    total = SearchStats()
    systems = []
    for pair in exponent_pairs(M):
        hit, stats = solve_system(SystemSpec(M, pair), check=check)
        total = total + stats
        systems.append((pair, stats))
        if hit is not None:
            A, B = sorted(hit)
            if A * B != M.value:
                raise InternalInvariant(f"{A} * {B} != {M.value}")
            return SearchResult("composite", A, B, total, pair, tuple(systems))
    return SearchResult("prime", None, None, total, None, tuple(systems))


def decide_prime(M: Union[int, OddBinary]) -> bool:
    return factor_once(M).is_prime


def factor_completely(M: Union[int, OddBinary]) -> list[int]:
    """Prime factors of odd M >= 3 in ascending order, with multiplicity."""
    if isinstance(M, int) and not isinstance(M, bool):
        if M < 3:
            raise TooSmall(f"{M} is smaller than 3")
        if M % 2 == 0:
            raise NotOdd(f"{M} is even")
    primes = []
    todo = [_as_odd(M).value]
    while todo:
        x = todo.pop()
        r = factor_once(x)
        if r.is_prime:
            primes.append(x)
        else:
            todo += [r.A, r.B]
    return sorted(primes)
