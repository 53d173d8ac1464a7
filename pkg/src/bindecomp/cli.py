"""Command-line front end: factor, is-prime, trace, export, bench."""
from __future__ import annotations

import argparse
import json
import sys
from enum import IntEnum

from .bench import run_bench, summarize
from .bits import BitsError, parse_odd
from .candidates import ExponentPair, exponent_pairs
from .search import InternalInvariant, SystemSpec, decide_prime, factor_completely, factor_once
from .sysexport import WidthSource, export_system
from .trace import DEFAULT_LINE_LIMIT, trace_lines


class Exit(IntEnum):
    OK = 0
    BAD_INPUT = 1
    INVARIANT = 2
    COMPOSITE = 3


class UsageError(ValueError):
    pass


def _pair_arg(text: str) -> tuple[int, int]:
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n but got {text!r}")
    return m, n


def _range_arg(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x, 0) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi but got {text!r}")
    return lo, hi


def _find_pair(M, mn: tuple[int, int]) -> ExponentPair:
    for pair in exponent_pairs(M):
        if (pair.m, pair.n) == mn:
            return pair
    valid = " ".join(str(p) for p in exponent_pairs(M)) or "none"
    raise UsageError(f"({mn[0]},{mn[1]}) is not a candidate pair for {M.value}; candidates: {valid}")


def cmd_factor(args, out) -> int:
    M = parse_odd(args.M)
    if args.complete:
        primes = factor_completely(M)
        r = None
    else:
        r = factor_once(M)
        primes = [M.value] if r.is_prime else [r.A, r.B]
    verdict = "prime" if len(primes) == 1 else "composite"
    if args.json:
        doc = {"M": M.value, "verdict": verdict, "factors": primes}
        if r is not None:
            doc["stats"] = r.stats.as_dict()
            doc["pairs_examined"] = r.pairs_examined
            doc["pair"] = str(r.witness_pair) if r.witness_pair else None
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    elif verdict == "prime":
        out.write(f"{M.value} is prime\n")
    else:
        out.write(f"{M.value} = {' × '.join(map(str, primes))}\n")
    return Exit.OK


def cmd_is_prime(args, out) -> int:
    M = parse_odd(args.M)
    prime = decide_prime(M)
    out.write(f"{M.value} is {'prime' if prime else 'composite'}\n")
    return Exit.OK if prime else Exit.COMPOSITE


def cmd_trace(args, out) -> int:
    M = parse_odd(args.M)
    spec = SystemSpec(M, _find_pair(M, args.pair))
    limit = None if args.no_limit else DEFAULT_LINE_LIMIT
    for line in trace_lines(spec, limit):
        out.write(line + "\n")
    return Exit.OK


def cmd_export(args, out) -> int:
    M = parse_odd(args.M)
    spec = SystemSpec(M, _find_pair(M, args.pair))
    out.write(export_system(spec, WidthSource(args.widths)))
    return Exit.OK


def cmd_bench(args, out) -> int:
    lo, hi = args.odd_range
    if lo < 3 or hi < lo:
        raise UsageError(f"need 3 <= lo <= hi, got {lo}:{hi}")
    rows = run_bench(lo, hi, args.csv)
    s = summarize(rows)
    print(
        f"{s['rows']} rows ({s['prime']} prime, {s['composite']} composite); "
        f"count bound held on {s['within_count_bound']}/{s['rows']}; "
        f"closed form held on {s['within_closed_form']}/{s['rows']} ({s['closed_form_rate']:.1%})",
        file=sys.stderr,
    )
    if args.plot:
        from .report import plot_ops

        plot_ops(rows, args.plot)
    return Exit.OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bindecomp", description="Factor odd integers by binary column equations.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("factor", help="split M into two factors, or report it prime")
    f.add_argument("M")
    f.add_argument("--complete", action="store_true", help="print the full prime factorization")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_factor)

    ip = sub.add_parser("is-prime", help="exit 0 if M is prime, 3 if composite")
    ip.add_argument("M")
    ip.set_defaults(func=cmd_is_prime)

    t = sub.add_parser("trace", help="every branch of one system, column by column")
    t.add_argument("M")
    t.add_argument("--pair", type=_pair_arg, required=True, metavar="m,n")
    t.add_argument("--no-limit", action="store_true", help=f"do not stop after {DEFAULT_LINE_LIMIT} lines")
    t.set_defaults(func=cmd_trace)

    e = sub.add_parser("export", help="column equations of one system")
    e.add_argument("M")
    e.add_argument("--pair", type=_pair_arg, required=True, metavar="m,n")
    e.add_argument("--widths", choices=[w.value for w in WidthSource], default=WidthSource.MAXSUM.value)
    e.set_defaults(func=cmd_export)

    b = sub.add_parser("bench", help="operation counts over a range of odd M")
    b.add_argument("--odd-range", type=_range_arg, required=True, metavar="lo:hi")
    b.add_argument("--csv", required=True, metavar="FILE")
    b.add_argument("--plot", metavar="FILE", help="also render ops against M to an image")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return int(args.func(args, out))
    except (BitsError, UsageError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return Exit.BAD_INPUT
    except InternalInvariant as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return Exit.INVARIANT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return Exit.BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
