"""Factoring and primality of odd integers by binary column equations."""
from .bits import BitsError, Malformed, NotOdd, OddBinary, TooSmall, UndecidedBit, parse_odd, to_integer
from .candidates import ExponentPair, SumKind, exponent_pairs
from .search import (
    InternalInvariant,
    SearchResult,
    SearchStats,
    SystemSpec,
    decide_prime,
    factor_completely,
    factor_once,
    solve_system,
)

__all__ = [
    "BitsError", "Malformed", "NotOdd", "OddBinary", "TooSmall", "UndecidedBit", "parse_odd", "to_integer",
    "ExponentPair", "SumKind", "exponent_pairs",
    "InternalInvariant", "SearchResult", "SearchStats", "SystemSpec",
    "decide_prime", "factor_completely", "factor_once", "solve_system",
]
__version__ = "0.1.0"
