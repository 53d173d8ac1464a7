"""Slow, independent ground truth for the search.

Neither function shares code with the column machinery: trial division
works on integers directly and the exhaustive solver multiplies every
candidate factor pair of the right bit lengths.
"""
from __future__ import annotations

from itertools import product
from math import isqrt
from typing import Optional

from .bits import factor_value
from .search import SystemSpec


class TooLarge(ValueError):
    pass


def trial_division(M: int) -> Optional[tuple[int, int]]:
    """(p, M // p) for the smallest odd divisor p > 1 below M, or None if M is prime."""
    for p in range(3, isqrt(M) + 1, 2):
        if M % p == 0:
            return p, M // p
    return None


def exhaustive_system_solve(spec: SystemSpec, limit: int = 24) -> set[tuple[int, int]]:
    m, n = spec.m, spec.n
    if m + n > limit:
        raise TooLarge(f"m + n = {m + n} exceeds the enumeration guard {limit}")
    M = spec.M.value
    hits = set()
    betas = [factor_value(n, bits) for bits in product((0, 1), repeat=n - 1)]
    for bits in product((0, 1), repeat=m - 1):
        a = factor_value(m, bits)
        for b in betas:
            if a * b == M:
                hits.add((a, b))
    return hits
