"""Compiled twin of the plain search loop in ``search.solve_system``.

Used only when no carry checking or tracing is requested and M fits in a
machine word. It walks the same branches in the same order and returns the
same counters; tests compare the two over whole ranges.
"""
import numpy as np
from numba import njit

MAX_BITS = 61


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def solve_word(Mv, m, n, exhaustive):
    top = m + n
    residual = Mv >> (top + 1)
    depth = m + 1
    sj = np.zeros(depth, np.int64)
    sA = np.zeros(depth, np.int64)
    sB = np.zeros(depth, np.int64)
    sR = np.zeros(depth, np.int64)
    sacc = np.zeros(depth, np.int64)
    sa = np.zeros(depth, np.int64)
    sb = np.zeros(depth, np.int64)
    sknown = np.zeros(depth, np.int64)

    branches = 0
    leaves = 0
    columns = 0
    ops = 0
    found = False
    fA = 0
    fB = 0

    sp = 0
    sj[0] = 1
    sA[0] = 1 | (1 << m)
    sB[0] = 1 | (1 << n)
    sR[0] = 1
    sacc[0] = 0
    sa[0] = -1
    sp = 1
    while sp > 0:
        sp -= 1
        j = sj[sp]
        A = sA[sp]
        B = sB[sp]
        R = sR[sp]
        acc = sacc[sp]
        a_bit = sa[sp]
        b_bit = sb[sp]
        known = sknown[sp]
        have = a_bit >= 0
        if have:
            branches += 1
        while True:
            if not have:
                if j > top:
                    ops += 1
                    leaves += 1
                    if acc == residual and not found:
                        found = True
                        fA = A
                        fB = B
                        if not exhaustive:
                            sp = 0
                    break
                R = (R << 1) | (1 if j == n else 0)
                known = _popcount(A & R)
                lo = j - n if j > n else 0
                hi = j if j < m else m
                t_terms = hi - lo + 1
                if t_terms > 0:
                    ops += 2 * t_terms - 1
                p = (known + acc + (Mv >> j)) & 1
                if j < m:
                    # push the second alternative, walk the first
                    sj[sp] = j
                    sA[sp] = A
                    sB[sp] = B
                    sR[sp] = R
                    sacc[sp] = acc
                    sknown[sp] = known
                    if p:
                        sa[sp] = 1
                        sb[sp] = 0
                        a_bit = 0
                        b_bit = 1
                    else:
                        sa[sp] = 1
                        sb[sp] = 1
                        a_bit = 0
                        b_bit = 0
                    sp += 1
                    branches += 1
                elif j < n:
                    a_bit = 0
                    b_bit = p
                else:
                    a_bit = 0
                    b_bit = 0
            have = False
            t = (Mv >> j) & 1
            A |= a_bit << j
            B |= b_bit << j
            R |= b_bit
            s = known + a_bit + b_bit + acc
            columns += 1
            ops += 4
            if (s ^ t) & 1:
                leaves += 1
                break
            acc = (s - t) >> 1
            j += 1
    return found, fA, fB, branches, leaves, columns, ops
