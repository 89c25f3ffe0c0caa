"""numba @njit implementations of the hot kernels.

Loop-level twins of `numpy_impl`; output arrays are bit-identical to
the numpy path for identical inputs.  int64 only.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True)
def sieve_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=np.bool_)
    flags[0] = False
    flags[1] = False
    p = 2
    while p * p <= limit:
        if flags[p]:
            for q in range(p * p, limit + 1, p):
                flags[q] = False
        p += 1
    count = 0
    for k in range(limit + 1):
        if flags[k]:
            count += 1
    out = np.empty(count, dtype=np.int64)
    idx = 0
    for k in range(limit + 1):
        if flags[k]:
            out[idx] = k
            idx += 1
    return out


@njit(cache=True)
def sat_first_witness(
    lit_var: np.ndarray, lit_pos: np.ndarray, n: int, mode: int
) -> int:
    m = lit_var.shape[0]
    total = 1 << n
    for k in range(total):
        ok = True
        ref = -1
        for j in range(m):
            c = 0
            for t in range(3):
                bit = (k >> lit_var[j, t]) & 1
                if bit == lit_pos[j, t]:
                    c += 1
            if mode == 0:
                if c < 1:
                    ok = False
                    break
            elif mode == 1:
                if c != 1:
                    ok = False
                    break
            else:
                if j == 0:
                    ref = c
                elif c != ref:
                    ok = False
                    break
        if ok:
            return k
    return -1


@njit(cache=True)
def subset_sum01_table(weights: np.ndarray, target: int) -> np.ndarray:
    n = weights.shape[0]
    reach = np.zeros((n + 1, target + 1), dtype=np.bool_)
    reach[0, 0] = True
    for i in range(1, n + 1):
        w = weights[i - 1]
        for t in range(target + 1):
            r = reach[i - 1, t]
            if not r and 0 < w <= t:
                r = reach[i - 1, t - w]
            reach[i, t] = r
    return reach


@njit(cache=True)
def unbounded_reach(weights: np.ndarray, target: int) -> np.ndarray:
    # Ascending scan instead of numpy's shift-doubling; the resulting
    # reach set is identical (exact reachability either way).
    n = weights.shape[0]
    reach = np.zeros(target + 1, dtype=np.bool_)
    reach[0] = True
    for t in range(1, target + 1):
        for i in range(n):
            w = weights[i]
            if w <= t and reach[t - w]:
                reach[t] = True
                break
    return reach


@njit(cache=True)
def knapsack01_dp(
    weights: np.ndarray, profits: np.ndarray, cap: int
) -> tuple[np.ndarray, np.ndarray]:
    n = weights.shape[0]
    take = np.zeros((n, cap + 1), dtype=np.bool_)
    prev = np.zeros(cap + 1, dtype=np.int64)
    cur = np.zeros(cap + 1, dtype=np.int64)
    for i in range(n):
        w = weights[i]
        v = profits[i]
        for c in range(cap + 1):
            best = prev[c]
            if w <= c:
                cand = prev[c - w] + v
                if cand > best:
                    best = cand
                    take[i, c] = True
            cur[c] = best
        prev, cur = cur, prev
    return prev.copy(), take
