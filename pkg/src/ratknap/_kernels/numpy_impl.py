"""Vectorized numpy implementations of the hot kernels.

Every function here has a numba twin in `numba_impl`; the two must
return identical arrays for identical inputs (tested).  All integer
inputs are int64-safe by the time they reach a kernel; callers enforce
the magnitude guards.  `knapsack01_dp` additionally accepts an object
dtype profit array for exact arithmetic beyond int64.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"

_CHUNK = 1 << 14


def sieve_primes(limit: int) -> np.ndarray:
    """All primes <= limit, ascending, as an int64 array."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def sat_first_witness(
    lit_var: np.ndarray, lit_pos: np.ndarray, n: int, mode: int
) -> int:
    """Index of the first valuation (binary counting order) passing `mode`.

    Valuation k assigns variable i the bit (k >> i) & 1 with 0-based i.
    mode: 0 = every clause count >= 1, 1 = every count == 1,
    2 = all counts equal.  Returns -1 when no valuation qualifies.
    """
    total = 1 << n
    var_flat = lit_var.ravel()
    pos_flat = lit_pos.ravel().astype(np.uint8)
    m = lit_var.shape[0]
    for start in range(0, total, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = ((ks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.uint8)
        truth = bits[:, var_flat] == pos_flat
        counts = truth.reshape(len(ks), m, 3).sum(axis=2, dtype=np.int8)
        if mode == 0:
            ok = (counts >= 1).all(axis=1)
        elif mode == 1:
            ok = (counts == 1).all(axis=1)
        else:
            ok = (counts == counts[:, :1]).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(ks[hits[0]])
    return -1


def subset_sum01_table(weights: np.ndarray, target: int) -> np.ndarray:
    """Reachability table: row i = sums achievable with the first i items."""
    n = len(weights)
    reach = np.zeros((n + 1, target + 1), dtype=bool)
    reach[0, 0] = True
    for i in range(1, n + 1):
        w = int(weights[i - 1])
        prev = reach[i - 1]
        row = reach[i]
        row[:] = prev
        if 0 < w <= target:
            row[w:] |= prev[: target + 1 - w]
    return reach


def unbounded_reach(weights: np.ndarray, target: int) -> np.ndarray:
    """Sums achievable with unlimited copies of each item (weights >= 1)."""
    reach = np.zeros(target + 1, dtype=bool)
    reach[0] = True
    for w in weights:
        # Doubling closure: after shifts w, 2w, 4w, ... every multiple
        # k*w with k*w <= target has been folded in.
        s = int(w)
        while s <= target:
            reach[s:] |= reach[: target + 1 - s]
            s *= 2
    return reach


def knapsack01_dp(
    weights: np.ndarray, profits: np.ndarray, cap: int
) -> tuple[np.ndarray, np.ndarray]:
    """Max-profit table over capacities 0..cap plus the take decisions.

    take[i, c] is True when item i strictly improves the best profit at
    capacity c; ties keep the item out, which biases backtracking toward
    low item indices.
    """
    n = len(weights)
    take = np.zeros((n, cap + 1), dtype=bool)
    prev = np.zeros(cap + 1, dtype=profits.dtype)
    for i in range(n):
        w = int(weights[i])
        v = profits[i]
        cur = prev.copy()
        if w <= cap:
            cand = prev[: cap + 1 - w] + v
            better = cand > prev[w:]
            cur[w:] = np.where(better, cand, prev[w:])
            take[i, w:] = better
        prev = cur
    return prev, take
