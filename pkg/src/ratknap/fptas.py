"""Approximation scheme for 0-1 knapsack with rational coefficients.

Clearing denominators with the least common multiple turns a rational
instance into an integer one whose optimum is the same up to that
factor, so any integer scheme carries over.  The integer scheme used
here is classic profit scaling: profits are floored to
v_i * n / (rho * v_max), a minimum-weight table is filled over scaled
profit totals, and the best scaled profit whose weight fits is
returned.  The result is a feasible subset with profit at least
(1 - rho) times the optimum, in time polynomial in the input size and
1/rho.  All arithmetic is exact; rho itself is a rational.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm

from .errors import ParameterError, ResourceLimitError, ShapeError
from .instances import Instance, ProblemKind, Witness

DEFAULT_ENUM_ITEMS = 20
DEFAULT_OPT_DP_CELLS = 10**8


@dataclass(frozen=True)
class ApproxResult:
    """A feasible subset, its exact profit, and the scaling factor used."""

    subset: Witness
    achieved_profit: Fraction
    alpha: int
    elapsed_s: float = 0.0


def _scaled_ints(inst: Instance) -> tuple[list[int], list[int], int, int]:
    vals = list(inst.weights) + list(inst.profits) + [inst.capacity]
    alpha = lcm(*(v.denominator for v in vals))
    sw = [int(w * alpha) for w in inst.weights]
    sv = [int(v * alpha) for v in inst.profits]
    return sw, sv, int(inst.capacity * alpha), alpha


def _require_knapsack01(inst: Instance) -> None:
    if inst.kind is not ProblemKind.KNAPSACK_01:
        raise ShapeError(f"expected a knapsack-01 instance, got {inst.kind.value}")


def _min_weight_per_profit(
    weights: list[int], profits: list[int], cap: int
) -> list[int]:
    """0/1 picks maximizing total profit subject to total weight <= cap.

    `profits` are small scaled integers; `weights` are exact integers of
    any magnitude.  Table over profit totals, minimizing weight; ties
    prefer leaving later items out.
    """
    n = len(weights)
    total_profit = sum(profits)
    # Sentinel above both every achievable weight and the capacity, so
    # "omega[q] <= cap" is exactly reachability-and-fit.
    infinity = max(sum(weights), cap) + 1
    omega = [0] + [infinity] * total_profit
    take = [[False] * (total_profit + 1) for _ in range(n)]
    for i in range(n):
        p, w = profits[i], weights[i]
        if p == 0:
            continue  # adds weight, no scaled profit: never improves
        prev = omega
        omega = prev[:]
        for q in range(p, total_profit + 1):
            cand = prev[q - p] + w
            if cand < omega[q]:
                omega[q] = cand
                take[i][q] = True
    best = max(q for q in range(total_profit + 1) if omega[q] <= cap)
    picks = [0] * n
    q = best
    for i in range(n - 1, -1, -1):
        if take[i][q]:
            picks[i] = 1
            q -= profits[i]
    return picks


def knapsack_fptas(inst: Instance, rho: Fraction) -> ApproxResult:
    """Feasible subset with profit >= (1 - rho) * OPT, exactly.

    rho must lie strictly between 0 and 1.  Items heavier than the
    capacity are dropped up front; the empty subset is returned when
    nothing fits or all profits are zero.
    """
    t0 = time.perf_counter()
    _require_knapsack01(inst)
    if not 0 < rho < 1:
        raise ParameterError(f"rho must be in (0, 1), got {rho}")
    n_all = inst.size
    if n_all == 0:
        return ApproxResult((), Fraction(0), 1, time.perf_counter() - t0)
    sw, sv, cap, alpha = _scaled_ints(inst)
    kept = [k for k in range(n_all) if sw[k] <= cap]
    empty = ApproxResult(
        (0,) * n_all, Fraction(0), alpha, time.perf_counter() - t0
    )
    if not kept:
        return empty
    v_max = max(sv[k] for k in kept)
    if v_max == 0:
        return empty
    n = len(kept)
    # floor(v_i * n / (rho * v_max)); exact because rho is rational and
    # the alpha factors cancel between v_i and v_max.
    scaled = [floor(Fraction(sv[k] * n, v_max) / rho) for k in kept]
    picks = _min_weight_per_profit([sw[k] for k in kept], scaled, cap)
    subset = [0] * n_all
    for i, k in enumerate(kept):
        subset[k] = picks[i]
    achieved = sum(
        (inst.profits[k] for k in range(n_all) if subset[k]), Fraction(0)
    )
    return ApproxResult(tuple(subset), achieved, alpha, time.perf_counter() - t0)


def knapsack_fptas_table_cells(inst: Instance, rho: Fraction) -> int:
    """Profit-table cell count the scheme would fill; a runtime proxy."""
    _require_knapsack01(inst)
    if not 0 < rho < 1:
        raise ParameterError(f"rho must be in (0, 1), got {rho}")
    if inst.size == 0:
        return 0
    sw, sv, cap, _ = _scaled_ints(inst)
    kept = [k for k in range(inst.size) if sw[k] <= cap]
    if not kept:
        return 0
    v_max = max(sv[k] for k in kept)
    if v_max == 0:
        return 0
    n = len(kept)
    total = sum(floor(Fraction(sv[k] * n, v_max) / rho) for k in kept)
    return n * (total + 1)


def knapsack_opt_exact(
    inst: Instance,
    max_enum_items: int = DEFAULT_ENUM_ITEMS,
    max_dp_cells: int = DEFAULT_OPT_DP_CELLS,
) -> Fraction:
    """Exact optimum profit; the oracle the scheme is measured against.

    Small instances are settled by walking all subsets; larger ones fall
    back to an exact profit table when the scaled profits stay within
    the cell budget.
    """
    _require_knapsack01(inst)
    if inst.size == 0:
        return Fraction(0)
    sw, sv, cap, alpha = _scaled_ints(inst)
    n = len(sw)
    if n <= max_enum_items:
        best = 0
        mask = wsum = psum = 0
        for k in range(1, 1 << n):
            bit = (k & -k).bit_length() - 1
            mask ^= 1 << bit
            if (mask >> bit) & 1:
                wsum += sw[bit]
                psum += sv[bit]
            else:
                wsum -= sw[bit]
                psum -= sv[bit]
            if wsum <= cap and psum > best:
                best = psum
        return Fraction(best, alpha)
    total_profit = sum(sv)
    if n * (total_profit + 1) > max_dp_cells:
        raise ResourceLimitError(
            f"{n} items with scaled profit total {total_profit} exceed the "
            f"exact-optimum budget"
        )
    picks = _min_weight_per_profit(sw, sv, cap)
    return Fraction(sum(sv[i] for i in range(n) if picks[i]), alpha)
