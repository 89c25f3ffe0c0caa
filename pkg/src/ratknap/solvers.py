"""Exact decision procedures for the five rational problems.

`decide` scales an instance to integers by the least common multiple of
all denominators, then runs a pseudo-polynomial table over the scaled
capacity: per-item reachability for the 0-1 kinds, an unbounded
reachability closure for unbounded subset sum, and a profit-maximizing
table for the knapsack kinds (unbounded knapsack is rewritten to 0-1 by
binary item replication).  Scaled capacities can be astronomically
larger than the instance text, so table size is guarded by an explicit
cell budget and overruns raise ResourceLimitError instead of grinding.

`oracle_decide` answers the same questions by plain enumeration of
quantity vectors and shares no table code with `decide`; it exists to
cross-check.  Witnesses from either path verify exactly on the original
rational instance.

Conventions for zero-weight items: the subset-sum kinds never choose
them (they cannot change an exact total), 0-1 knapsack handles them in
the table like any other item, and in unbounded knapsack a zero-weight
item with positive profit makes the answer yes immediately.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import _kernels
from .errors import InvalidWitnessError, ResourceLimitError, ShapeError
from .instances import (
    KNAPSACK_KINDS,
    ZERO_ONE_KINDS,
    Decision,
    Instance,
    ProblemKind,
    SolveStats,
    Witness,
)
from .rational import binary_size, unary_size

DEFAULT_TABLE_CELLS = 10**8
DEFAULT_ORACLE_NODES = 1 << 25

# Kernel tables index and sum int64 values; anything near the limit is
# routed to exact object arithmetic or refused.
_INT64_SAFE = 1 << 62


def _all_rationals(inst: Instance) -> list[Fraction]:
    vals = list(inst.weights)
    if inst.profits is not None:
        vals.extend(inst.profits)
    if inst.capacity is not None:
        vals.append(inst.capacity)
    if inst.threshold is not None:
        vals.append(inst.threshold)
    return vals


def scale_to_integers(inst: Instance) -> tuple[Instance, int]:
    """Equivalent all-integer instance and the factor applied.

    The factor is the least common multiple of every denominator in the
    instance (weights, profits, capacity, threshold); multiplying a
    linear system by a positive constant preserves all five answers.
    """
    vals = _all_rationals(inst)
    alpha = lcm(*(v.denominator for v in vals)) if vals else 1

    def scale(x: Fraction | None) -> Fraction | None:
        return None if x is None else x * alpha

    return (
        Instance(
            kind=inst.kind,
            weights=tuple(w * alpha for w in inst.weights),
            profits=None
            if inst.profits is None
            else tuple(v * alpha for v in inst.profits),
            capacity=scale(inst.capacity),
            threshold=scale(inst.threshold),
        ),
        alpha,
    )


@dataclass(frozen=True)
class SizeReport:
    """Unary/binary sizes before and after integer scaling."""

    binary: int
    unary: int
    scaled_binary: int
    scaled_unary: int
    alpha: int


def measure_sizes(inst: Instance) -> SizeReport:
    vals = _all_rationals(inst)
    scaled, alpha = scale_to_integers(inst)
    svals = _all_rationals(scaled)
    return SizeReport(
        binary=sum(binary_size(v) for v in vals),
        unary=sum(unary_size(v) for v in vals),
        scaled_binary=sum(binary_size(v) for v in svals),
        scaled_unary=sum(unary_size(v) for v in svals),
        alpha=alpha,
    )


def verify_witness(inst: Instance, witness: Witness) -> bool:
    """Exact rational check of the defining condition for inst.kind."""
    if len(witness) != inst.size:
        raise ShapeError(f"{len(witness)} quantities for {inst.size} items")
    for q in witness:
        if q < 0:
            raise InvalidWitnessError(f"negative quantity {q}")
    if inst.kind in ZERO_ONE_KINDS and any(q > 1 for q in witness):
        raise InvalidWitnessError(
            f"{inst.kind.value} witnesses must be 0/1, got {witness}"
        )
    total_weight = sum((q * w for q, w in zip(witness, inst.weights)), Fraction(0))
    if inst.kind is ProblemKind.PARTITION:
        return 2 * total_weight == sum(inst.weights)
    if inst.kind in (ProblemKind.SUBSET_SUM_01, ProblemKind.SUBSET_SUM_UNBOUNDED):
        return total_weight == inst.capacity
    if inst.threshold is None:
        raise ShapeError("knapsack verification needs a threshold")
    total_profit = sum(
        (q * v for q, v in zip(witness, inst.profits)), Fraction(0)
    )
    return total_weight <= inst.capacity and total_profit >= inst.threshold


def _check_budget(
    shape: tuple[int, ...], alpha: int, budget: int
) -> None:
    cells = 1
    for dim in shape:
        cells *= dim
    if cells > budget:
        raise ResourceLimitError(
            f"DP table {shape} needs {cells} cells, over the budget of "
            f"{budget} (scaling factor alpha={alpha})"
        )
    if any(dim >= _INT64_SAFE for dim in shape):
        raise ResourceLimitError(
            f"DP table {shape} exceeds the int64-safe index range"
        )


def _backtrack01(table: np.ndarray, weights: list[int], target: int) -> list[int]:
    # Prefer leaving an item out when the prefix already reaches t; this
    # skews picks toward low item indices deterministically.
    picks = [0] * len(weights)
    t = target
    for i in range(len(weights), 0, -1):
        if table[i - 1, t]:
            continue
        picks[i - 1] = 1
        t -= weights[i - 1]
    return picks


def _backtrack_unbounded(
    reach: np.ndarray, weights: list[int], target: int
) -> list[int]:
    counts = [0] * len(weights)
    t = target
    while t > 0:
        for i, w in enumerate(weights):
            if w <= t and reach[t - w]:
                counts[i] += 1
                t -= w
                break
        else:  # pragma: no cover - reach[target] guarantees progress
            raise AssertionError("backtracking lost reachability")
    return counts


def _backtrack_take(take: np.ndarray, weights: list[int], cap: int) -> list[int]:
    picks = [0] * len(weights)
    c = cap
    for i in range(len(weights) - 1, -1, -1):
        if take[i, c]:
            picks[i] = 1
            c -= weights[i]
    return picks


def _reach_target_01(
    sw: list[int], target: int, alpha: int, budget: int
) -> tuple[bool, list[int] | None, tuple[int, ...]]:
    """Shared 0-1 exact-sum engine for subset-sum-01 and partition."""
    n = len(sw)
    if target == 0:
        return True, [0] * n, (1, 1)
    kept = [k for k, w in enumerate(sw) if 0 < w <= target]
    shape = (len(kept) + 1, target + 1)
    _check_budget(shape, alpha, budget)
    if not kept:
        return False, None, shape
    arr = np.array([sw[k] for k in kept], dtype=np.int64)
    table = _kernels.subset_sum01_table(arr, target)
    if not table[len(kept), target]:
        return False, None, shape
    picks = _backtrack01(table, [sw[k] for k in kept], target)
    witness = [0] * n
    for i, k in enumerate(kept):
        witness[k] = picks[i]
    return True, witness, shape


def _decide_unbounded_subset(
    sw: list[int], target: int, alpha: int, budget: int
) -> tuple[bool, list[int] | None, tuple[int, ...]]:
    n = len(sw)
    if target == 0:
        return True, [0] * n, (1,)
    kept = [k for k, w in enumerate(sw) if 0 < w <= target]
    shape = (target + 1,)
    _check_budget(shape, alpha, budget)
    if not kept:
        return False, None, shape
    arr = np.array([sw[k] for k in kept], dtype=np.int64)
    reach = _kernels.unbounded_reach(arr, target)
    if not reach[target]:
        return False, None, shape
    counts = _backtrack_unbounded(reach, [sw[k] for k in kept], target)
    witness = [0] * n
    for i, k in enumerate(kept):
        witness[k] = counts[i]
    return True, witness, shape


def _run_knapsack01(
    weights: list[int], profits: list[int], cap: int
) -> tuple[int, np.ndarray]:
    """Profit table dispatch: int64 kernels when safe, exact objects otherwise."""
    w_arr = np.array(weights, dtype=np.int64)
    if sum(profits) < _INT64_SAFE:
        best_row, take = _kernels.knapsack01_dp(
            w_arr, np.array(profits, dtype=np.int64), cap
        )
    else:
        best_row, take = _kernels.knapsack01_dp_exact(
            w_arr, np.array(profits, dtype=object), cap
        )
    return int(best_row[cap]), take


def _decide_knapsack01(
    sw: list[int], sv: list[int], cap: int, need: int, alpha: int, budget: int
) -> tuple[bool, list[int] | None, tuple[int, ...]]:
    n = len(sw)
    if need <= 0:
        return True, [0] * n, (1, 1)
    kept = [k for k, w in enumerate(sw) if w <= cap]
    shape = (len(kept) + 1, cap + 1)
    _check_budget(shape, alpha, budget)
    if not kept:
        return False, None, shape
    best, take = _run_knapsack01([sw[k] for k in kept], [sv[k] for k in kept], cap)
    if best < need:
        return False, None, shape
    picks = _backtrack_take(take, [sw[k] for k in kept], cap)
    witness = [0] * n
    for i, k in enumerate(kept):
        witness[k] = picks[i]
    return True, witness, shape


def _decide_unbounded_knapsack(
    sw: list[int], sv: list[int], cap: int, need: int, alpha: int, budget: int
) -> tuple[bool, list[int] | None, tuple[int, ...]]:
    n = len(sw)
    if need <= 0:
        return True, [0] * n, (1, 1)
    for k in range(n):
        if sw[k] == 0 and sv[k] > 0:
            witness = [0] * n
            witness[k] = -(-need // sv[k])
            return True, witness, (1, 1)
    kept = [k for k, w in enumerate(sw) if 0 < w <= cap]
    if not kept:
        return False, None, (1, 1)
    # Binary replication: copies with multiplicities 1, 2, 4, ...,
    # remainder cover every count up to cap // weight, reducing to 0-1.
    rep_w: list[int] = []
    rep_v: list[int] = []
    rep_owner: list[int] = []
    rep_mult: list[int] = []
    for k in kept:
        left = cap // sw[k]
        chunk = 1
        while left > 0:
            use = min(chunk, left)
            rep_w.append(sw[k] * use)
            rep_v.append(sv[k] * use)
            rep_owner.append(k)
            rep_mult.append(use)
            left -= use
            chunk *= 2
    shape = (len(rep_w) + 1, cap + 1)
    _check_budget(shape, alpha, budget)
    best, take = _run_knapsack01(rep_w, rep_v, cap)
    if best < need:
        return False, None, shape
    picks = _backtrack_take(take, rep_w, cap)
    witness = [0] * n
    for i, chosen in enumerate(picks):
        if chosen:
            witness[rep_owner[i]] += rep_mult[i]
    return True, witness, shape


def decide(inst: Instance, max_table_cells: int = DEFAULT_TABLE_CELLS) -> Decision:
    """Exact answer with a verifying witness on yes.

    Raises ResourceLimitError when the scaled capacity would need a
    table over `max_table_cells` cells.
    """
    t0 = time.perf_counter()
    if inst.kind in KNAPSACK_KINDS and inst.threshold is None:
        raise ShapeError("deciding a knapsack instance needs a threshold")
    scaled, alpha = scale_to_integers(inst)
    sw = [int(w) for w in scaled.weights]
    if inst.kind is ProblemKind.PARTITION:
        total = sum(sw)
        if total % 2 == 1:
            answer, witness, shape = False, None, (1, 1)
        else:
            answer, witness, shape = _reach_target_01(
                sw, total // 2, alpha, max_table_cells
            )
    elif inst.kind is ProblemKind.SUBSET_SUM_01:
        answer, witness, shape = _reach_target_01(
            sw, int(scaled.capacity), alpha, max_table_cells
        )
    elif inst.kind is ProblemKind.SUBSET_SUM_UNBOUNDED:
        answer, witness, shape = _decide_unbounded_subset(
            sw, int(scaled.capacity), alpha, max_table_cells
        )
    else:
        sv = [int(v) for v in scaled.profits]
        cap = int(scaled.capacity)
        need = int(scaled.threshold)
        if inst.kind is ProblemKind.KNAPSACK_01:
            answer, witness, shape = _decide_knapsack01(
                sw, sv, cap, need, alpha, max_table_cells
            )
        else:
            answer, witness, shape = _decide_unbounded_knapsack(
                sw, sv, cap, need, alpha, max_table_cells
            )
    result = tuple(witness) if witness is not None else None
    if answer:
        assert verify_witness(inst, result), "internal: witness failed verification"
    return Decision(
        answer=answer,
        witness=result,
        stats=SolveStats(
            alpha=alpha,
            table_shape=shape,
            elapsed_s=time.perf_counter() - t0,
            method=f"dp/{_kernels.BACKEND}",
        ),
    )


def _scan_subsets(
    sw: list[int],
    sv: list[int] | None,
    accept,
    max_nodes: int,
) -> tuple[int, list[int] | None]:
    """Gray-code walk over all subsets; returns (nodes, first accepted picks)."""
    n = len(sw)
    total = 1 << n
    if total > max_nodes:
        raise ResourceLimitError(
            f"2^{n} subsets exceed the enumeration guard of {max_nodes}"
        )
    mask = 0
    wsum = 0
    psum = 0
    if accept(wsum, psum):
        return 1, [0] * n
    for k in range(1, total):
        bit = (k & -k).bit_length() - 1
        mask ^= 1 << bit
        if (mask >> bit) & 1:
            wsum += sw[bit]
            psum += sv[bit] if sv is not None else 0
        else:
            wsum -= sw[bit]
            psum -= sv[bit] if sv is not None else 0
        if accept(wsum, psum):
            return k + 1, [(mask >> i) & 1 for i in range(n)]
    return total, None


def _dfs_exact_sum(
    sw: list[int], target: int, max_nodes: int
) -> tuple[int, list[int] | None]:
    """Lexicographically first quantity vector with an exact weighted sum."""
    n = len(sw)
    q = [0] * n
    nodes = 0

    def rec(idx: int, residual: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimitError(
                f"enumeration exceeded the node guard of {max_nodes}"
            )
        if idx == n:
            return residual == 0
        w = sw[idx]
        if w == 0:
            q[idx] = 0
            return rec(idx + 1, residual)
        for c in range(residual // w + 1):
            q[idx] = c
            if rec(idx + 1, residual - c * w):
                return True
        q[idx] = 0
        return False

    found = rec(0, target)
    return nodes, list(q) if found else None


def _dfs_knapsack_unbounded(
    sw: list[int], sv: list[int], cap: int, need: int, max_nodes: int
) -> tuple[int, list[int] | None]:
    n = len(sw)
    q = [0] * n
    nodes = 0

    def rec(idx: int, rem: int, profit: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimitError(
                f"enumeration exceeded the node guard of {max_nodes}"
            )
        if profit >= need:
            for i in range(idx, n):
                q[i] = 0
            return True
        if idx == n:
            return False
        w = sw[idx]
        for c in range(rem // w + 1):
            q[idx] = c
            if rec(idx + 1, rem - c * w, profit + c * sv[idx]):
                return True
        q[idx] = 0
        return False

    found = rec(0, cap, 0)
    return nodes, list(q) if found else None


def oracle_decide(inst: Instance, max_nodes: int = DEFAULT_ORACLE_NODES) -> Decision:
    """Exhaustive cross-check; shares no table code with `decide`.

    0-1 kinds walk all subsets; unbounded kinds run a depth-first scan
    over quantities bounded by the residual capacity, so a quantity never
    exceeds capacity/weight.  The `max_nodes` guard caps explored states.
    """
    t0 = time.perf_counter()
    if inst.kind in KNAPSACK_KINDS and inst.threshold is None:
        raise ShapeError("deciding a knapsack instance needs a threshold")
    vals = _all_rationals(inst)
    alpha = lcm(*(v.denominator for v in vals)) if vals else 1
    sw = [int(w * alpha) for w in inst.weights]
    sv = (
        [int(v * alpha) for v in inst.profits]
        if inst.profits is not None
        else None
    )
    cap = int(inst.capacity * alpha) if inst.capacity is not None else None
    need = int(inst.threshold * alpha) if inst.threshold is not None else None

    witness: list[int] | None
    if inst.kind is ProblemKind.PARTITION:
        total = sum(sw)
        if total % 2 == 1:
            nodes, witness = 1, None
        else:
            target = total // 2
            nodes, witness = _scan_subsets(
                sw, None, lambda w, _: w == target, max_nodes
            )
    elif inst.kind is ProblemKind.SUBSET_SUM_01:
        nodes, witness = _scan_subsets(sw, None, lambda w, _: w == cap, max_nodes)
    elif inst.kind is ProblemKind.KNAPSACK_01:
        nodes, witness = _scan_subsets(
            sw, sv, lambda w, p: w <= cap and p >= need, max_nodes
        )
    elif inst.kind is ProblemKind.SUBSET_SUM_UNBOUNDED:
        nodes, witness = _dfs_exact_sum(sw, cap, max_nodes)
    else:
        zero_free = [k for k, w in enumerate(sw) if w == 0 and sv[k] > 0]
        if need <= 0:
            nodes, witness = 1, [0] * len(sw)
        elif zero_free:
            witness = [0] * len(sw)
            witness[zero_free[0]] = -(-need // sv[zero_free[0]])
            nodes = 1
        else:
            kept = [k for k, w in enumerate(sw) if 0 < w <= cap]
            nodes, packed = _dfs_knapsack_unbounded(
                [sw[k] for k in kept], [sv[k] for k in kept], cap, need, max_nodes
            )
            witness = None
            if packed is not None:
                witness = [0] * len(sw)
                for i, k in enumerate(kept):
                    witness[k] = packed[i]
    result = tuple(witness) if witness is not None else None
    if result is not None:
        assert verify_witness(inst, result), "internal: witness failed verification"
    return Decision(
        answer=result is not None,
        witness=result,
        stats=SolveStats(
            alpha=alpha,
            table_shape=(nodes,),
            elapsed_s=time.perf_counter() - t0,
            method="enumeration",
        ),
    )
