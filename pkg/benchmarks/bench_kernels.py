#!/usr/bin/env python3
"""Time the numba kernels against their pure-numpy twins.

Each workload runs both builds on identical inputs, checks the outputs
agree, and reports best-of-N wall times plus the speedup.  The numba
build is compiled once (warmup) before timing.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from ratknap._kernels import numpy_impl

try:
    from ratknap._kernels import numba_impl
except ImportError:  # pragma: no cover
    numba_impl = None


def best_of(fn, args, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    rng = random.Random(2024)

    yield "sieve_primes(2e6)", "sieve_primes", (2_000_000,)

    # no valuation makes exactly one of three equal occurrences true,
    # so every scan walks all 2^20 valuations
    m = 30
    lit_var = np.array(
        [[j % 20] * 3 for j in range(m)], dtype=np.int64
    )
    lit_pos = np.ones((m, 3), dtype=np.int64)
    yield "sat scan, 2^20 x 30 clauses", "sat_first_witness", (lit_var, lit_pos, 20, 1)

    weights = np.array([rng.randint(1, 4000) for _ in range(60)], dtype=np.int64)
    target = int(weights.sum()) // 2 + 1  # odd-ball target: full table filled
    yield f"subset table, 60 items x {target}", "subset_sum01_table", (weights, target)

    weights = np.array([rng.randint(900, 5000) for _ in range(25)], dtype=np.int64)
    yield "unbounded reach, 25 items x 2e6", "unbounded_reach", (weights, 2_000_000)

    weights = np.array([rng.randint(1, 30_000) for _ in range(50)], dtype=np.int64)
    profits = np.array([rng.randint(1, 10_000) for _ in range(50)], dtype=np.int64)
    yield "knapsack table, 50 items x 4e5", "knapsack01_dp", (weights, profits, 400_000)


def equal(a, b) -> bool:
    if isinstance(a, tuple):
        return all(equal(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if numba_impl is None:
        print("numba unavailable; nothing to compare")
        return

    print(f"{'workload':<38} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for label, name, call_args in workloads():
        np_fn = getattr(numpy_impl, name)
        nb_fn = getattr(numba_impl, name)
        nb_out = nb_fn(*call_args)  # warmup / compile
        np_out = np_fn(*call_args)
        if not equal(np_out, nb_out):
            raise SystemExit(f"backend mismatch on {label}")
        t_np = best_of(np_fn, call_args, args.repeat)
        t_nb = best_of(nb_fn, call_args, args.repeat)
        print(f"{label:<38} {t_np:>9.4f}s {t_nb:>9.4f}s {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
