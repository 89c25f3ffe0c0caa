"""Shared generators: formula families and random instances."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from ratknap.instances import KNAPSACK_KINDS, Instance, ProblemKind
from ratknap.sat import Formula


def exhaustive_formulas(max_n: int = 3, max_m: int = 2) -> list[Formula]:
    """Every <=4-occurrence formula up to symmetry.

    Clauses are non-decreasing literal triples, formulas non-decreasing
    clause multisets, and each formula uses all of its n variables, so
    permuted duplicates and padded smaller-n formulas are excluded.
    """
    out: list[Formula] = []
    for n in range(1, max_n + 1):
        literals = sorted(range(1, n + 1)) + sorted(-v for v in range(1, n + 1))
        clause_pool = list(itertools.combinations_with_replacement(sorted(literals), 3))
        for m in range(1, max_m + 1):
            for combo in itertools.combinations_with_replacement(clause_pool, m):
                formula = Formula(n=n, clauses=combo)
                if not formula.is_le4:
                    continue
                if min(formula.occurrence_counts) == 0:
                    continue
                out.append(formula)
    return out


def random_formula(rng: random.Random, n: int, m: int) -> Formula:
    """Random 3-CNF with at most four occurrences per variable (needs 3m <= 4n)."""
    if 3 * m > 4 * n:
        raise ValueError(f"no <=4-occurrence formula with n={n}, m={m}")
    capacity = [4] * n
    clauses = []
    for _ in range(m):
        clause = []
        for _ in range(3):
            var = rng.choice([v for v in range(1, n + 1) if capacity[v - 1] > 0])
            capacity[var - 1] -= 1
            clause.append(var if rng.random() < 0.5 else -var)
        clauses.append(tuple(clause))
    return Formula(n=n, clauses=tuple(clauses))


def random_fraction(
    rng: random.Random, max_num: int = 12, max_den: int = 12, allow_zero: bool = True
) -> Fraction:
    num = rng.randint(0 if allow_zero else 1, max_num)
    return Fraction(num, rng.randint(1, max_den))


def random_instance(
    rng: random.Random,
    kind: ProblemKind,
    max_items: int = 6,
    max_den: int = 12,
) -> Instance:
    """Random instance; capacities/thresholds are yes-biased half the time."""
    n = rng.randint(1, max_items)
    weights = tuple(random_fraction(rng, max_den=max_den) for _ in range(n))
    profits = None
    capacity = threshold = None
    if kind in KNAPSACK_KINDS:
        profits = tuple(random_fraction(rng, max_den=max_den) for _ in range(n))
    if kind is not ProblemKind.PARTITION:
        if rng.random() < 0.5:
            chosen = [k for k in range(n) if rng.random() < 0.5]
            reps = {
                ProblemKind.SUBSET_SUM_01: lambda _k: 1,
                ProblemKind.KNAPSACK_01: lambda _k: 1,
            }.get(kind, lambda _k: rng.randint(1, 3))
            capacity = sum((reps(k) * weights[k] for k in chosen), Fraction(0))
        else:
            capacity = random_fraction(rng, max_num=3 * max_den, max_den=max_den)
    if kind in KNAPSACK_KINDS:
        if rng.random() < 0.5:
            chosen = [k for k in range(n) if rng.random() < 0.5]
            threshold = sum((profits[k] for k in chosen), Fraction(0))
        else:
            threshold = random_fraction(rng, max_num=2 * max_den, max_den=max_den)
    return Instance(
        kind=kind,
        weights=weights,
        profits=profits,
        capacity=capacity,
        threshold=threshold,
    )


def random_knapsack01(
    rng: random.Random, max_items: int = 15, max_den: int = 50
) -> Instance:
    """Optimization-form knapsack-01 (no threshold) for approximation tests."""
    n = rng.randint(1, max_items)
    weights = tuple(random_fraction(rng, max_num=20, max_den=max_den) for _ in range(n))
    profits = tuple(random_fraction(rng, max_num=20, max_den=max_den) for _ in range(n))
    cap_style = rng.random()
    if cap_style < 0.4:
        capacity = sum(weights, Fraction(0)) / 2
    elif cap_style < 0.8:
        capacity = random_fraction(rng, max_num=40, max_den=max_den)
    else:
        capacity = sum(weights, Fraction(0))
    return Instance(
        kind=ProblemKind.KNAPSACK_01,
        weights=weights,
        profits=profits,
        capacity=capacity,
    )
