"""Prime generation with a unary-size accounting and a uniqueness oracle.

The generator sieves up to the Rosser-Schoenfeld estimate for the n-th
prime, i*(ln i + ln ln i), which is valid from the sixth prime onward;
smaller requests come from a fixed table.  The uniqueness oracle decides
whether two integer-coefficient sums of distinct prime reciprocals,
a0 + a1/p1 + ... + an/pn, can only coincide componentwise while every
|a_i - b_i| stays below p_i.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log

from . import _kernels
from .errors import (
    EmptyInputError,
    InvalidPrimesError,
    RangeError,
    ShapeError,
)

_SMALL_PRIMES = (2, 3, 5, 7, 11)


def is_prime(k: int) -> bool:
    """Trial division; meant for validation at desk scale."""
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def prime_upper_bound(i: int) -> float:
    """Estimate i*(ln i + ln ln i), a strict upper bound on the i-th prime.

    Only valid for i >= 6 (natural logarithms); smaller i raise.
    """
    if i < 6:
        raise RangeError(f"prime upper bound needs i >= 6, got {i}")
    return i * (log(i) + log(log(i)))


def first_n_primes(n: int) -> list[int]:
    """The first n primes, ascending."""
    if n < 1:
        raise EmptyInputError(f"need n >= 1 primes, got {n}")
    if n < 6:
        return list(_SMALL_PRIMES[:n])
    limit = ceil(2 * n * log(n))
    while True:
        primes = _kernels.sieve_primes(limit)
        if len(primes) >= n:
            return [int(p) for p in primes[:n]]
        # unreachable for n >= 6 (the 2n*ln(n) window is wide enough),
        # kept as a safety net
        limit *= 2


def unary_size_of_first_primes(n: int) -> int:
    """Total unary digit count of the first n primes (each costs its value)."""
    return sum(first_n_primes(n))


def timed_first_n_primes(n: int) -> tuple[list[int], float]:
    """first_n_primes plus elapsed wall time in seconds."""
    t0 = time.perf_counter()
    primes = first_n_primes(n)
    return primes, time.perf_counter() - t0


@dataclass(frozen=True)
class PrimeSumInstance:
    """Two coefficient lists over a shared list of distinct primes.

    `a` and `b` hold one integer more than `primes`: the leading entry
    is the integer part, entry i >= 1 the coefficient of 1/primes[i-1].
    Unless `unchecked` is set, construction requires |a_i - b_i| to stay
    strictly below primes[i-1] for every i >= 1, the regime in which the
    uniqueness oracle's two answers must coincide.
    """

    primes: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    unchecked: bool = False

    def __post_init__(self) -> None:
        n = len(self.primes)
        if len(self.a) != n + 1 or len(self.b) != n + 1:
            raise ShapeError(
                f"coefficient lists must have {n + 1} entries for {n} primes"
            )
        if len(set(self.primes)) != n:
            raise InvalidPrimesError(f"duplicate primes in {self.primes}")
        for p in self.primes:
            if not is_prime(p):
                raise InvalidPrimesError(f"{p} is not prime")
        if not self.unchecked:
            for i, p in enumerate(self.primes, start=1):
                if abs(self.a[i] - self.b[i]) >= p:
                    raise RangeError(
                        f"|a_{i} - b_{i}| = {abs(self.a[i] - self.b[i])} "
                        f"not below p_{i} = {p} (pass unchecked=True to allow)"
                    )

    def sum_a(self) -> Fraction:
        return self._sum(self.a)

    def sum_b(self) -> Fraction:
        return self._sum(self.b)

    def _sum(self, coeffs: tuple[int, ...]) -> Fraction:
        total = Fraction(coeffs[0])
        for c, p in zip(coeffs[1:], self.primes):
            total += Fraction(c, p)
        return total


@dataclass(frozen=True)
class SumComparison:
    equal_sums: bool
    componentwise_equal: bool


def compare_prime_sums(inst: PrimeSumInstance) -> SumComparison:
    """Exact equality of the two reciprocal sums vs. coefficient equality.

    Within the |a_i - b_i| < p_i regime the two booleans agree; outside
    it (unchecked instances) they can diverge.
    """
    return SumComparison(
        equal_sums=inst.sum_a() == inst.sum_b(),
        componentwise_equal=inst.a == inst.b,
    )
