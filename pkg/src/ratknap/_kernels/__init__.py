"""Hot-kernel dispatch.

The heavy inner loops (sieve, valuation scan, reachability and profit
tables) exist twice: an @njit build in `numba_impl` and a vectorized
build in `numpy_impl`.  The environment variable RATKNAP_KERNEL picks
one ("numba" or "numpy"); unset, numba is used when importable and
numpy otherwise.  Both builds return identical arrays, so everything
above this package is backend-agnostic.
"""

from __future__ import annotations

import os

from . import numpy_impl


def _select():
    choice = os.environ.get("RATKNAP_KERNEL", "").strip().lower()
    if choice == "numpy":
        return numpy_impl
    if choice == "numba":
        from . import numba_impl

        return numba_impl
    if choice:
        raise ValueError(f"RATKNAP_KERNEL must be 'numba' or 'numpy', got {choice!r}")
    try:
        from . import numba_impl

        return numba_impl
    except ImportError:
        return numpy_impl


_impl = _select()

BACKEND = _impl.BACKEND
sieve_primes = _impl.sieve_primes
sat_first_witness = _impl.sat_first_witness
subset_sum01_table = _impl.subset_sum01_table
unbounded_reach = _impl.unbounded_reach
knapsack01_dp = _impl.knapsack01_dp

# Exact object-dtype profit table for values beyond int64; always the
# numpy build regardless of the selected backend.
knapsack01_dp_exact = numpy_impl.knapsack01_dp
