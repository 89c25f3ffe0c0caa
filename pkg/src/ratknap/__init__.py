"""Exact rational subset-sum/knapsack toolbox.

Partition, subset-sum, and knapsack deciders over arbitrary-precision
rationals, the SAT gadget chain and prime-reciprocal weight construction
that produces hard rational instances of unary-polynomial size, a
uniqueness oracle for prime-denominator sums, and an approximation
scheme for rational 0-1 knapsack.
"""

from .errors import (
    ArityError,
    EmptyInputError,
    InvalidDenominatorError,
    InvalidPrimesError,
    InvalidWitnessError,
    OccurrenceBoundError,
    ParameterError,
    ParseError,
    RangeError,
    RatknapError,
    ResourceLimitError,
    ShapeError,
)
from .fptas import ApproxResult, knapsack_fptas, knapsack_opt_exact
from .gadgets import all_same_gadget, one_in_three_gadget
from .instances import (
    Decision,
    Instance,
    ProblemKind,
    SolveStats,
    Witness,
    format_instance,
    format_witness,
    parse_instance,
    parse_witness,
)
from .primes import (
    PrimeSumInstance,
    compare_prime_sums,
    first_n_primes,
    prime_upper_bound,
    unary_size_of_first_primes,
)
from .rational import (
    Rational,
    binary_size,
    compare,
    format_rational,
    lcm_denominators,
    normalize,
    parse_rational,
    unary_size,
)
from .reduction import (
    GroupCounts,
    ReducedInstance,
    ReductionCertificate,
    as_partition_instance,
    as_subset_sum_instance,
    build_instance,
    cyclic_add,
    cyclic_sub,
    group_counts_from_quantities,
    valuation_to_witness,
    weight_of_group_counts,
    witness_to_valuation,
)
from .sat import (
    Formula,
    SatMode,
    Valuation,
    brute_force_decide,
    parse_dimacs,
    to_dimacs,
    true_literal_counts,
)
from .solvers import (
    SizeReport,
    decide,
    measure_sizes,
    oracle_decide,
    scale_to_integers,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "ArityError",
    "Decision",
    "EmptyInputError",
    "Formula",
    "GroupCounts",
    "Instance",
    "InvalidDenominatorError",
    "InvalidPrimesError",
    "InvalidWitnessError",
    "OccurrenceBoundError",
    "ParameterError",
    "ParseError",
    "PrimeSumInstance",
    "ProblemKind",
    "RangeError",
    "Rational",
    "RatknapError",
    "ReducedInstance",
    "ReductionCertificate",
    "ResourceLimitError",
    "SatMode",
    "ShapeError",
    "SizeReport",
    "SolveStats",
    "Valuation",
    "Witness",
    "all_same_gadget",
    "as_partition_instance",
    "as_subset_sum_instance",
    "binary_size",
    "brute_force_decide",
    "build_instance",
    "compare",
    "compare_prime_sums",
    "cyclic_add",
    "cyclic_sub",
    "decide",
    "first_n_primes",
    "format_instance",
    "format_rational",
    "format_witness",
    "group_counts_from_quantities",
    "knapsack_fptas",
    "knapsack_opt_exact",
    "lcm_denominators",
    "measure_sizes",
    "normalize",
    "one_in_three_gadget",
    "oracle_decide",
    "parse_dimacs",
    "parse_instance",
    "parse_rational",
    "parse_witness",
    "prime_upper_bound",
    "scale_to_integers",
    "to_dimacs",
    "true_literal_counts",
    "unary_size",
    "unary_size_of_first_primes",
    "valuation_to_witness",
    "verify_witness",
    "weight_of_group_counts",
    "witness_to_valuation",
]
