import itertools
import random
from fractions import Fraction

import pytest

from helpers import random_instance
from ratknap.errors import InvalidWitnessError, ResourceLimitError, ShapeError
from ratknap.instances import Instance, ProblemKind
from ratknap.reduction import as_subset_sum_instance, build_instance
from ratknap.sat import Formula
from ratknap.solvers import (
    decide,
    measure_sizes,
    oracle_decide,
    scale_to_integers,
    verify_witness,
)
from ratknap.primes import first_n_primes


def _subset_sum(weights, capacity, kind=ProblemKind.SUBSET_SUM_01):
    return Instance(kind=kind, weights=tuple(weights), capacity=capacity)


def _knapsack(pairs, capacity, threshold, kind=ProblemKind.KNAPSACK_01):
    return Instance(
        kind=kind,
        weights=tuple(w for w, _ in pairs),
        profits=tuple(v for _, v in pairs),
        capacity=capacity,
        threshold=threshold,
    )


class TestScaleToIntegers:
    def test_basic(self):
        inst = _subset_sum([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)], Fraction(1))
        scaled, alpha = scale_to_integers(inst)
        assert alpha == 6
        assert scaled.weights == (Fraction(3), Fraction(2), Fraction(1))
        assert scaled.capacity == 6

    def test_reduced_instance(self):
        ri = build_instance(Formula(n=2, clauses=((1, 2, -1),)))
        scaled, alpha = scale_to_integers(as_subset_sum_instance(ri))
        assert alpha == 437
        assert scaled.weights == (Fraction(441),) * 2 + (Fraction(433),) * 2
        assert scaled.capacity == 874

    def test_integers_untouched(self):
        inst = _subset_sum([Fraction(2), Fraction(5)], Fraction(3))
        scaled, alpha = scale_to_integers(inst)
        assert alpha == 1 and scaled == inst

    def test_preserves_answers(self):
        rng = random.Random(61)
        for kind in ProblemKind:
            for _ in range(15):
                inst = random_instance(rng, kind, max_items=4, max_den=6)
                scaled, _ = scale_to_integers(inst)
                assert decide(inst).answer == decide(scaled).answer


class TestDecideExamples:
    def test_subset_sum_01(self):
        d = decide(_subset_sum([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)], Fraction(1)))
        assert d.answer and d.witness == (1, 1, 1)

    def test_unbounded_subset_sum(self):
        d = decide(
            _subset_sum(
                [Fraction(2, 3), Fraction(1, 2)],
                Fraction(5, 3),
                kind=ProblemKind.SUBSET_SUM_UNBOUNDED,
            )
        )
        assert d.answer and d.witness == (1, 2)

    def test_knapsack_01(self):
        d = decide(
            _knapsack(
                [(Fraction(1, 2), Fraction(3, 4)), (Fraction(1, 3), Fraction(1, 3))],
                Fraction(5, 6),
                Fraction(13, 12),
            )
        )
        assert d.answer and d.witness == (1, 1)

    def test_partition(self):
        d = decide(
            Instance(
                kind=ProblemKind.PARTITION,
                weights=(Fraction(1, 2), Fraction(1, 3), Fraction(1, 6), Fraction(1)),
            )
        )
        assert d.answer
        side = sum(
            (q * w for q, w in zip(d.witness, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6), Fraction(1)))),
            Fraction(0),
        )
        assert side == 1

    def test_unbounded_knapsack(self):
        d = decide(
            _knapsack(
                [(Fraction(1), Fraction(1))],
                Fraction(3),
                Fraction(3),
                kind=ProblemKind.KNAPSACK_UNBOUNDED,
            )
        )
        assert d.answer and d.witness == (3,)

    def test_partition_odd_total_is_no(self):
        d = decide(
            Instance(kind=ProblemKind.PARTITION, weights=(Fraction(1), Fraction(2)))
        )
        assert not d.answer

    def test_missing_threshold(self):
        inst = _knapsack([(Fraction(1), Fraction(1))], Fraction(1), None)
        with pytest.raises(ShapeError):
            decide(inst)
        with pytest.raises(ShapeError):
            oracle_decide(inst)

    def test_stats_fields(self):
        d = decide(_subset_sum([Fraction(1, 2)], Fraction(1, 2)))
        assert d.stats.alpha == 2
        assert d.stats.elapsed_s >= 0
        assert d.stats.method.startswith("dp/")


class TestOracleExamples:
    def test_reduced_two_variable_instance(self):
        ri = build_instance(Formula(n=2, clauses=((1, 2, -1),)))
        decision = oracle_decide(as_subset_sum_instance(ri))
        assert decision.answer
        assert verify_witness(as_subset_sum_instance(ri), decision.witness)

    def test_unbounded_knapsack_triple_pick(self):
        inst = _knapsack(
            [(Fraction(1), Fraction(1))],
            Fraction(3),
            Fraction(3),
            kind=ProblemKind.KNAPSACK_UNBOUNDED,
        )
        decision = oracle_decide(inst)
        assert decision.answer and decision.witness == (3,)


class TestZeroWeightConventions:
    def test_subset_sum_skips_zero_weights(self):
        d = decide(_subset_sum([Fraction(0), Fraction(1, 2)], Fraction(1, 2)))
        assert d.answer and d.witness == (0, 1)
        d = decide(
            _subset_sum(
                [Fraction(0), Fraction(1, 2)],
                Fraction(1, 2),
                kind=ProblemKind.SUBSET_SUM_UNBOUNDED,
            )
        )
        assert d.answer and d.witness == (0, 1)

    def test_zero_weight_profitable_item_in_01(self):
        d = decide(
            _knapsack(
                [(Fraction(0), Fraction(2)), (Fraction(1), Fraction(1))],
                Fraction(0),
                Fraction(2),
            )
        )
        assert d.answer and d.witness == (1, 0)

    def test_zero_weight_unbounded_immediate_yes(self):
        inst = _knapsack(
            [(Fraction(0), Fraction(1, 3))],
            Fraction(1),
            Fraction(100),
            kind=ProblemKind.KNAPSACK_UNBOUNDED,
        )
        for solver in (decide, oracle_decide):
            d = solver(inst)
            assert d.answer and verify_witness(inst, d.witness)

    def test_all_zero_weights_unreachable_positive_target(self):
        d = decide(_subset_sum([Fraction(0)], Fraction(1)))
        assert not d.answer


class TestBeyondInt64:
    def test_knapsack01_with_astronomical_profits(self):
        huge = Fraction(10**25)
        inst = _knapsack(
            [(Fraction(1, 2), huge), (Fraction(1, 2), huge + 7)],
            Fraction(1, 2),
            huge + 7,
        )
        d = decide(inst)
        assert d.answer and d.witness == (0, 1)
        assert decide(inst).answer == oracle_decide(inst).answer

    def test_unbounded_knapsack_with_astronomical_profits(self):
        inst = _knapsack(
            [(Fraction(1), Fraction(10**24))],
            Fraction(3),
            Fraction(3 * 10**24),
            kind=ProblemKind.KNAPSACK_UNBOUNDED,
        )
        d = decide(inst)
        assert d.answer and d.witness == (3,)

    def test_zero_capacity_subset_sum(self):
        d = decide(_subset_sum([Fraction(1, 2), Fraction(2)], Fraction(0)))
        assert d.answer and d.witness == (0, 0)


class TestVerifyWitness:
    def test_valid(self):
        inst = _subset_sum([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)], Fraction(1))
        assert verify_witness(inst, (1, 1, 1))

    def test_wrong_sum(self):
        inst = _subset_sum([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)], Fraction(1))
        assert not verify_witness(inst, (1, 1, 0))

    def test_integrality_enforced(self):
        inst = _subset_sum([Fraction(1, 2), Fraction(1, 2)], Fraction(1))
        with pytest.raises(InvalidWitnessError):
            verify_witness(inst, (2, 0))

    def test_shape(self):
        inst = _subset_sum([Fraction(1, 2)], Fraction(1, 2))
        with pytest.raises(ShapeError):
            verify_witness(inst, (1, 0))

    def test_partition_balance(self):
        inst = Instance(
            kind=ProblemKind.PARTITION, weights=(Fraction(1), Fraction(1, 2), Fraction(1, 2))
        )
        assert verify_witness(inst, (1, 0, 0))
        assert not verify_witness(inst, (1, 1, 0))


class TestOracleAgreement:
    GRID = [Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1)]

    def test_exhaustive_small_subset_sums(self):
        targets = [Fraction(0), Fraction(1, 2), Fraction(5, 6), Fraction(1), Fraction(7, 6), Fraction(2)]
        for size in (1, 2, 3):
            for weights in itertools.combinations_with_replacement(self.GRID, size):
                for kind in (ProblemKind.SUBSET_SUM_01, ProblemKind.SUBSET_SUM_UNBOUNDED):
                    for w_cap in targets:
                        inst = _subset_sum(weights, w_cap, kind=kind)
                        d, o = decide(inst), oracle_decide(inst)
                        assert d.answer == o.answer, inst
                inst = Instance(kind=ProblemKind.PARTITION, weights=weights)
                assert decide(inst).answer == oracle_decide(inst).answer

    def test_randomized_all_kinds(self):
        rng = random.Random(71)
        for kind in ProblemKind:
            for _ in range(60):
                inst = random_instance(rng, kind, max_items=5, max_den=10)
                d, o = decide(inst), oracle_decide(inst)
                assert d.answer == o.answer, inst
                if d.answer:
                    assert verify_witness(inst, d.witness)
                    assert verify_witness(inst, o.witness)


class TestMonotonicityAndEmbedding:
    def test_adding_items_keeps_knapsack_yes(self):
        rng = random.Random(81)
        for kind in (ProblemKind.KNAPSACK_01, ProblemKind.KNAPSACK_UNBOUNDED):
            checked = 0
            for _ in range(40):
                inst = random_instance(rng, kind, max_items=4, max_den=8)
                if not decide(inst).answer:
                    continue
                checked += 1
                grown = Instance(
                    kind=kind,
                    weights=inst.weights + (Fraction(1, 7),),
                    profits=inst.profits + (Fraction(1, 7),),
                    capacity=inst.capacity,
                    threshold=inst.threshold,
                )
                assert decide(grown).answer
            assert checked > 5

    def test_raising_capacity_keeps_knapsack_yes(self):
        rng = random.Random(82)
        checked = 0
        for _ in range(40):
            inst = random_instance(rng, ProblemKind.KNAPSACK_01, max_items=4, max_den=8)
            if not decide(inst).answer:
                continue
            checked += 1
            relaxed = Instance(
                kind=inst.kind,
                weights=inst.weights,
                profits=inst.profits,
                capacity=inst.capacity + Fraction(3, 5),
                threshold=inst.threshold,
            )
            assert decide(relaxed).answer
        assert checked > 5

    def test_subset_sum_embeds_into_knapsack(self):
        rng = random.Random(83)
        pairs = [
            (ProblemKind.SUBSET_SUM_01, ProblemKind.KNAPSACK_01),
            (ProblemKind.SUBSET_SUM_UNBOUNDED, ProblemKind.KNAPSACK_UNBOUNDED),
        ]
        for subset_kind, knapsack_kind in pairs:
            for _ in range(40):
                inst = random_instance(rng, subset_kind, max_items=5, max_den=10)
                embedded = Instance(
                    kind=knapsack_kind,
                    weights=inst.weights,
                    profits=inst.weights,
                    capacity=inst.capacity,
                    threshold=inst.capacity,
                )
                assert decide(inst).answer == decide(embedded).answer


class TestResourceLimits:
    def test_table_budget(self):
        inst = _subset_sum([Fraction(1)], Fraction(10**9))
        with pytest.raises(ResourceLimitError):
            decide(inst)
        inst = _subset_sum(
            [Fraction(1)], Fraction(10**9), kind=ProblemKind.SUBSET_SUM_UNBOUNDED
        )
        with pytest.raises(ResourceLimitError):
            decide(inst)

    def test_budget_is_configurable(self):
        inst = _subset_sum([Fraction(1)], Fraction(50))
        with pytest.raises(ResourceLimitError):
            decide(inst, max_table_cells=10)
        assert not decide(inst).answer

    def test_reduced_instances_blow_the_default_budget(self):
        # adversarial by construction: the scaled capacity explodes
        rng = random.Random(84)
        f = Formula(n=4, clauses=((1, 2, 3), (2, 3, 4), (-1, -2, -4)))
        inst = as_subset_sum_instance(build_instance(f))
        with pytest.raises(ResourceLimitError):
            decide(inst)
        assert oracle_decide(inst) is not None

    def test_oracle_node_guard(self):
        inst = _subset_sum([Fraction(1, 2)] * 26, Fraction(13))
        with pytest.raises(ResourceLimitError):
            oracle_decide(inst)


class TestMeasureSizes:
    def test_single_half_weight(self):
        report = measure_sizes(
            Instance(kind=ProblemKind.PARTITION, weights=(Fraction(1, 2),))
        )
        assert report.unary == 3
        assert report.alpha == 2
        assert report.scaled_unary == 2  # scaled weight 1 plus its unit denominator

    def test_all_integer_instance_unchanged(self):
        inst = _subset_sum([Fraction(2), Fraction(3)], Fraction(5))
        report = measure_sizes(inst)
        assert report.alpha == 1
        assert report.scaled_unary == report.unary
        assert report.scaled_binary == report.binary

    def test_reciprocal_prime_family_blowup(self):
        primes = first_n_primes(12)
        sizes = []
        for n in (2, 6, 12):
            inst = Instance(
                kind=ProblemKind.PARTITION,
                weights=tuple(Fraction(1, p) for p in primes[:n]),
            )
            sizes.append(measure_sizes(inst))
        assert sizes[0].scaled_unary < sizes[1].scaled_unary < sizes[2].scaled_unary
        # unary explodes super-polynomially while binary crawls
        assert sizes[2].scaled_unary > 1000 * sizes[1].scaled_unary
        assert sizes[2].scaled_binary < 10 * sizes[1].scaled_binary
