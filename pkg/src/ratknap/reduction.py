"""From a bounded-occurrence 3-CNF formula to a rational subset-sum instance.

Given a formula with n variables, m clauses, and at most four occurrences
per variable, `build_instance` creates one item per literal (2n items)
whose weights are built from reciprocals of n+m distinct primes, all
larger than n+5 (the primes at positions n+6 .. 2n+m+5).  The weight of
the item for literal x_i is

    1 + 1/p_i - 1/p_{i(+)1} + sum over occurrences of x_i in clause j of
                              (1/p_{n+j} - 1/p_{n+(j(+)1)})

where (+) is 1-based cyclic increment over the variable block (modulus n)
or the clause block (modulus m).  A literal occurring twice in a clause
contributes that clause's term twice.  The cyclic differences telescope,
so the 2n items always weigh exactly 2n in total, and the target is n:
the target is reachable by quantities exactly when some valuation makes
the same number of literal occurrences true in every clause.

Every weight stays strictly inside (1 - 5/p_1, 1 + 5/p_1): at most five
negative reciprocal terms, each at most 1/p_1, and never five of them
equal to 1/p_1 at once.  A chosen multiset of items can therefore hit
total weight n only with fewer than n+5 items, which keeps exhaustive
checking of these instances tractable and bounds every cyclic count
difference below every prime used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import EmptyInputError, OccurrenceBoundError, RangeError, ShapeError
from .instances import Instance, ProblemKind, Witness
from .primes import first_n_primes
from .sat import Formula, Valuation


def cyclic_add(a: int, b: int, n: int) -> int:
    """1-based addition on {1..n}: ((a + b - 1) mod n) + 1."""
    _check_cyclic_args(a, b, n)
    return (a + b - 1) % n + 1


def cyclic_sub(a: int, b: int, n: int) -> int:
    """1-based subtraction on {1..n}: ((n + a - b - 1) mod n) + 1."""
    _check_cyclic_args(a, b, n)
    return (n + a - b - 1) % n + 1


def _check_cyclic_args(a: int, b: int, n: int) -> None:
    if n < 1:
        raise RangeError(f"modulus must be >= 1, got {n}")
    if not (1 <= a <= n and 1 <= b <= n):
        raise RangeError(f"arguments {a}, {b} outside 1..{n}")


@dataclass(frozen=True)
class ReductionCertificate:
    """Everything needed to move between witnesses and valuations.

    `item_map[k]` is (variable, polarity) for item k; items are ordered
    x_1, not-x_1, x_2, not-x_2, ...  `occurrences[k]` lists the clause
    indices (1-based, with multiplicity) containing item k's literal.
    `primes[i]` is p_{i+1} of the construction.
    """

    n: int
    m: int
    primes: tuple[int, ...]
    item_map: tuple[tuple[int, bool], ...]
    occurrences: tuple[tuple[int, ...], ...]

    @property
    def item_count(self) -> int:
        return 2 * self.n


@dataclass(frozen=True)
class ReducedInstance:
    weights: tuple[Fraction, ...]
    target: Fraction
    certificate: ReductionCertificate

    def validate(self) -> None:
        """Check the structural identities the construction promises."""
        cert = self.certificate
        n, m = cert.n, cert.m
        if len(self.weights) != 2 * n:
            raise ShapeError(f"{len(self.weights)} items for {n} variables")
        if sum(self.weights) != 2 * n:
            raise ShapeError("total weight must equal twice the variable count")
        if self.target != n:
            raise ShapeError("target must equal the variable count")
        p1 = cert.primes[0]
        lo, hi = 1 - Fraction(5, p1), 1 + Fraction(5, p1)
        for k, w in enumerate(self.weights):
            if not lo < w < hi:
                raise ShapeError(f"item {k} weight {w} outside ({lo}, {hi})")
            allowed = _denominator_primes(cert, k)
            if len(allowed) > 10:
                raise ShapeError(f"item {k} uses {len(allowed)} primes")
            if prod(allowed) % w.denominator != 0:
                raise ShapeError(
                    f"item {k} denominator {w.denominator} not built from {allowed}"
                )


def _denominator_primes(cert: ReductionCertificate, item: int) -> set[int]:
    var, _ = cert.item_map[item]
    used = {cert.primes[var - 1], cert.primes[cyclic_add(var, 1, cert.n) - 1]}
    for j in cert.occurrences[item]:
        used.add(cert.primes[cert.n + j - 1])
        used.add(cert.primes[cert.n + cyclic_add(j, 1, cert.m) - 1])
    return used


@dataclass(frozen=True)
class GroupCounts:
    """Chosen-item counts grouped per variable pair and per clause.

    counts[0:n] hold, per variable, how many items of its two literals
    were chosen; counts[n:n+m] hold, per clause, how many chosen items
    correspond to its literal occurrences (an occurrence repeated in a
    clause counts once per copy).  total_items is the overall number of
    chosen items.
    """

    counts: tuple[int, ...]
    total_items: int


def build_instance(formula: Formula) -> ReducedInstance:
    """Construct the 2n-item rational instance for a <=4-occurrence formula."""
    n, m = formula.n, formula.m
    if n < 1 or m < 1:
        raise EmptyInputError("the construction needs at least one variable and one clause")
    if not formula.is_le4:
        raise OccurrenceBoundError(
            f"occurrence counts {formula.occurrence_counts} exceed 4"
        )
    base = first_n_primes(2 * n + m + 5)
    primes = tuple(base[n + 5 : 2 * n + m + 5])

    occ_pos: list[list[int]] = [[] for _ in range(n)]
    occ_neg: list[list[int]] = [[] for _ in range(n)]
    for j, clause in enumerate(formula.clauses, start=1):
        for lit in clause:
            (occ_pos if lit > 0 else occ_neg)[abs(lit) - 1].append(j)

    item_map: list[tuple[int, bool]] = []
    occurrences: list[tuple[int, ...]] = []
    weights: list[Fraction] = []
    for var in range(1, n + 1):
        for positive in (True, False):
            occ = (occ_pos if positive else occ_neg)[var - 1]
            w = (
                1
                + Fraction(1, primes[var - 1])
                - Fraction(1, primes[cyclic_add(var, 1, n) - 1])
            )
            for j in occ:
                w += Fraction(1, primes[n + j - 1])
                w -= Fraction(1, primes[n + cyclic_add(j, 1, m) - 1])
            item_map.append((var, positive))
            occurrences.append(tuple(occ))
            weights.append(w)

    cert = ReductionCertificate(
        n=n,
        m=m,
        primes=primes,
        item_map=tuple(item_map),
        occurrences=tuple(occurrences),
    )
    instance = ReducedInstance(
        weights=tuple(weights), target=Fraction(n), certificate=cert
    )
    instance.validate()
    return instance


def group_counts_from_quantities(
    cert: ReductionCertificate, quantities: Witness
) -> GroupCounts:
    """Fold an item quantity vector into per-variable and per-clause counts."""
    if len(quantities) != cert.item_count:
        raise ShapeError(
            f"{len(quantities)} quantities for {cert.item_count} items"
        )
    per_var = [0] * cert.n
    per_clause = [0] * cert.m
    for k, q in enumerate(quantities):
        var, _ = cert.item_map[k]
        per_var[var - 1] += q
        for j in cert.occurrences[k]:
            per_clause[j - 1] += q
    return GroupCounts(
        counts=tuple(per_var + per_clause), total_items=sum(per_var)
    )


def weight_of_group_counts(
    counts: GroupCounts, cert: ReductionCertificate
) -> Fraction:
    """Total chosen weight from group counts alone.

    Equals sum(counts[0:n]) plus cyclic-difference corrections: the
    reciprocal terms of the item weights regroup into
    (t_i - t_{i(-)1})/p_i per variable slot and the analogous term per
    clause slot, so this always matches the direct weighted sum of the
    originating quantity vector.
    """
    t = counts.counts
    n, m = cert.n, cert.m
    if len(t) != n + m:
        raise ShapeError(f"{len(t)} group counts for n+m = {n + m}")
    total = Fraction(sum(t[:n]))
    for i in range(1, n + 1):
        total += Fraction(t[i - 1] - t[cyclic_sub(i, 1, n) - 1], cert.primes[i - 1])
    for j in range(1, m + 1):
        total += Fraction(
            t[n + j - 1] - t[n + cyclic_sub(j, 1, m) - 1], cert.primes[n + j - 1]
        )
    return total


def valuation_to_witness(cert: ReductionCertificate, valuation: Valuation) -> Witness:
    """Pick, per variable, the item of its satisfied literal."""
    if len(valuation) != cert.n:
        raise ShapeError(f"valuation length {len(valuation)} != {cert.n}")
    quantities = []
    for value in valuation:
        quantities.extend((1, 0) if value else (0, 1))
    return tuple(quantities)


def witness_to_valuation(
    cert: ReductionCertificate, quantities: Witness
) -> Valuation | None:
    """Inverse of valuation_to_witness; None unless each pair is (1,0)/(0,1)."""
    if len(quantities) != cert.item_count:
        raise ShapeError(
            f"{len(quantities)} quantities for {cert.item_count} items"
        )
    valuation = []
    for i in range(cert.n):
        pos, neg = quantities[2 * i], quantities[2 * i + 1]
        if (pos, neg) == (1, 0):
            valuation.append(True)
        elif (pos, neg) == (0, 1):
            valuation.append(False)
        else:
            return None
    return tuple(valuation)


def as_subset_sum_instance(ri: ReducedInstance) -> Instance:
    """Package as an unbounded subset-sum decision instance."""
    return Instance(
        kind=ProblemKind.SUBSET_SUM_UNBOUNDED,
        weights=ri.weights,
        capacity=ri.target,
    )


def as_partition_instance(ri: ReducedInstance) -> Instance:
    """Package the same weights as a partition instance.

    The target equals half the total by construction, so the two
    decision problems coincide on these instances.
    """
    return Instance(kind=ProblemKind.PARTITION, weights=ri.weights)


def certificate_comments(cert: ReductionCertificate) -> list[str]:
    """Human-readable sidecar lines describing the construction."""
    lines = [
        f"reduced 3-cnf formula: n={cert.n} m={cert.m}",
        "primes: " + " ".join(str(p) for p in cert.primes),
    ]
    for k, (var, positive) in enumerate(cert.item_map):
        lit = var if positive else -var
        occ = " ".join(str(j) for j in cert.occurrences[k])
        lines.append(f"item {k + 1}: literal {lit} clauses: {occ}".rstrip())
    return lines
