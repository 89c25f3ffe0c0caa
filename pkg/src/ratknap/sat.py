"""Three-literal CNF formulas, DIMACS text, and exhaustive deciders.

Literals follow the DIMACS convention: variable v is the literal `v`,
its negation `-v`.  Clauses hold exactly three literal occurrences;
repeats are allowed and count separately everywhere (a clause like
(x or x or not-x) has two occurrences of x).  Occurrence counts sum
both polarities of a variable.

Three decision modes are supported, all by scanning the 2^n valuations
in binary counting order: classical satisfiability (every clause has a
true occurrence), one-in-three (every clause has exactly one), and
all-the-same (every clause has the same number, possibly zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import ArityError, ParseError, ResourceLimitError, ShapeError

Literal = int
Clause = tuple[Literal, Literal, Literal]
Valuation = tuple[bool, ...]

DEFAULT_MAX_VARS = 25


class SatMode(Enum):
    SAT = "sat"
    ONE_IN_THREE = "one-in-three"
    ALL_SAME = "all-same"


@dataclass(frozen=True)
class Formula:
    """A 3-CNF formula over variables 1..n."""

    n: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ShapeError(f"negative variable count {self.n}")
        for clause in self.clauses:
            if len(clause) != 3:
                raise ArityError(f"clause {clause} does not have exactly 3 literals")
            for lit in clause:
                if lit == 0 or not 1 <= abs(lit) <= self.n:
                    raise ParseError(
                        f"literal {lit} out of range for {self.n} variables"
                    )

    @property
    def m(self) -> int:
        return len(self.clauses)

    @cached_property
    def occurrence_counts(self) -> tuple[int, ...]:
        """Occurrences per variable (index v-1), both polarities summed."""
        counts = [0] * self.n
        for clause in self.clauses:
            for lit in clause:
                counts[abs(lit) - 1] += 1
        return tuple(counts)

    @property
    def is_le4(self) -> bool:
        """True when every variable occurs at most four times."""
        return all(c <= 4 for c in self.occurrence_counts)


def parse_dimacs(text: str) -> Formula:
    """Parse DIMACS CNF; every clause must contain exactly three literals."""
    n = m = None
    tokens: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if n is not None:
                raise ParseError("duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"bad problem line: {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"bad problem line: {line!r}") from None
            continue
        if n is None:
            raise ParseError(f"clause data before problem line: {line!r}")
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError:
            raise ParseError(f"bad clause token in line: {line!r}") from None
    if n is None:
        raise ParseError("missing problem line")
    clauses: list[Clause] = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            if len(current) != 3:
                raise ArityError(
                    f"clause {tuple(current)} does not have exactly 3 literals"
                )
            clauses.append((current[0], current[1], current[2]))
            current = []
        else:
            current.append(tok)
    if current:
        raise ParseError("unterminated clause at end of input")
    if len(clauses) != m:
        raise ParseError(f"header declares {m} clauses, found {len(clauses)}")
    if not clauses:
        raise ParseError("empty formula")
    return Formula(n=n, clauses=tuple(clauses))


def to_dimacs(formula: Formula, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or []]
    lines.append(f"p cnf {formula.n} {formula.m}")
    for clause in formula.clauses:
        lines.append(" ".join(str(lit) for lit in clause) + " 0")
    return "\n".join(lines) + "\n"


def true_literal_counts(formula: Formula, valuation: Valuation) -> list[int]:
    """Per clause, how many literal occurrences the valuation makes true."""
    if len(valuation) != formula.n:
        raise ShapeError(
            f"valuation length {len(valuation)} != {formula.n} variables"
        )
    counts = []
    for clause in formula.clauses:
        counts.append(
            sum(1 for lit in clause if valuation[abs(lit) - 1] == (lit > 0))
        )
    return counts


def _mode_code(mode: SatMode) -> int:
    return {SatMode.SAT: 0, SatMode.ONE_IN_THREE: 1, SatMode.ALL_SAME: 2}[mode]


def valuation_from_index(k: int, n: int) -> Valuation:
    """Variable i is true iff bit i-1 of k is set."""
    return tuple(bool((k >> i) & 1) for i in range(n))


def brute_force_decide(
    formula: Formula, mode: SatMode, max_vars: int = DEFAULT_MAX_VARS
) -> Valuation | None:
    """First valuation (binary counting order) passing `mode`, or None.

    Refuses formulas with more than `max_vars` variables rather than
    silently scanning 2^n valuations.
    """
    if formula.n > max_vars:
        raise ResourceLimitError(
            f"{formula.n} variables exceed the enumeration guard of {max_vars}"
        )
    if formula.m == 0:
        return tuple([False] * formula.n)
    lit_var = np.array(
        [[abs(lit) - 1 for lit in clause] for clause in formula.clauses],
        dtype=np.int64,
    )
    lit_pos = np.array(
        [[1 if lit > 0 else 0 for lit in clause] for clause in formula.clauses],
        dtype=np.int64,
    )
    k = _kernels.sat_first_witness(lit_var, lit_pos, formula.n, _mode_code(mode))
    if k < 0:
        return None
    return valuation_from_index(int(k), formula.n)
