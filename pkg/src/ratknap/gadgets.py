"""Formula transformations linking the three SAT modes.

`one_in_three_gadget` rewrites each clause (x or y or z) into the three
clauses (-x or a or b), (b or y or c), (c or d or -z) over four fresh
variables, so that the input is satisfiable exactly when the output has
a valuation with one true occurrence per clause.  `all_same_gadget`
appends the single clause (x or x or -x) on a fresh variable, whose
true-occurrence count is always 1 or 2, turning the one-in-three
question into an all-the-same question.

Both transformations keep the at-most-four-occurrences property: the
gadget variables a and d occur once, b and c twice, the appended
variable three times, and original literal occurrences are unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OccurrenceBoundError
from .sat import Clause, Formula


@dataclass(frozen=True)
class ClauseProvenance:
    """Which output clauses replaced a source clause, and the fresh vars."""

    source_clause: int
    output_clauses: tuple[int, int, int]
    fresh_vars: tuple[int, int, int, int]


def one_in_three_gadget(
    formula: Formula, require_le4: bool = False
) -> tuple[Formula, tuple[ClauseProvenance, ...]]:
    """Rewrite into 3m clauses over n + 4m variables.

    With `require_le4` the input must already satisfy the four-occurrence
    bound (the output then satisfies it too).
    """
    if require_le4 and not formula.is_le4:
        raise OccurrenceBoundError(
            f"occurrence counts {formula.occurrence_counts} exceed 4"
        )
    clauses: list[Clause] = []
    provenance: list[ClauseProvenance] = []
    for j, (x, y, z) in enumerate(formula.clauses, start=1):
        base = formula.n + 4 * (j - 1)
        a, b, c, d = base + 1, base + 2, base + 3, base + 4
        clauses.append((-x, a, b))
        clauses.append((b, y, c))
        clauses.append((c, d, -z))
        provenance.append(
            ClauseProvenance(
                source_clause=j,
                output_clauses=(3 * j - 2, 3 * j - 1, 3 * j),
                fresh_vars=(a, b, c, d),
            )
        )
    out = Formula(n=formula.n + 4 * formula.m, clauses=tuple(clauses))
    return out, tuple(provenance)


def all_same_gadget(formula: Formula) -> tuple[Formula, int]:
    """Append (x or x or -x) on the fresh variable n + 1."""
    fresh = formula.n + 1
    out = Formula(
        n=fresh,
        clauses=formula.clauses + ((fresh, fresh, -fresh),),
    )
    return out, fresh
