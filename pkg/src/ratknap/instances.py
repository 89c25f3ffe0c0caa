"""Problem instances over nonnegative rationals, and their text format.

The five supported kinds share one type.  Profits exist only for the
knapsack kinds; the profit threshold may be omitted there (the
optimization form consumed by the approximation scheme).  Partition
instances carry no capacity: the target is implicitly half the total.

File format, one UTF-8 line each ('#' starts a comment anywhere):

    problem: <partition|subset-sum-01|subset-sum-unbounded|knapsack-01|knapsack-unbounded>
    capacity: <rational>        (absent for partition)
    threshold: <rational>       (knapsack kinds; optional)
    <weight> [<profit>]         (one item per line)

A witness is a single line of space-separated nonnegative integers,
one quantity per item.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import ParseError, ShapeError
from .rational import format_rational, parse_rational

Witness = tuple[int, ...]


class ProblemKind(Enum):
    PARTITION = "partition"
    SUBSET_SUM_01 = "subset-sum-01"
    SUBSET_SUM_UNBOUNDED = "subset-sum-unbounded"
    KNAPSACK_01 = "knapsack-01"
    KNAPSACK_UNBOUNDED = "knapsack-unbounded"


KNAPSACK_KINDS = frozenset({ProblemKind.KNAPSACK_01, ProblemKind.KNAPSACK_UNBOUNDED})
ZERO_ONE_KINDS = frozenset(
    {ProblemKind.PARTITION, ProblemKind.SUBSET_SUM_01, ProblemKind.KNAPSACK_01}
)


@dataclass(frozen=True)
class Instance:
    kind: ProblemKind
    weights: tuple[Fraction, ...]
    profits: tuple[Fraction, ...] | None = None
    capacity: Fraction | None = None
    threshold: Fraction | None = None

    def __post_init__(self) -> None:
        knapsack = self.kind in KNAPSACK_KINDS
        if knapsack != (self.profits is not None):
            raise ShapeError(f"profits must be present iff kind is a knapsack kind ({self.kind.value})")
        if self.threshold is not None and not knapsack:
            raise ShapeError(f"threshold not allowed for {self.kind.value}")
        if (self.kind is ProblemKind.PARTITION) == (self.capacity is not None):
            raise ShapeError(
                "capacity is required except for partition, which carries none"
            )
        if self.profits is not None and len(self.profits) != len(self.weights):
            raise ShapeError(
                f"{len(self.profits)} profits for {len(self.weights)} weights"
            )
        for w in self.weights:
            if w < 0:
                raise ShapeError(f"negative weight {w}")
        for v in self.profits or ():
            if v < 0:
                raise ShapeError(f"negative profit {v}")
        if self.capacity is not None and self.capacity < 0:
            raise ShapeError(f"negative capacity {self.capacity}")
        if self.threshold is not None and self.threshold < 0:
            raise ShapeError(f"negative threshold {self.threshold}")

    @property
    def size(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class SolveStats:
    """How a decision was reached: scaling factor, table shape, wall time."""

    alpha: int
    table_shape: tuple[int, ...]
    elapsed_s: float
    method: str


@dataclass(frozen=True)
class Decision:
    answer: bool
    witness: Witness | None
    stats: SolveStats = field(compare=False)

    def __post_init__(self) -> None:
        if self.answer != (self.witness is not None):
            raise ShapeError("witness must be present exactly on yes answers")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_instance(text: str) -> Instance:
    lines = [s for s in (_strip(line) for line in text.splitlines()) if s]
    if not lines:
        raise ParseError("empty instance file")
    head = lines[0]
    if not head.startswith("problem:"):
        raise ParseError(f"first line must be 'problem: <kind>', got {head!r}")
    kind_token = head.split(":", 1)[1].strip()
    try:
        kind = ProblemKind(kind_token)
    except ValueError:
        raise ParseError(f"unknown problem kind {kind_token!r}") from None
    pos = 1
    capacity = threshold = None
    if kind is not ProblemKind.PARTITION:
        if pos >= len(lines) or not lines[pos].startswith("capacity:"):
            raise ParseError("expected 'capacity: <rational>' line")
        capacity = parse_rational(lines[pos].split(":", 1)[1])
        pos += 1
    if kind in KNAPSACK_KINDS and pos < len(lines) and lines[pos].startswith("threshold:"):
        threshold = parse_rational(lines[pos].split(":", 1)[1])
        pos += 1
    weights: list[Fraction] = []
    profits: list[Fraction] = []
    for line in lines[pos:]:
        fields = line.split()
        if kind in KNAPSACK_KINDS:
            if len(fields) != 2:
                raise ParseError(f"knapsack items need '<weight> <profit>', got {line!r}")
            weights.append(parse_rational(fields[0]))
            profits.append(parse_rational(fields[1]))
        else:
            if len(fields) != 1:
                raise ParseError(f"items need a single weight, got {line!r}")
            weights.append(parse_rational(fields[0]))
    try:
        return Instance(
            kind=kind,
            weights=tuple(weights),
            profits=tuple(profits) if kind in KNAPSACK_KINDS else None,
            capacity=capacity,
            threshold=threshold,
        )
    except ShapeError as exc:
        raise ParseError(str(exc)) from exc


def format_instance(inst: Instance, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"problem: {inst.kind.value}")
    if inst.capacity is not None:
        lines.append(f"capacity: {format_rational(inst.capacity)}")
    if inst.threshold is not None:
        lines.append(f"threshold: {format_rational(inst.threshold)}")
    for i, w in enumerate(inst.weights):
        if inst.profits is not None:
            lines.append(f"{format_rational(w)} {format_rational(inst.profits[i])}")
        else:
            lines.append(format_rational(w))
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> Witness:
    fields = text.split()
    out = []
    for tok in fields:
        try:
            q = int(tok)
        except ValueError:
            raise ParseError(f"witness entries must be integers, got {tok!r}") from None
        if q < 0:
            raise ParseError(f"witness entries must be nonnegative, got {q}")
        out.append(q)
    return tuple(out)


def format_witness(witness: Witness) -> str:
    return " ".join(str(q) for q in witness)
