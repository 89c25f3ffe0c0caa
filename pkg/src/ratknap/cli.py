"""Command-line pipeline: primes, gadgets, reduction, solving, approximation.

Exit codes: 0 when a command ran to a decision (including "NO" and
"INVALID"), 2 on malformed input or usage, 3 when a resource budget
was exceeded.  Every file argument accepts '-' for standard input.
"""

from __future__ import annotations

import argparse
import sys

from .errors import InvalidWitnessError, RatknapError, ResourceLimitError
from .fptas import knapsack_fptas
from .gadgets import all_same_gadget, one_in_three_gadget
from .instances import format_instance, format_witness, parse_instance, parse_witness
from .primes import first_n_primes, unary_size_of_first_primes
from .rational import format_rational, parse_rational
from .reduction import (
    as_partition_instance,
    as_subset_sum_instance,
    build_instance,
    certificate_comments,
)
from .sat import parse_dimacs, to_dimacs
from .solvers import decide, measure_sizes, oracle_decide, verify_witness


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _cmd_primes(args: argparse.Namespace) -> int:
    if args.unary_size:
        print(unary_size_of_first_primes(args.n))
    else:
        print(" ".join(str(p) for p in first_n_primes(args.n)))
    return 0


def _cmd_gadget(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read(args.cnf))
    if args.kind == "one-in-three":
        out, provenance = one_in_three_gadget(formula)
        comments = [
            f"gadget {p.source_clause} -> clauses {p.output_clauses[0]}.."
            f"{p.output_clauses[2]} vars a={p.fresh_vars[0]} b={p.fresh_vars[1]} "
            f"c={p.fresh_vars[2]} d={p.fresh_vars[3]}"
            for p in provenance
        ]
    else:
        out, fresh = all_same_gadget(formula)
        comments = [f"gadget all-same -> clause {out.m} var x={fresh}"]
    sys.stdout.write(to_dimacs(out, comments))
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read(args.cnf))
    reduced = build_instance(formula)
    if args.partition:
        inst = as_partition_instance(reduced)
    else:
        inst = as_subset_sum_instance(reduced)
    sys.stdout.write(
        format_instance(inst, comments=certificate_comments(reduced.certificate))
    )
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    decision = oracle_decide(inst) if args.oracle else decide(inst)
    if decision.answer:
        print("YES")
        print(format_witness(decision.witness))
    else:
        print("NO")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    witness = parse_witness(_read(args.witness))
    try:
        ok = verify_witness(inst, witness)
    except InvalidWitnessError:
        ok = False
    print("VALID" if ok else "INVALID")
    return 0


def _cmd_approx(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    result = knapsack_fptas(inst, parse_rational(args.rho))
    print(format_witness(result.subset))
    print(f"profit: {format_rational(result.achieved_profit)}")
    return 0


def _cmd_size(args: argparse.Namespace) -> int:
    report = measure_sizes(parse_instance(_read(args.instance)))
    print("binary,unary,scaled_binary,scaled_unary,alpha")
    print(
        f"{report.binary},{report.unary},{report.scaled_binary},"
        f"{report.scaled_unary},{report.alpha}"
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratknap",
        description="Rational subset-sum/knapsack toolbox: SAT gadgets, "
        "prime-weight reductions, exact solvers, and approximation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("primes", help="print the first n primes")
    p.add_argument("n", type=int)
    p.add_argument(
        "--unary-size",
        action="store_true",
        help="print only the total unary digit count",
    )
    p.set_defaults(func=_cmd_primes)

    p = sub.add_parser("gadget", help="transform a 3-CNF formula")
    p.add_argument("kind", choices=["one-in-three", "all-same"])
    p.add_argument("cnf", help="DIMACS file ('-' for stdin)")
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser(
        "reduce", help="build the rational instance for a 3-CNF<=4 formula"
    )
    p.add_argument("cnf", help="DIMACS file ('-' for stdin)")
    p.add_argument(
        "--partition",
        action="store_true",
        help="emit a partition instance instead of unbounded subset sum",
    )
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("solve", help="decide an instance file")
    p.add_argument("instance", help="instance file ('-' for stdin)")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="use the exhaustive enumeration path instead of the tables",
    )
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a witness against an instance")
    p.add_argument("instance")
    p.add_argument("witness", help="witness file ('-' for stdin)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("approx", help="approximate a knapsack-01 optimum")
    p.add_argument("instance")
    p.add_argument("--rho", required=True, help="relative performance in (0,1)")
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("size", help="print size measures as CSV")
    p.add_argument("instance")
    p.set_defaults(func=_cmd_size)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (RatknapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
