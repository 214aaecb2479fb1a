"""Command-line entry point.

Subcommands: reduce (rewrite into a monotone target class), validate
(profile check), solve (satisfiability verdict with witness),
verify-gadget (exhaustive forcing check of the 25-clause gadget), gen
(seeded random 3-SAT-4 instance), check-equisat (compare two formulas'
verdicts), blowup (CSV growth report over a seed range).

Stdout carries machine-readable results; diagnostics go to stderr.
Exit codes: 0 success or check holds, 1 check failed, 2 usage error,
3 malformed or unsuitable input.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence

from . import bench, dimacs
from .bench import GenConfig, GenerationError
from .dimacs import DimacsDocument, DimacsError
from .formula import FormulaError
from .profiles import PROFILES, check_profile
from .reduce import (
    FORCE_FALSE_GADGET,
    FORCE_TRUE_GADGET,
    FreshAllocator,
    ProfileError,
    eliminate_mixed,
    instantiate_gadget,
    to_monotone_3sat4,
    to_monotone_3sat5,
)
from .solve import VariableLimitError, check_equisat, solve_dpll, solve_exhaustive, verify_forcing

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _cmd_reduce(args: argparse.Namespace) -> int:
    if args.compact_r3 and args.target != "mono3sat5":
        print("error: --compact-r3 applies only to --target mono3sat5", file=sys.stderr)
        return EXIT_USAGE
    doc = dimacs.load(args.input)
    if args.target == "mono23sat4":
        out, trace = eliminate_mixed(doc.formula)
    elif args.target == "mono3sat5":
        out, trace = to_monotone_3sat5(doc.formula, compact=args.compact_r3)
    else:
        out, trace = to_monotone_3sat4(doc.formula)
    comments: tuple[str, ...] = ()
    if args.trace:
        comments = tuple(
            f"trace {index} {origin.rule} {origin.source}"
            for index, origin in enumerate(trace.provenance)
        )
    dimacs.dump(DimacsDocument(out, comments), args.output)
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace) -> int:
    doc = dimacs.load(args.input)
    report = check_profile(doc.formula, PROFILES[args.profile])
    for violation in report:
        print(violation)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_solve(args: argparse.Namespace) -> int:
    doc = dimacs.load(args.input)
    if args.method == "exhaustive":
        verdict = solve_exhaustive(doc.formula)
    else:
        verdict = solve_dpll(doc.formula)
    if verdict.satisfiable and verdict.witness is not None:
        print("SAT")
        parts = ["v"]
        parts.extend(
            str(v if verdict.witness[v] else -v) for v in range(1, doc.formula.num_vars + 1)
        )
        parts.append("0")
        print(" ".join(parts))
    else:
        print("UNSAT")
    return EXIT_OK


def _cmd_verify_gadget(args: argparse.Namespace) -> int:
    force_true = args.sign == "true"
    template = FORCE_TRUE_GADGET if force_true else FORCE_FALSE_GADGET
    clauses, designated = instantiate_gadget(template, FreshAllocator(1))
    report = verify_forcing(clauses, designated)
    print(f"sign: {args.sign}")
    print(f"designated: {designated}")
    print(f"satisfiable: {str(report.satisfiable).lower()}")
    print(f"model_count: {report.model_count}")
    print("forced_true:", " ".join(map(str, sorted(report.forced_true))) or "-")
    print("forced_false:", " ".join(map(str, sorted(report.forced_false))) or "-")
    expected = report.forced_true if force_true else report.forced_false
    holds = report.satisfiable and designated in expected
    print(f"forcing_holds: {str(holds).lower()}")
    return EXIT_OK if holds else EXIT_CHECK_FAILED


def _cmd_gen(args: argparse.Namespace) -> int:
    cfg = GenConfig(variable_count=args.vars, clause_count=args.clauses, seed=args.seed)
    formula = bench.generate(cfg)
    comment = f"gen vars={args.vars} clauses={args.clauses} seed={args.seed}"
    dimacs.dump(DimacsDocument(formula, (comment,)), args.output)
    return EXIT_OK


def _cmd_check_equisat(args: argparse.Namespace) -> int:
    original = dimacs.load(args.original).formula
    reduced = dimacs.load(args.reduced).formula
    same = check_equisat(original, reduced)
    print("equisatisfiable" if same else "not equisatisfiable")
    return EXIT_OK if same else EXIT_CHECK_FAILED


def _cmd_blowup(args: argparse.Namespace) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(bench.CSV_HEADER)
    for seed in range(args.seeds):
        formula = bench.generate(GenConfig(args.vars, args.clauses, seed))
        record = bench.blowup_report(formula)
        writer.writerows(bench.csv_rows(seed, record))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocnf",
        description="CNF reduction toolkit: monotone 3-SAT rewrites with bounded occurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="rewrite a DIMACS formula into a monotone target class")
    p.add_argument(
        "--target", required=True, choices=("mono23sat4", "mono3sat5", "mono3sat4"),
        help="output class to produce",
    )
    p.add_argument(
        "--compact-r3", action="store_true", dest="compact_r3",
        help="use the 17-clause 2-clause expansion (mono3sat5 only)",
    )
    p.add_argument("--trace", action="store_true", help="embed per-clause provenance comments")
    p.add_argument("input", help="input DIMACS CNF file")
    p.add_argument("output", help="output DIMACS CNF file")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("validate", help="check a DIMACS formula against a profile")
    p.add_argument("--profile", required=True, choices=sorted(PROFILES))
    p.add_argument("input", help="input DIMACS CNF file")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("solve", help="decide satisfiability and print a witness")
    p.add_argument(
        "--method", choices=("exhaustive", "dpll"), default="dpll",
        help="decision procedure (default: dpll)",
    )
    p.add_argument("input", help="input DIMACS CNF file")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify-gadget", help="exhaustively check the forcing gadget")
    p.add_argument(
        "--sign", choices=("true", "false"), default="true",
        help="which forcing direction to verify (default: true)",
    )
    p.set_defaults(handler=_cmd_verify_gadget)

    p = sub.add_parser("gen", help="generate a seeded random 3-SAT-4 instance")
    p.add_argument("--vars", type=int, required=True, help="number of variables (at least 3)")
    p.add_argument("--clauses", type=int, required=True, help="number of clauses")
    p.add_argument("--seed", type=int, required=True, help="64-bit generator seed")
    p.add_argument("output", help="output DIMACS CNF file")
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("check-equisat", help="compare the SAT verdicts of two formulas")
    p.add_argument("original", help="original DIMACS CNF file")
    p.add_argument("reduced", help="reduced DIMACS CNF file")
    p.set_defaults(handler=_cmd_check_equisat)

    p = sub.add_parser("blowup", help="emit a CSV growth report over a seed range")
    p.add_argument("--seeds", type=int, required=True, help="run seeds 0 through K-1")
    p.add_argument("--vars", type=int, required=True, help="variables per instance")
    p.add_argument("--clauses", type=int, required=True, help="clauses per instance")
    p.set_defaults(handler=_cmd_blowup)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DimacsError, FormulaError, ProfileError, VariableLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
