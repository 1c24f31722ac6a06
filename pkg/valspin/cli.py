"""Command-line interface for valspin.

Prints characters, decompositions, the valuation tables and the curvature
checks as aligned ASCII tables or, with ``--json``, as one JSON document
``{"command": ..., "inputs": ..., "result": ...}``.

Exit Codes:
    0: Success
    1: Computation error, invalid input or a failed identity check
    2: Usage error (raised by argparse)
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any, TextIO

import numpy as np

from valspin import __version__
from valspin.lie_type_b import (
    ExteriorPower,
    HighestWeight,
    IrreducibleRepresentation,
    decompose,
    named_representation,
)
from valspin.logging_conf import configure_logging
from valspin.octgeo import (
    REFERENCE_PLANES,
    KlainIdentityReport,
    klain_identity_check,
    model_for,
    random_orthonormal_pair,
)
from valspin.ports import AbstractRepresentation
from valspin.valdim import SPHERE_DIMENSION, default_tables

logger = logging.getLogger(__name__)

ALGEBRAS = {"B3": 3, "B4": 4}
SPACES = ("cpn", "hpn", "op2")
REPRESENTATIONS = ("standard", "spin", "sum")

# Part of the b-table and the so(7) table printed by default
PRINTED_DEGREES = 8
# Λ^k lists printed by the ASCII report
PRINTED_EXTERIOR = 8

DEFAULT_SAMPLES = 100
DEFAULT_N = 2


@dataclass
class CommandResult:
    """Machine-readable result and its ASCII rendering."""

    result: Any
    text: str
    ok: bool = True


def parse_weight(text: str) -> HighestWeight:
    """argparse type for ``--weight``."""
    try:
        return HighestWeight.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_vector(text: str) -> tuple[float, ...]:
    """argparse type for comma-separated real coordinates."""
    try:
        values = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"Invalid vector {text!r}: expected comma-separated numbers"
        ) from None
    if not all(np.isfinite(values)):
        raise argparse.ArgumentTypeError(f"Vector {text!r} has non-finite entries")
    return values


def non_negative_int(text: str) -> int:
    """argparse type for degrees and counts."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"Expected a non-negative integer, got {value}")
    return value


def positive_int(text: str) -> int:
    """argparse type for sample counts and dimensions."""
    value = non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("Expected a positive integer, got 0")
    return value


def format_grid(corner: str, columns: Sequence[Any], rows: Sequence[tuple[str, Sequence[Any]]]) -> str:
    """Right-aligned table with a header row and labelled rows."""
    labels = [corner] + [label for label, _ in rows]
    label_width = max(len(label) for label in labels)
    cells = [[str(c) for c in columns]] + [[str(v) for v in values] for _, values in rows]
    width = max(len(cell) for row in cells for cell in row)
    lines = []
    for label, row in zip(labels, cells):
        lines.append(label.ljust(label_width) + " " + " ".join(cell.rjust(width) for cell in row))
    return "\n".join(lines)


def _rank(args: argparse.Namespace) -> int:
    return ALGEBRAS[args.algebra]


def _summands_text(summands: list[dict[str, Any]]) -> str:
    if not summands:
        return "0"
    parts = []
    for item in summands:
        weight = "[" + ",".join(item["weight"]) + "]"
        parts.append(f"Γ{weight}" if item["mult"] == 1 else f"{item['mult']}Γ{weight}")
    return " ⊕ ".join(parts)


def _representation(args: argparse.Namespace) -> AbstractRepresentation:
    rank = _rank(args)
    if args.weight is None:
        return named_representation(rank, args.rep)
    if args.weight.rank != rank:
        raise ValueError(
            f"Weight {args.weight} has {args.weight.rank} entries but {args.algebra} has rank {rank}"
        )
    return IrreducibleRepresentation(args.weight)


def cmd_char(args: argparse.Namespace) -> CommandResult:
    rep = _representation(args)
    if args.k is not None:
        rep = ExteriorPower(rep, args.k)
    character = rep.character()
    result = {
        "representation": rep.label,
        "dimension": character.evaluate_at_one(),
        "terms": character.to_dict(),
    }
    text = f"Char({rep.label}) =\n{character}\ndim = {result['dimension']}"
    return CommandResult(result, text)


def cmd_exterior(args: argparse.Namespace) -> CommandResult:
    if args.k is None:
        raise ValueError("exterior needs --k")
    return cmd_char(args)


def cmd_decompose(args: argparse.Namespace) -> CommandResult:
    rep = _representation(args)
    if args.k is not None:
        rep = ExteriorPower(rep, args.k)
    decomposition = decompose(rep.character(), rep.rank)
    summands = decomposition.to_list()
    result = {"k": args.k, "summands": summands}
    text = f"{rep.label} = {_summands_text(summands)}"
    return CommandResult(result, text)


def cmd_bk(args: argparse.Namespace) -> CommandResult:
    tables = default_tables()
    if args.k is not None:
        value = tables.compute_bk(args.k)
        return CommandResult({"k": args.k, "bk": value}, str(value))
    values = tables.bk_table()
    text = format_grid("k", range(len(values)), [("b_k", values)])
    return CommandResult({"bk": values}, text)


def cmd_bkl(args: argparse.Namespace) -> CommandResult:
    tables = default_tables()
    if args.k is not None and args.l is not None:
        value = tables.compute_bkl(args.k, args.l)
        return CommandResult({"k": args.k, "l": args.l, "bkl": value}, str(value))
    size = SPHERE_DIMENSION + 1 if args.full else PRINTED_DEGREES
    table = [row[:size] for row in tables.bkl_table()[:size]]
    text = format_grid("l\\k", range(size), [(str(l), [table[k][l] for k in range(size)]) for l in range(size)])
    return CommandResult({"bkl": table}, text)


def cmd_valdim(args: argparse.Namespace) -> CommandResult:
    tables = default_tables()
    if args.k is not None:
        value = tables.val_dimension(args.k)
        return CommandResult({"k": args.k, "dimension": value}, str(value))
    dimensions = tables.dimensions()
    text = " ".join(str(d) for d in dimensions)
    return CommandResult({"dimensions": dimensions, "total": sum(dimensions)}, text)


def cmd_report(args: argparse.Namespace) -> CommandResult:
    report = default_tables().full_report()
    size = PRINTED_DEGREES
    sections = [
        "dim Val_k^Spin(9), k = 0..16",
        format_grid("k", range(len(report.dimensions)), [("dim", report.dimensions)]),
        f"total = {report.total}",
        "",
        "b_k",
        format_grid("k", range(len(report.bk)), [("b_k", report.bk)]),
        "",
        "b_{k,l}",
        format_grid(
            "l\\k", range(size), [(str(l), [report.bkl[k][l] for k in range(size)]) for l in range(size)]
        ),
        "",
        "so(7) multiplicities in Λ^i(O' ⊕ O)",
        format_grid(
            "weight \\ i",
            range(size),
            [(str(w), row[:size]) for w, row in zip(report.so7_weights, report.so7_table)],
        ),
        "",
        "Λ^k of the so(9) spin representation",
    ]
    for k, decomposition in enumerate(report.spin9_decompositions[: PRINTED_EXTERIOR + 1]):
        sections.append(f"Λ^{k} = {decomposition}")
    sections.append("")
    sections.append("checks")
    for name, ok in report.checks.items():
        sections.append(f"  {name}: {'ok' if ok else 'FAILED'}")
    return CommandResult(report.to_dict(), "\n".join(sections), ok=report.consistent)


def _vectors(args: argparse.Namespace) -> tuple[np.ndarray, np.ndarray] | None:
    if args.u is None and args.v is None:
        return None
    if args.u is None or args.v is None:
        raise ValueError("Both --u and --v are required")
    return np.array(args.u), np.array(args.v)


def cmd_curvature(args: argparse.Namespace) -> CommandResult:
    vectors = _vectors(args)
    if vectors is None:
        raise ValueError("curvature needs --u and --v")
    u, v = vectors
    model = model_for(args.space, u.size)
    value = model.sectional_curvature(u, v)
    return CommandResult({"space": args.space, "curvature": value}, repr(value))


def _check_line(label: str, report: KlainIdentityReport) -> str:
    return (
        f"{label}: K = {report.curvature:.15g}, identity = {report.combination:.15g} "
        f"[{'ok' if report.holds else 'FAILED'}]"
    )


def cmd_check(args: argparse.Namespace) -> CommandResult:
    vectors = _vectors(args)
    planes: list[tuple[str, np.ndarray, np.ndarray]]
    if vectors is not None:
        planes = [("plane", *vectors)]
    elif args.space == "op2":
        planes = [(name, u, v) for name, (u, v, _) in REFERENCE_PLANES.items()]
    else:
        rng = np.random.default_rng(args.seed)
        dim = 2 * args.n if args.space == "cpn" else 4 * args.n
        planes = [(f"sample {i}", *random_orthonormal_pair(rng, dim)) for i in range(args.samples)]

    reports = [(label, klain_identity_check(args.space, u, v)) for label, u, v in planes]
    passed = sum(report.holds for _, report in reports)
    identity = reports[0][1].identity if reports else ""
    lines = [identity] + [_check_line(label, report) for label, report in reports]
    lines.append(f"{passed}/{len(reports)} planes satisfy the identity")
    result = {
        "space": args.space,
        "identity": identity,
        "planes": [dict(report.to_dict(), label=label) for label, report in reports],
        "passed": passed,
        "total": len(reports),
    }
    return CommandResult(result, "\n".join(lines), ok=passed == len(reports))


def _inputs(args: argparse.Namespace) -> dict[str, Any]:
    skipped = {"json", "handler", "command"}
    inputs = {}
    for key, value in sorted(vars(args).items()):
        if key in skipped or value is None:
            continue
        if isinstance(value, HighestWeight):
            value = value.entries()
        elif isinstance(value, tuple):
            value = list(value)
        inputs[key] = value
    return inputs


def run(args: argparse.Namespace, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Execute a parsed command.

    Args:
        args: Parsed command-line arguments.
        out: Output stream (default stdout).
        err: Error stream (default stderr).

    Returns:
        Exit code (0 for success, 1 for error).
    """
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    handler: Callable[[argparse.Namespace], CommandResult] = args.handler
    try:
        outcome = handler(args)
    except ValueError as e:
        print(f"Error: {e}", file=err)
        logger.error("[CLI] Error in %s: %s", args.command, e)
        return 1
    except Exception as e:
        print(f"Unexpected error: {e}", file=err)
        logger.exception("[CLI] Unexpected error in %s", args.command)
        return 1

    if args.json:
        document = {"command": args.command, "inputs": _inputs(args), "result": outcome.result}
        print(json.dumps(document, separators=(",", ":")), file=out)
    else:
        print(outcome.text, file=out)
    if not outcome.ok:
        logger.error("[CLI] %s finished with failed checks", args.command)
        return 1
    logger.info("[CLI] %s finished", args.command)
    return 0


def create_argument_parser() -> argparse.ArgumentParser:
    """Create and configure the argument parser.

    Returns:
        Configured ArgumentParser instance.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit a single JSON document")
    common.add_argument(
        "--algebra",
        choices=sorted(ALGEBRAS),
        default="B4",
        help="Lie algebra so(7) = B3 or so(9) = B4 (default: B4)",
    )

    rep_options = argparse.ArgumentParser(add_help=False)
    rep_options.add_argument("--weight", type=parse_weight, help="Highest weight, e.g. 3/2,1/2,1/2,1/2")
    rep_options.add_argument(
        "--rep",
        choices=REPRESENTATIONS,
        default="spin",
        help="Named representation when no --weight is given (default: spin)",
    )
    rep_options.add_argument("--k", type=non_negative_int, help="Exterior degree")

    plane_options = argparse.ArgumentParser(add_help=False)
    plane_options.add_argument("space", choices=SPACES, help="Projective space")
    plane_options.add_argument("--u", type=parse_vector, help="First vector, comma-separated")
    plane_options.add_argument("--v", type=parse_vector, help="Second vector, comma-separated")

    parser = argparse.ArgumentParser(
        prog="valspin",
        description="Spin(9)-invariant valuations: characters, tables and curvature checks.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  valspin valdim
  valspin decompose --algebra B4 --rep spin --k 2 --json
  valspin curvature op2 --u 1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0 \\
                        --v 0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0
  valspin check cpn --n 3 --samples 100 --seed 7

Exit Codes:
  0: Success
  1: Computation error or failed check
  2: Usage error
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    sub = commands.add_parser("char", parents=[common, rep_options], help="Character of a representation")
    sub.set_defaults(handler=cmd_char)
    sub = commands.add_parser("exterior", parents=[common, rep_options], help="Character of Λ^k")
    sub.set_defaults(handler=cmd_exterior)
    sub = commands.add_parser(
        "decompose", parents=[common, rep_options], help="Decomposition into irreducibles"
    )
    sub.set_defaults(handler=cmd_decompose)

    sub = commands.add_parser("bk", parents=[common], help="b_k = dim (Λ^k O²)^Spin(9)")
    sub.add_argument("--k", type=non_negative_int, help="Single degree (default: all)")
    sub.set_defaults(handler=cmd_bk)
    sub = commands.add_parser("bkl", parents=[common], help="b_{k,l} table")
    sub.add_argument("--k", type=non_negative_int, help="Row index")
    sub.add_argument("--l", type=non_negative_int, help="Column index")
    sub.add_argument("--full", action="store_true", help="Print all of 0..15 instead of 0..7")
    sub.set_defaults(handler=cmd_bkl)
    sub = commands.add_parser("valdim", parents=[common], help="dim Val_k^Spin(9)")
    sub.add_argument("--k", type=non_negative_int, help="Single degree (default: all)")
    sub.set_defaults(handler=cmd_valdim)
    sub = commands.add_parser("report", parents=[common], help="All tables and consistency checks")
    sub.set_defaults(handler=cmd_report)

    sub = commands.add_parser(
        "curvature", parents=[common, plane_options], help="Sectional curvature of a plane"
    )
    sub.set_defaults(handler=cmd_curvature)
    sub = commands.add_parser(
        "check", parents=[common, plane_options], help="Check the curvature identity"
    )
    sub.add_argument(
        "--samples",
        type=positive_int,
        default=DEFAULT_SAMPLES,
        help=f"Random planes when no vectors are given (default: {DEFAULT_SAMPLES})",
    )
    sub.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    sub.add_argument(
        "--n",
        type=positive_int,
        default=DEFAULT_N,
        help=f"Complex or quaternionic dimension for sampling (default: {DEFAULT_N})",
    )
    sub.set_defaults(handler=cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> None:
    """Main entry point for the CLI application."""
    log_config = configure_logging()

    if log_config["reconfigured"]:
        logger.info("[CLI] Logging configured: %s", log_config)

    parser = create_argument_parser()
    args = parser.parse_args(argv)
    sys.exit(run(args))


if __name__ == "__main__":
    main()
