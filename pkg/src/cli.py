"""
Command-line front end - Unitary Cayley.

Commands:
    spectrum N        closed-form spectrum of X_N
    charpoly N        characteristic polynomial
    minpoly N         minimal polynomial
    det N             determinant
    check N PROP      brute force against characterization (dr, srg, ...)
    basis N           disjoint 0/1 basis of the adjacency algebra
    verify MIN MAX    full cross-check sweep, report written to --output

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
Logs go to stderr so stdout stays machine-readable.
"""

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from src.config import settings
from src.domain.constants import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE
from src.domain.exceptions import UnitaryCayleyError
from src.domain.models import CheckProperty, OutputFormat, SweepReport, format_factored
from src.services.arith import check_positive
from src.services.coherent import algebra_basis
from src.services.spectra import (
    characteristic_polynomial,
    determinant_closed,
    minimal_polynomial,
    unitary_spectrum,
)
from src.services.verification import check_property, run_sweep
from src.utils.logger import logger, setup_logging


# ============================================================================
# Argument parsing
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TABLE.value,
        help="Output format (default: table)",
    )
    common.add_argument("--output", help="Write output to this file instead of stdout")
    common.add_argument("--max-n", type=int, dest="max_n", help="Override the n ceiling")
    common.add_argument("--debug", action="store_true", help="Console logs at DEBUG level")

    parser = argparse.ArgumentParser(
        prog="unitary-cayley",
        description="Exact spectra and coherent algebras of unitary Cayley graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("spectrum", "Spectrum of X_n as (eigenvalue, multiplicity) pairs"),
        ("charpoly", "Characteristic polynomial of X_n"),
        ("minpoly", "Minimal polynomial of X_n"),
        ("det", "Determinant of A(X_n)"),
        ("basis", "Disjoint 0/1 basis of the adjacency algebra of X_n"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("n", type=int)

    check = sub.add_parser("check", parents=[common], help="Brute-force property check")
    check.add_argument("n", type=int)
    check.add_argument("property", choices=[p.value for p in CheckProperty])

    verify = sub.add_parser("verify", parents=[common], help="Cross-check sweep over a range")
    verify.add_argument("n_min", type=int)
    verify.add_argument("n_max", type=int)
    verify.add_argument("--workers", type=int, default=1, help="Worker processes")

    return parser


# ============================================================================
# Commands
# ============================================================================

def _is_json(args: argparse.Namespace) -> bool:
    return bool(args.format == OutputFormat.JSON.value)


def _dumps(payload: dict[str, object]) -> str:
    return json.dumps(payload, separators=(",", ":"))


def cmd_spectrum(args: argparse.Namespace) -> tuple[str, int]:
    spectrum = unitary_spectrum(args.n)
    if _is_json(args):
        return spectrum.model_dump_json(), EXIT_OK
    lines = [f"{'eigenvalue':>12}  {'multiplicity':>12}"]
    lines += [f"{value:>12}  {mult:>12}" for value, mult in spectrum.pairs]
    return "\n".join(lines), EXIT_OK


def cmd_charpoly(args: argparse.Namespace) -> tuple[str, int]:
    pairs = unitary_spectrum(args.n).pairs
    factored = format_factored(pairs)
    if not _is_json(args):
        return factored, EXIT_OK
    payload: dict[str, object] = {"n": args.n, "factored": factored}
    if args.n <= settings.oracle_charpoly_max_n:
        payload["coefficients"] = list(characteristic_polynomial(args.n).coeffs)
    return _dumps(payload), EXIT_OK


def cmd_minpoly(args: argparse.Namespace) -> tuple[str, int]:
    spectrum = unitary_spectrum(args.n)
    factored = format_factored([(v, 1) for v in spectrum.distinct])
    if not _is_json(args):
        return factored, EXIT_OK
    poly = minimal_polynomial(args.n)
    payload = {
        "n": args.n,
        "factored": factored,
        "degree": poly.degree,
        "coefficients": list(poly.coeffs),
    }
    return _dumps(payload), EXIT_OK


def cmd_det(args: argparse.Namespace) -> tuple[str, int]:
    det = determinant_closed(args.n)
    if _is_json(args):
        return _dumps({"n": args.n, "det": det}), EXIT_OK
    return str(det), EXIT_OK


def cmd_check(args: argparse.Namespace) -> tuple[str, int]:
    verdict = check_property(args.n, CheckProperty(args.property))
    code = EXIT_OK if verdict.agree else EXIT_MISMATCH
    if _is_json(args):
        return verdict.model_dump_json(), code
    return verdict.render(), code


def cmd_basis(args: argparse.Namespace) -> tuple[str, int]:
    basis = algebra_basis(args.n)
    if _is_json(args):
        return _dumps({"n": basis.n, "members": [m.to_json() for m in basis.members]}), EXIT_OK
    lines = [f"{m.label}: {m.to_json()['connection_set']}" for m in basis.members]
    return "\n".join(lines), EXIT_OK


def _summarize(report: SweepReport, path: str) -> str:
    n_min, n_max = report.n_range
    s = report.summary
    lines = [
        f"range: {n_min}..{n_max}",
        f"total: {s.total}  passed: {s.passed}  failed: {s.failed}  errata: {s.errata}",
    ]
    for case in report.per_n:
        if case.failures:
            lines.append(f"n={case.n} FAILED: {', '.join(case.failures)}")
    for case in report.per_n:
        if case.erratum:
            lines.append(f"n={case.n} erratum detected: {case.erratum_detail}")
    lines.append(f"report written to {path}")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    report = run_sweep(args.n_min, args.n_max, max_n=args.max_n, workers=args.workers)
    path = args.output or settings.report_path
    Path(path).write_text(report.to_json() + "\n", encoding="utf-8")
    code = EXIT_OK if report.ok else EXIT_MISMATCH
    if _is_json(args):
        return report.to_json(), code
    return _summarize(report, path), code


COMMANDS = {
    "spectrum": cmd_spectrum,
    "charpoly": cmd_charpoly,
    "minpoly": cmd_minpoly,
    "det": cmd_det,
    "check": cmd_check,
    "basis": cmd_basis,
    "verify": cmd_verify,
}


# ============================================================================
# Entry point
# ============================================================================

def _check_n(args: argparse.Namespace) -> None:
    if args.command == "verify":
        return
    check_positive(args.n, args.command)
    if args.max_n is not None and args.n > args.max_n:
        raise UnitaryCayleyError(f"{args.command}: n={args.n} exceeds --max-n {args.max_n}")


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging(
        debug=args.debug or settings.debug,
        level="DEBUG" if args.debug else settings.log_level,
    )

    try:
        _check_n(args)
        text, code = COMMANDS[args.command](args)
    except ValueError as e:
        logger.error("cli_usage_error", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if args.output and args.command != "verify":
        Path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
