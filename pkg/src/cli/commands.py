"""
Command-line front end.

    quadsphere check FILE
    quadsphere classify FILE [--path P] [--backend B] [--tol T]
    quadsphere factorize FILE [--out PSI.json]
    quadsphere catalog list | show NAME | emit NAME FILE
    quadsphere verify FILE [--samples N] [--seed S] [--step H] [--tol T]

Standard output carries exactly one JSON document; the human-readable report
goes to standard error under --verbose. Exit codes follow ExitCode.
"""

import argparse
import asyncio
import json
import sys
from typing import Any, Dict, List, Optional

from ..catalog import get
from ..config.catalog_configs import ALL_ENTRIES
from ..errors import ParseError, QuadsphereError
from ..oracle import SamplePlan
from ..quadmap import check_spherical_polynomial, gray_toth_relations, symmetrized_matrices
from ..scalar import EXACT, ScalarBackend
from ..state.enums import BackendMode, ClassifyPath, ExitCode, Stage
from ..utils.log import configure_logging, get_logger
from ..workflow import run_certification
from .report import Report, render_text
from .serialization import dumps, emit_map, load_map_file, psi_file, write_text

logger = get_logger(__name__)


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with the parse code instead of argparse's 2."""

    def error(self, message: str):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadsphere", description="Certificates for quadratic maps between spheres")
    parser.add_argument("--verbose", "-v", action="store_true", help="progress and text report on stderr")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    check = commands.add_parser("check", help="certify |F|² = |x|⁴")
    check.add_argument("file")

    classify = commands.add_parser("classify", help="Harmonic / ProperBiharmonic / Neither")
    classify.add_argument("file")
    classify.add_argument("--path", choices=[p.value for p in ClassifyPath], default=ClassifyPath.BOTH.value)
    _add_backend_flags(classify)

    factorize = commands.add_parser("factorize", help="split a proper biharmonic map through S^{n−1}(1/√2)")
    factorize.add_argument("file")
    factorize.add_argument("--out", help="write ψ and the rotation to this file")
    _add_backend_flags(factorize)

    catalog = commands.add_parser("catalog", help="named maps")
    actions = catalog.add_subparsers(dest="action", required=True, parser_class=_Parser)
    actions.add_parser("list")
    show = actions.add_parser("show")
    show.add_argument("name")
    emit = actions.add_parser("emit")
    emit.add_argument("name")
    emit.add_argument("file")

    verify = commands.add_parser("verify", help="finite-difference falsifier")
    verify.add_argument("file")
    verify.add_argument("--samples", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--step", type=float, default=None)
    verify.add_argument("--tol", type=float, default=None)
    return parser


def _add_backend_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--backend", choices=[b.value for b in BackendMode], default=BackendMode.EXACT.value)
    parser.add_argument("--tol", type=float, default=None, help="float backend tolerance")


def _backend(args: argparse.Namespace) -> ScalarBackend:
    if getattr(args, "backend", BackendMode.EXACT.value) == BackendMode.FLOAT.value:
        return ScalarBackend.floating(args.tol)
    return EXACT


# ── output ──────────────────────────────────────────────────────
def _emit(document: Dict[str, Any], verbose: bool, text: Optional[str] = None) -> None:
    sys.stdout.write(json.dumps(document, indent=2, ensure_ascii=False) + "\n")
    if verbose and text:
        sys.stderr.write(text + "\n")


def _emit_report(report: Report, verbose: bool) -> int:
    _emit(report.model_dump(mode="json"), verbose, render_text(report))
    return report.exit_code


def _error_document(exc: QuadsphereError) -> Dict[str, Any]:
    return {"error": type(exc).__name__, "message": str(exc), "exit_code": int(exc.exit_code)}


async def _certify(args: argparse.Namespace, **kwargs) -> Report:
    backend = _backend(args)
    matrices, name = load_map_file(args.file, backend)
    state = await run_certification(raw_matrices=matrices, backend=backend, **kwargs)
    report = Report.model_validate(state["report"])
    if report.name is None:
        report.name = name
    return report


# ── commands ────────────────────────────────────────────────────
def cmd_check(args: argparse.Namespace) -> int:
    matrices, name = load_map_file(args.file)
    matrices = symmetrized_matrices(matrices, EXACT)
    certificate = check_spherical_polynomial(matrices, EXACT)
    relations = gray_toth_relations(matrices, EXACT, stop_at_first=True)
    errors: List[str] = []
    if not relations.holds:
        errors.append(f"sphericity: {relations.first_failure.describe()}")
    if certificate.spherical != relations.holds:
        errors.append("sphericity: polynomial certificate and Gray–Toth relations disagree")
        exit_code, stage = ExitCode.PATH_DISAGREEMENT, Stage.FAILED
    elif certificate.spherical:
        exit_code, stage = ExitCode.OK, Stage.SPHERICITY_CERTIFIED
    else:
        exit_code, stage = ExitCode.NOT_SPHERICAL, Stage.NOT_SPHERICAL
    report = Report(
        name=name,
        m=matrices[0].shape[0] - 1,
        n=len(matrices) - 1,
        backend=EXACT.mode.value,
        certified=True,
        stage=stage.value,
        exit_code=int(exit_code),
        spherical=certificate.spherical,
        sphericity=certificate.describe(),
        errors=errors,
    )
    return _emit_report(report, args.verbose)


def cmd_classify(args: argparse.Namespace) -> int:
    report = asyncio.run(_certify(args, path=args.path))
    return _emit_report(report, args.verbose)


def cmd_factorize(args: argparse.Namespace) -> int:
    backend = _backend(args)
    matrices, name = load_map_file(args.file, backend)
    state = asyncio.run(
        run_certification(raw_matrices=matrices, backend=backend, want_factorization=True)
    )
    report = Report.model_validate(state["report"])
    if report.name is None:
        report.name = name
    if args.out and state.get("factorization") is not None:
        write_text(args.out, dumps(psi_file(state["factorization"], report.name)))
        logger.info(f"  ψ written to {args.out}")
    return _emit_report(report, args.verbose)


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        entries = [
            {
                "name": config.name,
                "m": config.m,
                "n": config.n,
                "expected": config.expected.value,
                "provenance": config.provenance,
            }
            for config in ALL_ENTRIES
        ]
        text = "\n".join(
            f"  {e['name']:<20} S^{e['m']} → S^{e['n']}  {e['expected']}" for e in entries
        )
        _emit({"entries": entries}, args.verbose, text)
        return int(ExitCode.OK)

    if args.action == "show":
        state = asyncio.run(run_certification(name=args.name))
        return _emit_report(Report.model_validate(state["report"]), args.verbose)

    entry = get(args.name)
    write_text(args.file, emit_map(entry.map, entry.description or None))
    _emit({"name": entry.name, "m": entry.map.m, "n": entry.map.n, "file": args.file}, args.verbose)
    return int(ExitCode.OK)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        plan = SamplePlan.from_settings(args.samples, args.seed, args.step, args.tol)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    report = asyncio.run(_certify(args, path=ClassifyPath.CRITERION.value, sample_plan=plan))
    return _emit_report(report, args.verbose)


COMMANDS = {
    "check": cmd_check,
    "classify": cmd_classify,
    "factorize": cmd_factorize,
    "catalog": cmd_catalog,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    configure_logging(False)
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        return COMMANDS[args.command](args)
    except QuadsphereError as exc:
        logger.warning(f"FAILED: {type(exc).__name__}: {exc}")
        _emit(_error_document(exc), False)
        return int(exc.exit_code)
