import asyncio
import time
from typing import Any, Dict

from ..catalog import get
from ..errors import QuadsphereError
from ..oracle import run_oracle
from ..quadmap import (
    QuadraticSphericalMap,
    check_spherical_polynomial,
    classify,
    classify_by_criterion,
    classify_by_direct,
    eigenvalue_bound_check,
    energy_density,
    gray_toth_relations,
    harmonicity_tests,
    laplacian_f,
    reconcile,
    s_matrix,
    symmetrized_matrices,
)
from ..quadmap.linalg import norm_sq
from ..state.enums import ClassifyPath, ExitCode, Stage
from ..state.schema import CertificationState
from ..structure import factorize, locate_hypersphere, verify_trace_identity
from ..utils.log import get_logger

logger = get_logger(__name__)


def _failure(stage: str, exc: QuadsphereError) -> Dict[str, Any]:
    logger.warning(f"  FAILED: {stage} - {exc}")
    return {
        "errors": [f"{stage}: {exc}"],
        "exit_code": int(exc.exit_code),
        "current_stage": Stage.FAILED.value,
    }


async def init_node(state: CertificationState) -> Dict[str, Any]:
    """Resolve a catalog name, or symmetrize raw matrices."""
    logger.info("Running: init_node")
    backend = state["backend"]
    try:
        if state.get("name") is not None:
            entry = get(state["name"], backend)
            logger.info(f"  Map: {entry.name} (S^{entry.map.m} → S^{entry.map.n})")
            return {"quadmap": entry.map, "current_stage": Stage.INIT_COMPLETE.value}
        raw = symmetrized_matrices(state["raw_matrices"], backend)
    except QuadsphereError as exc:
        return _failure("init", exc)
    logger.info(f"  Raw input: {len(raw)} matrices of size {raw[0].shape[0]}")
    return {"raw_matrices": raw, "current_stage": Stage.INIT_COMPLETE.value}


async def sphericity_node(state: CertificationState) -> Dict[str, Any]:
    """
    Certify |F|² = |x|⁴ and cross-check with the five Gray–Toth relations.

    A negative certificate ends the pipeline with exit code NOT_SPHERICAL;
    disagreement between the two checks ends it with PATH_DISAGREEMENT.
    """
    logger.info("Running: sphericity_node")
    backend = state["backend"]
    qmap = state.get("quadmap")
    matrices = qmap.matrices if qmap is not None else state["raw_matrices"]

    certificate = check_spherical_polynomial(matrices, backend)
    relations = gray_toth_relations(matrices, backend, stop_at_first=True)
    if certificate.spherical != relations.holds:
        message = "polynomial certificate and Gray–Toth relations disagree"
        logger.warning(f"  FAILED: sphericity - {message}")
        return {
            "sphericity": certificate,
            "errors": [f"sphericity: {message}"],
            "exit_code": int(ExitCode.PATH_DISAGREEMENT),
            "current_stage": Stage.FAILED.value,
        }

    if not certificate.spherical:
        message = certificate.describe()
        if relations.first_failure is not None:
            message += f"; {relations.first_failure.describe()}"
        logger.warning(f"  FAILED: sphericity - {message}")
        return {
            "sphericity": certificate,
            "errors": [f"sphericity: {message}"],
            "exit_code": int(ExitCode.NOT_SPHERICAL),
            "current_stage": Stage.NOT_SPHERICAL.value,
        }

    if qmap is None:
        try:
            qmap = QuadraticSphericalMap.from_matrices(matrices, backend)
        except QuadsphereError as exc:
            failure = _failure("sphericity", exc)
            failure["sphericity"] = certificate
            return failure

    logger.info("  DONE: sphericity certified")
    return {
        "quadmap": qmap,
        "sphericity": certificate,
        "current_stage": Stage.SPHERICITY_CERTIFIED.value,
    }


def _invariants(qmap: QuadraticSphericalMap) -> Dict[str, Any]:
    backend = qmap.backend
    s = s_matrix(qmap)
    lap = laplacian_f(qmap)
    lowest, bound_ok = eigenvalue_bound_check(qmap)
    return {
        "s_matrix": s,
        "laplacian": lap,
        "laplacian_norm_sq": norm_sq(lap, backend),
        "energy_density": energy_density(qmap).constant,
        "trace_identity_residual": verify_trace_identity(qmap),
        "harmonicity_tests": harmonicity_tests(qmap),
        "min_eigenvalue": lowest,
        "eigenvalue_bound": bound_ok,
        "hypersphere": locate_hypersphere(qmap),
    }


async def invariants_node(state: CertificationState) -> Dict[str, Any]:
    """S, Δ₀F, energy density and the trace identity."""
    logger.info("Running: invariants_node")
    qmap = state["quadmap"]
    start_time = time.time()
    invariants = await asyncio.to_thread(_invariants, qmap)
    errors = []
    if not qmap.backend.is_zero(invariants["trace_identity_residual"]):
        errors.append("invariants: trace identity residual is nonzero")
    if not invariants["harmonicity_tests"].consistent:
        errors.append("invariants: harmonicity tests disagree")
    if not invariants["eigenvalue_bound"]:
        errors.append(f"invariants: λ_min(S) = {invariants['min_eigenvalue']:.3g} < 1")
    if errors:
        logger.warning(f"  FAILED: invariants - {len(errors)} identity check(s) failed")
        return {
            "invariants": invariants,
            "errors": errors,
            "exit_code": int(ExitCode.PATH_DISAGREEMENT),
            "current_stage": Stage.FAILED.value,
        }
    logger.info(f"  DONE: invariants ({time.time() - start_time:.1f}s)")
    return {
        "invariants": invariants,
        "current_stage": Stage.INVARIANTS_COMPLETE.value,
    }


async def classify_node(state: CertificationState) -> Dict[str, Any]:
    """
    Run the requested classification route(s).

    With path=both the criterion and direct routes run in parallel and
    must agree.
    """
    logger.info("Running: classify_node")
    qmap = state["quadmap"]
    path = ClassifyPath(state["path"])
    start_time = time.time()
    try:
        if path is ClassifyPath.BOTH:
            criterion, direct = await asyncio.gather(
                asyncio.to_thread(classify_by_criterion, qmap),
                asyncio.to_thread(classify_by_direct, qmap),
            )
            result = reconcile(criterion, direct)
        else:
            result = await asyncio.to_thread(classify, qmap, path)
    except QuadsphereError as exc:
        return _failure("classify", exc)
    logger.info(f"  DONE: classify - {result.verdict.value} ({time.time() - start_time:.1f}s)")
    return {"classification": result, "current_stage": Stage.CLASSIFIED.value}


async def factorize_node(state: CertificationState) -> Dict[str, Any]:
    logger.info("Running: factorize_node")
    try:
        result = await asyncio.to_thread(factorize, state["quadmap"], state["classification"])
    except QuadsphereError as exc:
        return _failure("factorize", exc)
    errors = []
    if not result.psi_harmonic:
        errors.append("factorize: ψ is not traceless")
    logger.info(f"  DONE: factorize - r² = {state['backend'].format(result.radius_sq)}")
    return {"factorization": result, "errors": errors, "current_stage": Stage.FACTORIZED.value}


async def verify_node(state: CertificationState) -> Dict[str, Any]:
    """Numerical falsifier; its outcome never changes the verdict."""
    logger.info("Running: verify_node")
    start_time = time.time()
    report = await asyncio.to_thread(run_oracle, state["quadmap"], state["sample_plan"])
    if not report.passed:
        logger.warning("  FAILED: verify - oracle outside tolerance")
        return {
            "oracle_report": report,
            "errors": ["verify: oracle checks outside tolerance"],
            "exit_code": int(ExitCode.ORACLE_FAILURE),
            "current_stage": Stage.FAILED.value,
        }
    logger.info(f"  DONE: verify ({time.time() - start_time:.1f}s)")
    return {"oracle_report": report, "current_stage": Stage.VERIFIED.value}


async def output_node(state: CertificationState) -> Dict[str, Any]:
    """Assemble the structured report and settle the final stage."""
    from ..cli.report import build_report

    logger.info("Running: output_node")
    errors = state.get("errors", [])
    failed = state.get("exit_code", 0) != int(ExitCode.OK)
    stage = state.get("current_stage") if failed else Stage.COMPLETE.value
    report = build_report(state)
    if errors:
        logger.info(f"Total errors encountered: {len(errors)}")
    return {"report": report.model_dump(mode="json"), "current_stage": stage}
