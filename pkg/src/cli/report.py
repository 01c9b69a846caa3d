"""
The structured report and its text rendering.

build_report reads a finished CertificationState; render_text prints the same
fields in the sectioned console layout.
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from ..oracle import OracleReport
from ..quadmap import energy_note
from ..state.enums import ExitCode
from ..state.schema import CertificationState
from .serialization import encode_matrix, encode_scalar

WIDTH = 70


class FactorizationSummary(BaseModel):
    radius_sq: Any
    last_component: Any
    psi_harmonic: bool
    psi_energy: Any = None
    psi_energy_consistent: bool
    rotation: List[List[Any]]


class HypersphereSummary(BaseModel):
    center: List[Any]
    radius_sq: Any
    affine_offset: Any


class Report(BaseModel):
    """One document per invocation."""
    name: Optional[str] = None
    m: Optional[int] = None
    n: Optional[int] = None
    backend: str
    certified: bool
    stage: str
    exit_code: int
    spherical: Optional[bool] = None
    sphericity: Optional[str] = None
    verdict: Optional[str] = None
    path: Optional[str] = None
    summary: Optional[str] = None
    evidence: List[str] = []
    energy_density: Any = None
    s_matrix: Optional[List[List[Any]]] = None
    s_is_scalar: Optional[bool] = None
    s_scalar: Any = None
    laplacian: Optional[List[Any]] = None
    laplacian_norm_sq: Any = None
    trace_identity_residual: Any = None
    harmonicity_tests: Optional[Dict[str, bool]] = None
    min_eigenvalue: Optional[float] = None
    hypersphere: Optional[HypersphereSummary] = None
    factorization: Optional[FactorizationSummary] = None
    oracle: Optional[OracleReport] = None
    errors: List[str] = []

    @property
    def ok(self) -> bool:
        return self.exit_code == int(ExitCode.OK)


def build_report(state: CertificationState) -> Report:
    backend = state["backend"]
    qmap = state.get("quadmap")
    sphericity = state.get("sphericity")
    report = Report(
        name=qmap.name if qmap is not None else state.get("name"),
        backend=backend.mode.value,
        certified=backend.certified,
        stage=state.get("current_stage", ""),
        exit_code=state.get("exit_code", int(ExitCode.OK)),
        errors=list(state.get("errors", [])),
    )
    if qmap is not None:
        report.m, report.n = qmap.m, qmap.n
    elif state.get("raw_matrices"):
        raw = state["raw_matrices"]
        report.m, report.n = raw[0].shape[0] - 1, len(raw) - 1
    if sphericity is not None:
        report.spherical = sphericity.spherical
        report.sphericity = sphericity.describe()

    invariants = state.get("invariants")
    if invariants:
        tests = invariants["harmonicity_tests"]
        report.energy_density = (
            "non-constant" if invariants["energy_density"] is None
            else encode_scalar(invariants["energy_density"], backend)
        )
        report.s_matrix = encode_matrix(invariants["s_matrix"].entries, backend)
        report.s_is_scalar = invariants["s_matrix"].is_scalar
        if invariants["s_matrix"].scalar is not None:
            report.s_scalar = encode_scalar(invariants["s_matrix"].scalar, backend)
        report.laplacian = [encode_scalar(c, backend) for c in invariants["laplacian"]]
        report.laplacian_norm_sq = encode_scalar(invariants["laplacian_norm_sq"], backend)
        report.trace_identity_residual = encode_scalar(invariants["trace_identity_residual"], backend)
        report.harmonicity_tests = {
            "laplacian_zero": tests.laplacian_zero,
            "energy_is_m_plus_1": tests.energy_is_m_plus_1,
            "s_is_harmonic_scalar": tests.s_is_harmonic_scalar,
        }
        report.min_eigenvalue = float(invariants["min_eigenvalue"])
        location = invariants["hypersphere"]
        if location is not None:
            report.hypersphere = HypersphereSummary(
                center=[encode_scalar(c, backend) for c in location.center],
                radius_sq=encode_scalar(location.radius_sq, backend),
                affine_offset=encode_scalar(location.affine_offset, backend),
            )

    classification = state.get("classification")
    if classification is not None:
        report.verdict = classification.verdict.value
        report.path = classification.path.value
        report.evidence = list(classification.evidence)
        report.summary = f"{classification.verdict.value}, {energy_note(qmap, classification.energy_density)}"
        if not classification.certified:
            report.summary += " (non-certified)"

    factorization = state.get("factorization")
    if factorization is not None:
        report.factorization = FactorizationSummary(
            radius_sq=encode_scalar(factorization.radius_sq, backend),
            last_component=encode_scalar(factorization.last_component_constant, backend),
            psi_harmonic=factorization.psi_harmonic,
            psi_energy=(
                None if factorization.psi_energy is None
                else encode_scalar(factorization.psi_energy, backend)
            ),
            psi_energy_consistent=factorization.psi_energy_consistent,
            rotation=encode_matrix(factorization.rotation, backend),
        )

    report.oracle = state.get("oracle_report")
    return report


# ── text form ───────────────────────────────────────────────────
def _literal(value: Any) -> str:
    if isinstance(value, dict):
        parts = []
        for key, coef in value.items():
            root = "" if key == "q" else f"√{key[1:]}"
            parts.append(f"{coef}{root}" if coef != "1" or not root else root)
        return " + ".join(parts) if parts else "0"
    return str(value)


def _matrix_rows(rows: List[List[Any]]) -> List[str]:
    return ["    [" + ", ".join(_literal(x) for x in row) + "]" for row in rows]


def _verdict(passed: bool) -> str:
    return "pass" if passed else "FAIL"


def section(title: str) -> List[str]:
    return ["", "─" * WIDTH, f"  {title}", "─" * WIDTH]


def render_text(report: Report) -> str:
    """Same fields as the structured report, laid out for a terminal."""
    lines = ["", "=" * WIDTH, f"  QUADRATIC MAP CERTIFICATE: {report.name or '(unnamed)'}", "=" * WIDTH]
    if report.m is not None:
        lines.append(f"  S^{report.m} → S^{report.n}")
    lines.append(f"  Backend: {report.backend}{'' if report.certified else ' (non-certified)'}")
    lines.append(f"  Stage: {report.stage.upper()}    Exit code: {report.exit_code}")

    if report.spherical is not None:
        lines += section("SPHERICITY")
        lines.append(f"  Spherical: {report.spherical}")
        lines.append(f"  {report.sphericity}")

    if report.laplacian is not None:
        lines += section("INVARIANTS")
        lines.append(f"  Energy density: {_literal(report.energy_density)}")
        if report.s_is_scalar:
            lines.append(f"  S = {_literal(report.s_scalar)}·I")
        else:
            lines.append("  S is not scalar:")
            lines += _matrix_rows(report.s_matrix)
        lines.append("  Δ₀F = (" + ", ".join(_literal(c) for c in report.laplacian) + ")")
        lines.append(f"  |Δ₀F|² = {_literal(report.laplacian_norm_sq)}")
        lines.append(f"  Trace identity residual: {_literal(report.trace_identity_residual)}")
        lines.append(f"  λ_min(S) ≈ {report.min_eigenvalue:.6g}")
        for key, value in report.harmonicity_tests.items():
            lines.append(f"    {key}: {value}")
        if report.hypersphere is not None:
            lines.append(
                f"  Image in hypersphere: r² = {_literal(report.hypersphere.radius_sq)}, "
                f"center = (" + ", ".join(_literal(c) for c in report.hypersphere.center) + ")"
            )
            lines.append(f"  Affine offset: {_literal(report.hypersphere.affine_offset)}")

    if report.verdict is not None:
        lines += section(f"VERDICT ({report.path})")
        lines.append(f"  > {report.summary}")
        for note in report.evidence:
            lines.append(f"    * {note}")

    if report.factorization is not None:
        f = report.factorization
        lines += section("FACTORIZATION")
        lines.append(f"  ψ into sphere of radius² {_literal(f.radius_sq)}")
        lines.append(f"  Last component: {_literal(f.last_component)}")
        lines.append(f"  ψ harmonic (traceless): {f.psi_harmonic}")
        if f.psi_energy is not None:
            lines.append(f"  e(ψ) = {_literal(f.psi_energy)} (consistent: {f.psi_energy_consistent})")
        else:
            lines.append(f"  e(ψ) non-constant (consistent: {f.psi_energy_consistent})")
        lines.append("  Rotation:")
        lines += _matrix_rows(f.rotation)

    if report.oracle is not None:
        o = report.oracle
        lines += section("NUMERICAL ORACLE")
        lines.append(f"  {o.samples} samples, seed {o.seed}, step {o.step:g}, tol {o.tolerance:g}")
        t, b, e = o.tension, o.bitension, o.energy
        lines.append(
            f"  Tension: {t.samples} samples, step {t.step:g}, max rel. error {t.max_relative_error:.3e}, "
            f"max |τ| {t.max_fd_norm:.3e}, tangency {t.max_tangency_error:.3e} [{_verdict(t.passed)}]"
        )
        discrepancy = "n/a" if b.max_closed_form_discrepancy is None else f"{b.max_closed_form_discrepancy:.3e}"
        lines.append(
            f"  Bitension: {b.samples} samples, max |τ₂| {b.max_norm:.3e}, "
            f"closed-form discrepancy {discrepancy} [{_verdict(b.passed)}]"
        )
        lines.append(f"  Energy: {e.samples} samples, max rel. error {e.max_relative_error:.3e} [{_verdict(e.passed)}]")
        lines.append(f"  Overall: {_verdict(o.passed)}")

    if report.errors:
        lines += section("ERRORS ENCOUNTERED")
        for error in report.errors:
            lines.append(f"  * {error}")

    lines += ["", "=" * WIDTH, ""]
    return "\n".join(lines)
