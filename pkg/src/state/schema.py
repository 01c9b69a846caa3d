"""
State schema for the certification workflow.
"""

from typing import Any, TypedDict, List, Optional, Annotated
from operator import add

from .enums import ClassifyPath, ExitCode, Stage


class CertificationState(TypedDict):
    """
    Central state object that flows through the LangGraph workflow.
    All nodes read from and write to this state.

    Heavy objects are typed Any to keep this module import-light; the
    comments name the concrete types.
    """

    # INPUT
    name: Optional[str]                 # catalog name, or None for raw matrices
    raw_matrices: Optional[List[Any]]   # list of square arrays
    backend: Any                        # ScalarBackend
    path: str                           # ClassifyPath value
    want_factorization: bool
    sample_plan: Optional[Any]          # SamplePlan; None skips the oracle

    # STAGE OUTPUTS
    quadmap: Optional[Any]              # QuadraticSphericalMap
    sphericity: Optional[Any]           # SphericityCertificate
    invariants: Optional[dict]
    classification: Optional[Any]       # Classification
    factorization: Optional[Any]        # FactorizationResult
    oracle_report: Optional[Any]        # OracleReport
    report: Optional[dict]

    # WORKFLOW METADATA
    current_stage: str
    exit_code: int
    errors: Annotated[List[str], add]


def create_initial_state(
    name: Optional[str] = None,
    raw_matrices: Optional[List[Any]] = None,
    backend: Any = None,
    path: str = ClassifyPath.BOTH.value,
    want_factorization: bool = False,
    sample_plan: Optional[Any] = None,
) -> CertificationState:
    """Create an initial workflow state from a catalog name or raw matrices."""
    if (name is None) == (raw_matrices is None):
        raise ValueError("give exactly one of name or raw_matrices")
    if backend is None:
        from ..scalar import EXACT
        backend = EXACT
    return CertificationState(
        name=name,
        raw_matrices=raw_matrices,
        backend=backend,
        path=ClassifyPath(path).value,
        want_factorization=want_factorization,
        sample_plan=sample_plan,
        quadmap=None,
        sphericity=None,
        invariants=None,
        classification=None,
        factorization=None,
        oracle_report=None,
        report=None,
        current_stage=Stage.INIT.value,
        exit_code=int(ExitCode.OK),
        errors=[],
    )
