"""State package - schema and enums for workflow state."""

from .schema import CertificationState, create_initial_state
from .enums import (
    BackendMode,
    ClassifyPath,
    ExitCode,
    Scramble,
    Stage,
    Verdict,
)

__all__ = [
    "CertificationState",
    "create_initial_state",
    "BackendMode",
    "ClassifyPath",
    "ExitCode",
    "Scramble",
    "Stage",
    "Verdict",
]
