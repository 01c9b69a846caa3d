"""
Conditional edge functions for LangGraph workflow routing.

These functions determine which path the workflow takes based on state.
"""

from typing import Literal

from ..state.enums import ExitCode
from ..state.schema import CertificationState


def _failed(state: CertificationState) -> bool:
    return state.get("exit_code", 0) != int(ExitCode.OK)


def check_init_success(
    state: CertificationState
) -> Literal["success", "failed"]:
    """
    Check if the input resolved to matrices.

    Returns:
        - "success": a map or raw matrices are available
        - "failed": unknown name or malformed matrices
    """
    if _failed(state):
        return "failed"
    return "success"


def check_spherical(
    state: CertificationState
) -> Literal["spherical", "not_spherical"]:
    """
    Returns:
        - "spherical": a validated map is in state
        - "not_spherical": negative certificate or constant map
    """
    if _failed(state) or state.get("quadmap") is None:
        return "not_spherical"
    return "spherical"


def check_invariants(
    state: CertificationState
) -> Literal["consistent", "inconsistent"]:
    """
    Returns:
        - "consistent": every identity check held
        - "inconsistent": trace identity, harmonicity tests or eigenvalue bound failed
    """
    if _failed(state):
        return "inconsistent"
    return "consistent"


def route_after_classify(
    state: CertificationState
) -> Literal["factorize", "verify", "output"]:
    """
    Returns:
        - "factorize": factorization requested
        - "verify": oracle requested, no factorization
        - "output": done, or classification failed
    """
    if _failed(state):
        return "output"
    if state.get("want_factorization"):
        return "factorize"
    if state.get("sample_plan") is not None:
        return "verify"
    return "output"


def route_after_factorize(
    state: CertificationState
) -> Literal["verify", "output"]:
    if _failed(state) or state.get("sample_plan") is None:
        return "output"
    return "verify"
