from typing import Any, List, Optional

from langgraph.graph import StateGraph, END

from ..state.enums import ClassifyPath
from ..state.schema import CertificationState
from .nodes import (
    init_node,
    sphericity_node,
    invariants_node,
    classify_node,
    factorize_node,
    verify_node,
    output_node,
)
from .routing import (
    check_init_success,
    check_invariants,
    check_spherical,
    route_after_classify,
    route_after_factorize,
)


def create_certification_graph() -> StateGraph:
    """Create the certification workflow graph."""
    workflow = StateGraph(CertificationState)

    # Add nodes
    workflow.add_node("init", init_node)
    workflow.add_node("sphericity", sphericity_node)
    workflow.add_node("invariants", invariants_node)
    workflow.add_node("classify", classify_node)
    workflow.add_node("factorize", factorize_node)
    workflow.add_node("verify", verify_node)
    workflow.add_node("output", output_node)

    # Set entry point
    workflow.set_entry_point("init")

    # Conditional: init -> sphericity or output
    workflow.add_conditional_edges(
        "init",
        check_init_success,
        {"success": "sphericity", "failed": "output"}
    )

    # Conditional: sphericity -> invariants or output
    workflow.add_conditional_edges(
        "sphericity",
        check_spherical,
        {"spherical": "invariants", "not_spherical": "output"}
    )

    # Conditional: invariants -> classify or output
    workflow.add_conditional_edges(
        "invariants",
        check_invariants,
        {"consistent": "classify", "inconsistent": "output"}
    )

    # Conditional: classify -> factorize, verify, or output
    workflow.add_conditional_edges(
        "classify",
        route_after_classify,
        {"factorize": "factorize", "verify": "verify", "output": "output"}
    )

    workflow.add_conditional_edges(
        "factorize",
        route_after_factorize,
        {"verify": "verify", "output": "output"}
    )

    workflow.add_edge("verify", "output")
    workflow.add_edge("output", END)

    return workflow

def compile_workflow():
    """
    Create and compile the workflow graph.

    Returns:
        Compiled graph ready for invocation
    """
    graph = create_certification_graph()
    return graph.compile()


compiled_graph = None


def get_compiled_graph():
    """
    Get the compiled workflow graph (singleton).

    Returns:
        Compiled graph instance
    """
    global compiled_graph
    if compiled_graph is None:
        compiled_graph = compile_workflow()
    return compiled_graph

async def run_certification(
    name: Optional[str] = None,
    raw_matrices: Optional[List[Any]] = None,
    backend: Any = None,
    path: str = ClassifyPath.BOTH.value,
    want_factorization: bool = False,
    sample_plan: Any = None,
) -> CertificationState:
    """
    Run the complete certification workflow.

    Args:
        name: Catalog name (exclusive with raw_matrices)
        raw_matrices: Square matrices, symmetrized before validation
        backend: ScalarBackend; exact when omitted
        path: criterion, direct or both
        want_factorization: Run the factorization stage
        sample_plan: SamplePlan for the oracle stage, or None to skip it

    Returns:
        Final state containing all outputs
    """
    from ..state.schema import create_initial_state

    initial_state = create_initial_state(
        name=name,
        raw_matrices=raw_matrices,
        backend=backend,
        path=path,
        want_factorization=want_factorization,
        sample_plan=sample_plan,
    )

    graph = get_compiled_graph()
    final_state = await graph.ainvoke(initial_state)

    return final_state
