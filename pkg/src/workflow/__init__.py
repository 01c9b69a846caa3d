"""Workflow package - graph definition and execution."""

from .graph import (
    create_certification_graph,
    compile_workflow,
    get_compiled_graph,
    run_certification,
)
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

__all__ = [
    "create_certification_graph",
    "compile_workflow",
    "get_compiled_graph",
    "run_certification",
    "init_node",
    "sphericity_node",
    "invariants_node",
    "classify_node",
    "factorize_node",
    "verify_node",
    "output_node",
    "check_init_success",
    "check_invariants",
    "check_spherical",
    "route_after_classify",
    "route_after_factorize",
]
