import asyncio
from dataclasses import replace

import numpy as np
import pytest

from src.cli.report import Report, render_text
from src.oracle import SamplePlan
from src.quadmap import gray_toth_relations
from src.quadmap.gray_toth import RelationFailure
from src.state.enums import ExitCode, Stage, Verdict
from src.state.schema import create_initial_state
from src.workflow import (
    check_init_success,
    check_invariants,
    check_spherical,
    create_certification_graph,
    nodes,
    route_after_classify,
    route_after_factorize,
    run_certification,
)


def certify(**kwargs):
    return asyncio.run(run_certification(**kwargs))


# ── routing ─────────────────────────────────────────────────────
def test_initial_state_needs_one_input():
    with pytest.raises(ValueError):
        create_initial_state()
    with pytest.raises(ValueError):
        create_initial_state(name="hopf", raw_matrices=[])
    state = create_initial_state(name="hopf")
    assert state["current_stage"] == Stage.INIT.value
    assert state["errors"] == []


def test_routing_functions(hopf_map):
    state = create_initial_state(name="hopf")
    assert check_init_success(state) == "success"
    assert check_spherical(state) == "not_spherical"
    state["quadmap"] = hopf_map
    assert check_spherical(state) == "spherical"
    assert check_invariants(state) == "consistent"
    assert route_after_classify(state) == "output"

    state["sample_plan"] = SamplePlan()
    assert route_after_classify(state) == "verify"
    assert route_after_factorize(state) == "verify"
    state["want_factorization"] = True
    assert route_after_classify(state) == "factorize"

    state["exit_code"] = int(ExitCode.WRONG_VERDICT)
    assert check_init_success(state) == "failed"
    assert check_invariants(state) == "inconsistent"
    assert route_after_classify(state) == "output"
    assert route_after_factorize(state) == "output"


def test_graph_has_every_stage():
    graph = create_certification_graph()
    assert set(graph.nodes) == {
        "init", "sphericity", "invariants", "classify", "factorize", "verify", "output",
    }


# ── runs ────────────────────────────────────────────────────────
def test_catalog_name_run():
    state = certify(name="hopf")
    assert state["current_stage"] == Stage.COMPLETE.value
    assert state["classification"].verdict is Verdict.HARMONIC
    assert state["factorization"] is None
    assert state["oracle_report"] is None
    assert state["report"]["summary"] == "Harmonic, e = 4 = m+1"
    assert state["errors"] == []


def test_raw_matrix_run(lift_hopf):
    raw = [np.array(a, dtype=object) for a in lift_hopf.matrices]
    state = certify(raw_matrices=raw)
    assert state["classification"].verdict is Verdict.PROPER_BIHARMONIC
    assert state["report"]["m"] == 3 and state["report"]["n"] == 3
    assert state["report"]["hypersphere"]["radius_sq"] == "1/2"


def test_not_spherical_run(hopf_map):
    raw = [np.array(a, dtype=object) for a in hopf_map.matrices]
    raw[0][0, 0] = raw[0][0, 0] * 2
    state = certify(raw_matrices=raw)
    assert state["exit_code"] == int(ExitCode.NOT_SPHERICAL)
    assert state["current_stage"] == Stage.NOT_SPHERICAL.value
    assert state["classification"] is None
    assert any(e.startswith("sphericity:") for e in state["errors"])


def test_unknown_name_run():
    state = certify(name="lift(nonexistent)")
    assert state["exit_code"] == int(ExitCode.UNKNOWN_NAME)
    assert state["quadmap"] is None
    assert state["report"]["stage"] == Stage.FAILED.value


def test_factorize_and_verify_run():
    state = certify(name="lift(phi5)", want_factorization=True, sample_plan=SamplePlan(count=10))
    assert state["current_stage"] == Stage.COMPLETE.value
    assert state["factorization"].psi_harmonic
    assert state["oracle_report"].passed
    assert state["report"]["factorization"]["radius_sq"] == "1/2"


def test_text_report_carries_structured_fields():
    state = certify(name="lift(hopf)", want_factorization=True, sample_plan=SamplePlan(count=10))
    report = Report.model_validate(state["report"])
    text = render_text(report)
    assert "Spherical: True" in text
    assert f"Affine offset: {report.hypersphere.affine_offset}" in text
    assert "Rotation:" in text
    assert len(report.factorization.rotation) == 4
    assert "max |τ|" in text
    assert "closed-form discrepancy" in text
    assert "Overall: pass" in text


def test_factorize_refuses_harmonic_map():
    state = certify(name="phi4", want_factorization=True)
    assert state["exit_code"] == int(ExitCode.WRONG_VERDICT)
    assert state["classification"].verdict is Verdict.HARMONIC
    assert state["factorization"] is None


def test_float_run_is_non_certified(floating):
    state = certify(name="F_lambda(0.3)", backend=floating, path="criterion")
    assert state["classification"].verdict is Verdict.NEITHER
    assert state["report"]["certified"] is False


# ── internal consistency ────────────────────────────────────────
def disagreeing_relations(matrices, backend, stop_at_first=False):
    report = gray_toth_relations(matrices, backend, stop_at_first)
    return replace(report, failures=[RelationFailure(1, (1,), backend.one())])


def test_relation_disagreement_fails_the_run(monkeypatch):
    monkeypatch.setattr(nodes, "gray_toth_relations", disagreeing_relations)
    state = certify(name="hopf")
    assert state["exit_code"] == int(ExitCode.PATH_DISAGREEMENT)
    assert state["current_stage"] == Stage.FAILED.value
    assert state["classification"] is None
    assert state["report"]["exit_code"] == 4


def test_nonzero_trace_residual_fails_the_run(monkeypatch):
    monkeypatch.setattr(nodes, "verify_trace_identity", lambda qmap: qmap.backend.one())
    state = certify(name="lift(hopf)")
    assert state["exit_code"] == int(ExitCode.PATH_DISAGREEMENT)
    assert state["classification"] is None
    assert "invariants: trace identity residual is nonzero" in state["errors"]
    assert state["report"]["trace_identity_residual"] == "1"
