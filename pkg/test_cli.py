import json
from dataclasses import replace

import pytest

from src.catalog import get, random_instance
from src.cli import commands, dumps, emit_map, load_map_file, main, parse_map_file, parse_psi_file
from src.config.catalog_configs import ALL_ENTRIES
from src.oracle import fd as fd_module
from src.quadmap import QuadraticSphericalMap, gray_toth_relations, tension_field
from src.quadmap.gray_toth import RelationFailure
from src.scalar import EXACT


def edit_entry(path, matrix, row, col, literal):
    document = json.loads(path.read_text(encoding="utf-8"))
    document["matrices"][matrix][row][col] = literal
    path.write_text(json.dumps(document), encoding="utf-8")


# ── check ───────────────────────────────────────────────────────
def test_check_spherical_map(map_path, run_cli):
    code, document = run_cli("check", map_path("hopf"))
    assert code == 0
    assert document["spherical"] is True
    assert document["name"] == "hopf"


def test_check_names_the_offending_monomial(map_path, run_cli):
    path = map_path("hopf")
    edit_entry(path, 0, 0, 0, "101/100")
    code, document = run_cli("check", path)
    assert code == 2
    assert document["spherical"] is False
    assert "x1^4" in document["sphericity"]


def test_malformed_literal_is_a_parse_error(map_path, run_cli):
    path = map_path("hopf")
    edit_entry(path, 0, 0, 0, "1//2")
    code, document = run_cli("check", path)
    assert code == 3
    assert document["error"] == "ParseError"


def test_missing_file_and_bad_usage(tmp_path, run_cli):
    code, _ = run_cli("check", tmp_path / "absent.json")
    assert code == 3
    code, _ = run_cli("classify", tmp_path / "absent.json", "--path", "sideways")
    assert code == 3


# ── classify ────────────────────────────────────────────────────
@pytest.mark.parametrize("name, summary", [
    ("hopf", "Harmonic, e = 4 = m+1"),
    ("lift(hopf)", "ProperBiharmonic, e = 2 = (m+1)/2"),
    ("F_lambda(0)", "ProperBiharmonic, e = 4 = (m+1)/2"),
    ("F_lambda(1/2)", "Neither, e = 2"),
])
def test_classify_summaries(name, summary, map_path, run_cli):
    code, document = run_cli("classify", map_path(name))
    assert code == 0
    assert document["summary"] == summary
    assert document["certified"] is True
    assert document["path"] == "both"
    assert document["trace_identity_residual"] == "0"


def test_classify_single_path(map_path, run_cli):
    code, document = run_cli("classify", map_path("lift(hopf)"), "--path", "direct")
    assert code == 0
    assert document["verdict"] == "ProperBiharmonic"
    assert document["path"] == "direct"


def test_float_backend_is_flagged(map_path, run_cli):
    code, document = run_cli("classify", map_path("F_lambda(1/2)"), "--backend", "float", "--tol", "1e-9")
    assert code == 0
    assert document["certified"] is False
    assert document["verdict"] == "Neither"
    assert document["summary"].endswith("(non-certified)")


# ── factorize ───────────────────────────────────────────────────
def test_factorize_writes_psi(map_path, run_cli, tmp_path):
    out = tmp_path / "psi.json"
    code, document = run_cli("factorize", map_path("F_lambda(0)"), "--out", out)
    assert code == 0
    assert document["factorization"]["radius_sq"] == "1/2"
    assert document["factorization"]["psi_harmonic"] is True

    matrices, radius_sq, rotation = parse_psi_file(out.read_text(encoding="utf-8"))
    assert len(matrices) == 5
    assert radius_sq == EXACT.rational(1, 2)
    assert EXACT.arrays_equal(rotation @ rotation.T, EXACT.identity(6))
    assert json.loads(out.read_text(encoding="utf-8"))["metadata"]["name"] == "psi(F_lambda(0))"


def test_factorize_needs_proper_biharmonic(map_path, run_cli, tmp_path):
    out = tmp_path / "psi.json"
    code, document = run_cli("factorize", map_path("hopf"), "--out", out)
    assert code == 5
    assert document["verdict"] == "Harmonic"
    assert not out.exists()


# ── catalog ─────────────────────────────────────────────────────
def test_catalog_list(run_cli):
    code, document = run_cli("catalog", "list")
    assert code == 0
    names = [entry["name"] for entry in document["entries"]]
    assert names == [config.name for config in ALL_ENTRIES]


def test_catalog_show(run_cli):
    code, document = run_cli("catalog", "show", "phi5")
    assert code == 0
    assert (document["m"], document["n"]) == (3, 5)
    assert document["verdict"] == "Harmonic"


def test_catalog_unknown_name(run_cli):
    code, document = run_cli("catalog", "show", "phi9")
    assert code == 6
    assert document["stage"] == "failed"


def test_catalog_emit_then_classify(run_cli, tmp_path):
    path = tmp_path / "lifted.json"
    code, document = run_cli("catalog", "emit", "lift(veronese)", path)
    assert code == 0
    assert document["file"] == str(path)
    code, document = run_cli("classify", path)
    assert code == 0
    assert document["name"] == "lift(veronese)"
    assert document["verdict"] == "ProperBiharmonic"


def reemit(text, tmp_path):
    """Write, reload through the map type and emit again."""
    path = tmp_path / "roundtrip.json"
    path.write_text(text, encoding="utf-8")
    matrices, name = load_map_file(path)
    metadata = parse_map_file(text).metadata
    qmap = QuadraticSphericalMap.from_matrices(matrices, EXACT, name=name)
    return emit_map(qmap, metadata.description if metadata else None)


@pytest.mark.parametrize("config", ALL_ENTRIES, ids=lambda c: c.name)
def test_emission_is_canonical(config, tmp_path):
    text = emit_map(get(config.name).map, config.description)
    assert dumps(parse_map_file(text)) == text
    assert reemit(text, tmp_path) == text


@pytest.mark.parametrize("seed, base", [
    (0, "hopf"), (1, "phi5"), (2, "veronese"), (3, "lift(phi6)"), (4, "embed(hopf,3/5)"), (5, "F_lambda(1/2)"),
])
def test_scrambled_emission_is_canonical(seed, base, tmp_path):
    text = emit_map(random_instance(seed, base))
    assert reemit(text, tmp_path) == text


def test_emit_rejects_float_maps():
    from src.errors import ParseError
    from src.scalar import ScalarBackend

    with pytest.raises(ParseError):
        emit_map(get("hopf", ScalarBackend.floating()).map)


# ── verify ──────────────────────────────────────────────────────
@pytest.mark.parametrize("name", ["hopf", "lift(hopf)"])
def test_verify_passes(name, map_path, run_cli):
    code, document = run_cli("verify", map_path(name), "--samples", "20")
    assert code == 0
    assert document["oracle"]["tension"]["passed"] is True
    assert document["oracle"]["samples"] == 20


def test_verify_rejects_bad_step(map_path, run_cli):
    code, _ = run_cli("verify", map_path("hopf"), "--step", "0.5")
    assert code == 3


def test_verify_catches_corrupted_tension(map_path, run_cli, monkeypatch):
    monkeypatch.setattr(fd_module, "tension_field", lambda qmap: tension_field(qmap).scale(2))
    code, document = run_cli("verify", map_path("lift(hopf)"), "--samples", "10")
    assert code == 7
    # the verdict is still reported
    assert document["verdict"] == "ProperBiharmonic"
    assert document["oracle"]["tension"]["passed"] is False


# ── verbose ─────────────────────────────────────────────────────
def test_verbose_report_goes_to_stderr(map_path, capsys):
    code = main(["--verbose", "classify", str(map_path("hopf"))])
    captured = capsys.readouterr()
    assert code == 0
    assert json.loads(captured.out)["verdict"] == "Harmonic"
    assert "QUADRATIC MAP CERTIFICATE: hopf" in captured.err
    assert "VERDICT (both)" in captured.err


def test_check_reports_relation_disagreement(map_path, run_cli, monkeypatch):
    def disagreeing(matrices, backend, stop_at_first=False):
        report = gray_toth_relations(matrices, backend, stop_at_first)
        return replace(report, failures=[RelationFailure(2, (1, 2), backend.one())])

    monkeypatch.setattr(commands, "gray_toth_relations", disagreeing)
    code, document = run_cli("check", map_path("hopf"))
    assert code == 4
    assert document["stage"] == "failed"
    assert any("disagree" in error for error in document["errors"])


def test_logging_helpers_are_package_exports():
    from src.utils import configure_logging, get_logger
    from src.utils import log

    assert configure_logging is log.configure_logging
    assert get_logger is log.get_logger
    assert get_logger("src.cli").name == "quadsphere.cli"
