"""Shared fixtures: catalog maps are expensive enough to build once per session."""

import json

import pytest

from src.catalog import get
from src.scalar import EXACT, ScalarBackend


@pytest.fixture(scope="session")
def exact():
    return EXACT


@pytest.fixture(scope="session")
def floating():
    return ScalarBackend.floating(1e-9)


@pytest.fixture(scope="session")
def hopf_map():
    return get("hopf").map


@pytest.fixture(scope="session")
def veronese_map():
    return get("veronese").map


@pytest.fixture(scope="session")
def f0():
    return get("F_lambda(0)").map


@pytest.fixture(scope="session")
def f_half():
    return get("F_lambda(1/2)").map


@pytest.fixture(scope="session")
def lift_hopf():
    return get("lift(hopf)").map


@pytest.fixture(scope="session")
def lift_veronese():
    return get("lift(veronese)").map


@pytest.fixture
def map_path(tmp_path):
    """Write a map file from a catalog name and return its path."""
    from src.cli import emit_map

    def write(name: str, filename: str = "map.json"):
        path = tmp_path / filename
        path.write_text(emit_map(get(name).map), encoding="utf-8")
        return path

    return write


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit code, parsed stdout document)."""
    from src.cli import main

    def run(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr().out
        return code, json.loads(out)

    return run
