import json

import pytest
from typer.testing import CliRunner

from cli.app import algebra_checks, app, load_algebra
from liealg.jacobi import verify_jacobi
from models.models import SuiteContext

runner = CliRunner()


@pytest.fixture(autouse=True)
def no_log_file(monkeypatch):
    monkeypatch.setenv("EXLINES_LOG_FILE", "")
    monkeypatch.setenv("EXLINES_THREADS", "1")


def invoke(*args):
    return runner.invoke(app, list(args))


# ==============================================================
# count / table
# ==============================================================

@pytest.mark.parametrize("name, value", [
    ("lines", 27), ("tritangent-planes", 45), ("double-sixes", 36),
    ("steiner-complexes", 63), ("fano-heptads", 135), ("aronhold-sets", 288),
    ("tritangent-planes-e8", 120), ("orientations", 16), ("harmonic-cubes", 14),
])
def test_count(name, value):
    result = invoke("count", name)
    assert result.exit_code == 0
    assert result.stdout.strip() == str(value)


def test_unknown_count():
    assert invoke("count", "unicorns").exit_code == 2


def test_triangle_pairs_table():
    result = invoke("table", "triangle-pairs")
    assert result.exit_code == 0
    assert "01 → 256" in result.stdout.splitlines()


def test_quadruples_e8_table():
    result = invoke("table", "quadruples-e8")
    lines = result.stdout.splitlines()
    assert len(lines) == 14
    assert lines[0] == "1234 5678"


def test_xor_array_as_json():
    result = invoke("table", "xor-array", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["kind"] == "table"
    assert payload["rows"][1][2] == 3


def test_theta_table_as_csv():
    result = invoke("table", "theta", "--theta", "5", "--format", "csv")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "θ,1,2,3,4,5,6,7"


def test_table_usage_errors():
    assert invoke("table", "theta", "--theta", "16").exit_code == 2
    assert invoke("table", "theta", "--format", "xml").exit_code == 2


# ==============================================================
# export
# ==============================================================

def test_export_root_system(tmp_path):
    path = tmp_path / "e6.json"
    result = invoke("export", "root-system-E6", str(path))
    assert result.exit_code == 0
    assert result.stdout.strip() == str(path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    assert (payload["schema"], payload["kind"]) == (1, "root_system")
    assert len(payload["vectors"]) == 72


def test_export_is_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    invoke("export", "group-hesse", str(first))
    invoke("export", "group-hesse", str(second))
    assert first.read_bytes() == second.read_bytes()


def test_export_usage_errors(tmp_path):
    assert invoke("export", "", str(tmp_path / "x.json")).exit_code == 2
    assert invoke("export", "unicorns", str(tmp_path / "x.json")).exit_code == 2


def test_export_to_missing_directory(tmp_path):
    result = invoke("export", "lines27", str(tmp_path / "missing" / "x.json"))
    assert result.exit_code == 1


def test_chevalley_export_reimports(tmp_path):
    path = tmp_path / "e6.json"
    assert invoke("export", "chevalley-E6", str(path)).exit_code == 0
    algebra = load_algebra(str(path))
    assert algebra.dim == 78
    assert verify_jacobi(algebra).ok


@pytest.mark.slow
def test_e8_export_reimports(tmp_path):
    path = tmp_path / "e8.json"
    assert invoke("export", "structure-constants-e8", str(path)).exit_code == 0
    algebra = load_algebra(str(path))
    assert algebra.dim == 248
    assert verify_jacobi(algebra, chunk_size=32).ok


# ==============================================================
# verify / group
# ==============================================================

def test_verify_fano():
    result = invoke("verify", "fano", "--json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["ok"]
    assert payload["reports"][0]["suite"] == "fano"
    assert all("seconds" not in c for c in payload["reports"][0]["checks"])


def test_verify_unknown_suite():
    assert invoke("verify", "e9").exit_code == 2


def test_verify_negative_threads():
    assert invoke("verify", "fano", "--threads", "-1").exit_code == 2


def test_group_order():
    result = invoke("group", "collineations", "--orbits")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["degree = 7", "order = 168", "orbits = 7"]


def test_group_as_json():
    payload = json.loads(invoke("group", "hesse", "--json").stdout)
    assert payload["kind"] == "permutation_group"
    assert payload["name"] == "hesse"


# ==============================================================
# algebra build
# ==============================================================

@pytest.mark.parametrize("args", [
    ("e9",),
    ("e8", "--theta", "3"),
    ("e8", "--check", "module"),
    ("e7", "--check", "mod"),
    ("e7", "--check", "jacobi,unicorns"),
])
def test_algebra_build_usage_errors(args):
    assert invoke("algebra", "build", *args).exit_code == 2


def check_ids(*args, **kwargs):
    return [c.check_id for c in algebra_checks(*args, **kwargs)]


def test_verify_on_build_adds_the_jacobi_check():
    context = SuiteContext(threads=1)
    assert check_ids("e7", [], context) == ["dimension"]
    assert check_ids("e7", [], context, verify_on_build=True) == ["dimension", "Jacobi on all ordered triples"]
    assert check_ids("e8", ["jacobi"], context, verify_on_build=True) == ["dimension", "Jacobi on all ordered triples"]
    assert check_ids("e8", ["grading"], context) == ["dimension", "O-grading law"]


@pytest.mark.slow
def test_algebra_build_e7(tmp_path):
    path = tmp_path / "e7.json"
    result = invoke("algebra", "build", "e7", "--theta", "3", "--check", "grading", "-o", str(path))
    assert result.exit_code == 0
    assert "theta_index = 3" in result.stdout
    assert "Jacobi on all ordered triples" in result.stdout
    assert load_algebra(str(path)).dim == 133


@pytest.mark.slow
def test_algebra_build_without_verification(tmp_path):
    config = tmp_path / "settings.yml"
    config.write_text("models:\n  verify_on_build: false\n", encoding="utf-8")
    result = invoke("--config", str(config), "algebra", "build", "e7", "--check", "grading", "--json")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert [c["id"] for c in payload["reports"][0]["checks"]] == ["dimension", "O-grading law"]
