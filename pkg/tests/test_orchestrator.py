import pytest

from models.models import CheckSpec, SuiteContext
from orchestrator.orchestrator import ALL, SUITES, VerificationOrchestrator, expand, suite_names


def test_all_expands_in_canonical_order():
    assert expand([ALL]) == list(SUITES)
    assert expand(["fano", ALL])[0] == "fano"
    assert len(expand(["fano", "fano"])) == 1
    assert suite_names()[-1] == ALL


def test_known_suites():
    assert {"e6-lines", "e7-bitangents", "e8-planes", "fano", "octonion",
            "e7-model", "e8-model", "mod", "groups"} == set(SUITES)


def test_unknown_suite():
    with pytest.raises(ValueError):
        expand(["e9"])
    with pytest.raises(ValueError):
        VerificationOrchestrator().run_suite("e9")


def test_failing_and_raising_checks_are_recorded(context):
    orchestrator = VerificationOrchestrator(context)
    ok = orchestrator.run_check(CheckSpec("ok", 2, lambda: 1 + 1))
    wrong = orchestrator.run_check(CheckSpec("wrong", 3, lambda: 1 + 1))
    boom = orchestrator.run_check(CheckSpec("boom", 1, lambda: 1 // 0))
    assert ok.passed and ok.error is None
    assert not wrong.passed and wrong.actual == 2
    assert not boom.passed and boom.error.startswith("ZeroDivisionError")


def test_failed_build_is_cached(context):
    calls = []

    def build():
        calls.append(1)
        raise RuntimeError("no model")

    for _ in range(2):
        with pytest.raises(RuntimeError):
            context.cached("model", build)
    assert len(calls) == 1


def test_fano_suite_passes(context):
    report = VerificationOrchestrator(context).run_suite("fano")
    assert report.ok, [c.to_dict() for c in report.failed]


def test_octonion_suite_passes():
    context = SuiteContext(composition_samples=20)
    assert VerificationOrchestrator(context).run_suite("octonion").ok
