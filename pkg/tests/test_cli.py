import importlib
import io

import pytest

from src.checkers import TOP_LEVEL_CHECKERS
from src.core.report import ReportBuilder, ValidationReport, Violation
from src.instkit import EXIT_FAIL, EXIT_PASS, EXIT_RESOURCE, EXIT_USAGE, run_command
from src.utils.commands import COMMAND_TABLE
from src.utils.report_writer import read_report, write_report
from tests.helpers import fixture_path


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    # no config/ here, so nothing is logged to a file
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("INSTKIT_CAP", raising=False)
    return tmp_path


def run(*argv):
    out = io.StringIO()
    code = run_command([*argv, "--quiet"], stdout=out)
    return code, out.getvalue()


def test_check_institution_passes():
    code, out = run("check", "institution", fixture_path("twoval.inst.json"))
    assert code == EXIT_PASS
    assert out.startswith("PASS")


def test_f_then_g_round_trip(workdir):
    closure = str(workdir / "twoval.pi.json")
    assert run("apply", "F", fixture_path("twoval.inst.json"), "-o", closure)[0] == EXIT_PASS
    assert run("check", "pi", closure)[0] == EXIT_PASS
    assert run("adjunction", "fg-identity", closure)[0] == EXIT_PASS


def test_failing_logic_morphism():
    code, out = run("logic", "check-morphism", fixture_path("swap.translation.json"))
    assert code == EXIT_FAIL
    assert out.startswith("FAIL")
    assert "logic-morphism" in out


def test_missing_document():
    assert run("check", "institution", "nowhere.inst.json")[0] == EXIT_USAGE


def test_unknown_command():
    assert run("check", "everything", fixture_path("twoval.inst.json"))[0] == EXIT_USAGE


def test_cap_below_the_universe(workdir):
    closure = str(workdir / "twoval.pi.json")
    run("apply", "F", fixture_path("twoval.inst.json"), "-o", closure)
    assert run("check", "pi", closure, "--cap", "1")[0] == EXIT_RESOURCE


def test_closure_command():
    code, out = run("closure", fixture_path("twoval.inst.json"), "S0", "b")
    assert code == EXIT_PASS
    assert out == '["a", "b"]\n'


def test_logic_closure_command():
    code, out = run("logic", "closure", fixture_path("cpl1.logic.json"), "p")
    assert code == EXIT_PASS
    assert out == '["p", "and(p,p)"]\n'


def test_json_report_format():
    code, out = run("check", "galois", fixture_path("twoval.inst.json"), "--format", "json")
    assert code == EXIT_PASS
    assert read_report(out).ok


def test_generated_documents_repeat_for_a_seed():
    first = run("generate", "institution", "--seed", "7")
    assert first == run("generate", "institution", "--seed", "7")


def test_every_checker_has_one_command():
    wired = [spec.checker for spec in COMMAND_TABLE if spec.checker]
    for path in TOP_LEVEL_CHECKERS:
        assert wired.count(path) == 1
        module, name = path.rsplit(".", 1)
        assert callable(getattr(importlib.import_module(module), name))


def test_empty_report_text():
    assert write_report(ValidationReport()) == "PASS (0 violations)\n"


def test_violation_line():
    report = ValidationReport((Violation("law", ("w1", "w2"), "message"),))
    assert write_report(report) == 'FAIL (1 violation)\nlaw ["w1", "w2"] message\n'


def test_json_report_reads_back():
    builder = ReportBuilder()
    builder.fail("coherence", ["h", "[]"], "closures disagree")
    report = builder.build()
    assert read_report(write_report(report, "json")) == report


def test_csv_report_header():
    assert write_report(ValidationReport(), "csv").splitlines()[0] == "status,law,witness,message"


def test_unknown_report_format():
    with pytest.raises(ValueError):
        write_report(ValidationReport(), "yaml")
