"""The strands-decat command line."""

from __future__ import annotations

import json
from importlib import resources

import pytest

from strands_decat.cli import main
from strands_decat.suite import run_suite, thread_count


def data(name):
    return str(resources.files("strands_decat").joinpath("data").joinpath(f"{name}.json"))


def run(argv, tmp_path):
    out = tmp_path / "report.json"
    code = main(argv + ["--json", str(out)])
    return code, json.loads(out.read_text())


def test_validate(tmp_path):
    code, rep = run(["validate", data("D5")], tmp_path)
    assert code == 0 and rep["status"] == "pass"
    assert rep["details"]["violations"] == []
    assert len(rep["details"]["surface"]["components"]) == 1


def test_validate_reports_violations(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"components": [{"kind": "interval", "points": [1, 2, 3]}], "matching": [[1, 2]]}))
    code, rep = run(["validate", str(bad)], tmp_path)
    assert code == 1 and rep["status"] == "fail"
    assert any("unmatched" in v for v in rep["details"]["violations"])


@pytest.mark.parametrize("content", ["{bad", '{"components": 3}', "[]"])
def test_malformed_input_is_an_error(tmp_path, content):
    bad = tmp_path / "bad.json"
    bad.write_text(content)
    code, rep = run(["validate", str(bad)], tmp_path)
    assert code == 2 and rep["status"] == "error"


def test_missing_file(tmp_path):
    code, rep = run(["decat", str(tmp_path / "nope.json")], tmp_path)
    assert code == 2 and "cannot read" in rep["details"]["error"]


def test_algebra(tmp_path):
    code, rep = run(["algebra", data("D2")], tmp_path)
    assert code == 0
    assert rep["details"]["basis_sizes"] == {"0": 1, "1": 8, "2": 7}
    code, rep = run(["algebra", data("D5"), "--k", "1", "--winding-cap", "1"], tmp_path)
    assert code == 0 and list(rep["details"]["basis_sizes"]) == ["1"]


def test_decat(tmp_path):
    code, rep = run(["decat", data("D4")], tmp_path)
    assert code == 0
    assert rep["details"]["0"]["k0_e_matrix"] == ["01", "00"]
    code, rep = run(["decat", data("D5"), "--interval", "1"], tmp_path)
    assert code == 2


def test_glue_two_surfaces(tmp_path):
    code, rep = run(["glue", data("annulus"), data("annulus"), "--pairs", "0.0.0:0.0.0"], tmp_path)
    assert code == 0 and rep["details"]["dims"] == [8, 8]


def test_glue_self_and_diagram_input(tmp_path):
    code, rep = run(["glue", data("pants"), "--self", "--pairs", "I1:I2"], tmp_path)
    assert code == 0 and rep["details"]["constructive"][0]["case"] == "same_circle"
    code, rep = run(["glue", data("D4"), "--self", "--pairs", "Z0:Z1"], tmp_path)
    assert code == 0


def test_glue_usage_errors(tmp_path):
    code, rep = run(["glue", data("pants"), "--pairs", "I1:I2"], tmp_path)
    assert code == 2
    code, rep = run(["glue", data("pants"), "--self", "--pairs", "I1:nope"], tmp_path)
    assert code == 2 and "nope" in rep["details"]["error"]


def test_json_to_stdout(capsys):
    assert main(["validate", data("D1"), "--json", "-"]) == 0
    out = capsys.readouterr().out
    report = json.loads(out[out.index("{"):])
    assert report["command"] == "validate"


def test_suite_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["suite", "--json", str(a)]) == 0
    assert main(["suite", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_fault_injection_is_caught():
    result = run_suite(only=[1], fault="double_crossing")
    assert result["status"] == "fail"
    assert run_suite(only=[1])["status"] == "pass"


def test_thread_count(monkeypatch):
    monkeypatch.setenv("STRANDS_DECAT_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("STRANDS_DECAT_THREADS", "0")
    assert thread_count() == 1
