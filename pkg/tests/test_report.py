"""
报告生成与文本表格
"""

import json
from fractions import Fraction

import numpy as np

from src.algebra.field import Scalar
from src.config.constants import CheckStatus
from src.core.types import CheckResult, SuiteReport
from src.utils.report import ExactEncoder, ReportGenerator
from src.utils.tables import render_text, suite_table


def _suite():
    report = SuiteReport(suite="demo", config={"seed": 7})
    report.add(CheckResult(name="a", passed=True, provenance="first"))
    report.add(CheckResult(name="b", passed=False, expected=CheckStatus.FAIL, provenance="printed value"))
    report.add_finding("ratio", Fraction(1, 3), "informational")
    return report


def test_check_result_status():
    erratum = CheckResult(name="x", passed=False, expected=CheckStatus.FAIL)
    assert erratum.ok
    assert erratum.status == CheckStatus.FAIL
    surprise = CheckResult(name="y", passed=True, expected=CheckStatus.FAIL)
    assert not surprise.ok


def test_check_result_from_dict():
    check = CheckResult(name="x", passed=False, detail={"k": 1})
    again = CheckResult.from_dict(check.to_dict())
    assert again.name == "x"
    assert again.passed is False
    assert again.detail == {"k": 1}


def test_suite_counts():
    report = _suite()
    assert report.ok
    assert (report.n_passed, report.n_failed, report.n_unexpected) == (1, 1, 0)
    assert report.get("b").expected == CheckStatus.FAIL
    assert report.get("missing") is None
    report.add(CheckResult(name="c", passed=False))
    assert not report.ok
    assert report.summary()["unexpected"] == 1


def test_exact_encoder():
    payload = {
        "q": Fraction(-2, 3),
        "rational_scalar": Scalar(Fraction(5, 2)),
        "irrational": Scalar(0, 0, 1),
        "int": np.int64(4),
        "array": np.array([1, 2]),
        "set": {3, 1},
    }
    decoded = json.loads(json.dumps(payload, cls=ExactEncoder))
    assert decoded["q"] == "-2/3"
    assert decoded["rational_scalar"] == "5/2"
    assert decoded["irrational"] == ["0", "0", "1", "0"]
    assert decoded["int"] == 4
    assert decoded["array"] == [1, 2]
    assert decoded["set"] == [1, 3]


def test_json_is_sorted_and_stable():
    first = ReportGenerator("demo").add_config({"z": 1, "a": 2}).add_suite(_suite()).finalize([_suite()]).to_json()
    second = ReportGenerator("demo").add_config({"a": 2, "z": 1}).add_suite(_suite()).finalize([_suite()]).to_json()
    assert first == second
    data = json.loads(first)
    assert list(data) == sorted(data)
    assert data["summary"] == {"checks": 2, "expected_failures": 1, "ok": True, "unexpected": 0}


def test_save_json_and_markdown(tmp_path):
    generator = ReportGenerator("demo").add_suite(_suite()).finalize([_suite()])
    path = generator.save_json(str(tmp_path / "out" / "report.json"))
    assert json.loads(open(path, encoding="utf-8").read())["report_info"]["command"] == "demo"
    md = generator.save_markdown(str(tmp_path / "out" / "report.md"))
    text = open(md, encoding="utf-8").read()
    assert "| a | pass | pass | first |" in text
    assert "ratio" in text


def test_suite_table():
    table = suite_table(_suite())
    assert list(table["check"]) == ["a", "b"]
    assert list(table["ok"]) == ["yes", "yes"]
    assert list(table["status"]) == [CheckStatus.PASS, CheckStatus.FAIL]


def test_render_text():
    text = render_text([_suite()])
    assert "[demo] checks=2 passed=1 failed=1 unexpected=0" in text
    assert text.endswith("overall: OK")
    broken = _suite().add(CheckResult(name="c", passed=False))
    assert render_text([broken]).endswith("overall: FAILED")
