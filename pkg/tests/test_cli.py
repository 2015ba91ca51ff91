"""
命令行：退出码与报告输出
"""

import json

import pytest

from src.cli import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, build_parser, main


def _exit_code(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    return info.value.code


def test_no_command_prints_help(capsys):
    assert _exit_code([]) == EXIT_INPUT_ERROR
    assert "verify-classification" in capsys.readouterr().out


def test_list_cases(capsys):
    assert _exit_code(["list-cases"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "thm1.x" in out
    assert "thm2.8" in out
    assert "thm1.ii" in out
    assert "spinor" in out
    assert "分类数据库核验" in out


def test_verify_single_case_writes_json(tmp_path):
    out = tmp_path / "reports" / "thm1x.json"
    assert _exit_code(["verify-classification", "--case", "thm1.x", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["summary"]["ok"] is True
    assert data["summary"]["unexpected"] == 0
    assert data["suites"][0]["suite"] == "classification"
    assert data["config"]["cases"] == ["thm1.x"]


def test_repeated_case_flag(tmp_path):
    out = tmp_path / "two.json"
    code = _exit_code(["verify-classification", "--case", "thm1.i", "--case", "thm1.x", "--out", str(out)])
    assert code == EXIT_OK
    assert json.loads(out.read_text(encoding="utf-8"))["config"]["cases"] == ["thm1.i", "thm1.x"]


def test_text_format(capsys):
    assert _exit_code(["verify-classification", "--case", "thm1.x", "--format", "text"]) == EXIT_OK
    assert "overall: OK" in capsys.readouterr().out


def test_markdown_format(capsys):
    assert _exit_code(["verify-classification", "--case", "thm1.x", "--format", "markdown"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("# verify-classification")
    assert "## 套件: classification" in out


def test_markdown_and_text_written_to_out(tmp_path):
    md = tmp_path / "reports" / "thm1x.md"
    assert _exit_code(["verify-classification", "--case", "thm1.x", "--format", "markdown", "--out", str(md)]) == EXIT_OK
    assert "| 检验 | 结果 | 预期 | 来源 |" in md.read_text(encoding="utf-8")
    txt = tmp_path / "reports" / "thm1x.txt"
    assert _exit_code(["verify-classification", "--case", "thm1.x", "--format", "text", "--out", str(txt)]) == EXIT_OK
    assert txt.read_text(encoding="utf-8").endswith("overall: OK\n")


def test_rank_one_statement_case(tmp_path):
    out = tmp_path / "thm1ii.json"
    assert _exit_code(["verify-classification", "--case", "thm1.ii", "--out", str(out)]) == EXIT_OK
    names = [c["name"] for c in json.loads(out.read_text(encoding="utf-8"))["suites"][0]["checks"]]
    assert "thm1.ii:covered_picard_one" in names


def test_unknown_case():
    assert _exit_code(["verify-classification", "--case", "thm9.z"]) == EXIT_INPUT_ERROR


def test_missing_database(tmp_path):
    missing = tmp_path / "nothing.json"
    assert _exit_code(["verify-classification", "--db", str(missing)]) == EXIT_INPUT_ERROR
    assert _exit_code(["list-cases", "--db", str(missing)]) == EXIT_INPUT_ERROR


def test_corrupt_database(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json", encoding="utf-8")
    assert _exit_code(["verify-classification", "--db", str(bad)]) == EXIT_INPUT_ERROR


def test_schema_violation(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"entries": [{"id": "x"}]}), encoding="utf-8")
    assert _exit_code(["verify-classification", "--db", str(bad)]) == EXIT_INPUT_ERROR


def test_nonpositive_samples():
    assert _exit_code(["check-jordan", "--samples", "0"]) == EXIT_INPUT_ERROR


def test_zero_jobs():
    assert _exit_code(["check-jordan", "--n-jobs", "0"]) == EXIT_INPUT_ERROR


def test_unknown_format_rejected_by_parser():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["check-g2", "--format", "xml"])


def test_tampered_entry_fails(tmp_path, db_path):
    raw = json.loads(open(db_path, encoding="utf-8").read())
    entry = next(e for e in raw["entries"] if e["id"] == "thm1.x")
    entry["dimension"] += 1
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps({"version": 1, "entries": [entry]}), encoding="utf-8")
    assert _exit_code(["verify-classification", "--db", str(tampered), "--case", "thm1.x"]) == EXIT_CHECK_FAILED


def test_parser_defaults():
    args = build_parser().parse_args(["check-spinor"])
    assert args.samples is None
    assert args.format == "json"
    assert args.n_jobs == 1
