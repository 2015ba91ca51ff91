"""
分类条目核验、负对照与整库检验
"""

import pytest

from src.classification import run_negative_controls, verify_database, verify_entry
from src.classification.verifier import NEGATIVE_CONTROLS, admits_embedding, corrupt, dimension_audit, rank_one_checks
from src.config.constants import CheckStatus
from src.lie.fans import Verdict


@pytest.mark.parametrize("case_id", ["thm1.i", "thm1.x", "thm1.iii.b-sl3", "thm1.xi-f4", "thm2.8"])
def test_single_entries_pass(db, case_id):
    checks = verify_entry(db.get(case_id))
    assert checks
    assert all(c.ok for c in checks), [c.name for c in checks if not c.ok]


def test_g2_entry_records_printed_slice_weight(db):
    checks = {c.name: c for c in verify_entry(db.get("thm1.x"))}
    assert checks["thm1.x:cone1_slice_weight"].passed
    printed = checks["thm1.x:cone1_slice_weight_printed"]
    assert printed.expected == CheckStatus.FAIL and not printed.passed and printed.ok
    assert checks["thm1.x:homogeneity"].certificate["verdict"] == Verdict.NON_TRANSITIVE


def test_admissible_types():
    for label in ("A1", "A1xA1", "A2", "B3", "C2", "BC2", "D4", "G2"):
        assert admits_embedding(label)
    for label in ("D3", "F4", "E6", "E7", "A2xA2"):
        assert not admits_embedding(label)


def test_dimension_audit(db):
    for entry in db.entries:
        if entry.embedding:
            assert all(c.ok for c in dimension_audit(entry)), entry.id


@pytest.mark.parametrize("control, base_id, target", NEGATIVE_CONTROLS)
def test_corruption_hits_target(db, control, base_id, target):
    results = verify_entry(corrupt(db.get(base_id), control))
    assert any(c.name == f"{base_id}:{target}" and not c.passed for c in results)


def test_unknown_control(db):
    with pytest.raises(ValueError):
        corrupt(db.get("thm1.x"), "nothing")


def test_negative_controls(db):
    checks = run_negative_controls(db)
    assert len(checks) == len(NEGATIVE_CONTROLS) + 1
    assert checks[-1].name == "negative:exclusion_dropped"
    assert all(c.passed for c in checks)


def test_full_database(db):
    report = verify_database(db)
    assert report.ok, [c.name for c in report.checks if not c.ok]
    non_transitive = report.get("database:non_transitive_set")
    assert non_transitive.passed
    assert non_transitive.detail["count"] == 6
    assert report.get("nesting:jordan_dimensions").passed
    assert report.get("thm1.ii:covered_picard_one").passed


def test_case_filter_skips_database_checks(db):
    report = verify_database(db, cases=["thm1.x"])
    assert report.ok
    assert all(c.name.startswith("thm1.x:") or c.name.startswith("database:") for c in report.checks)
    assert report.get("database:non_transitive_set").detail["non_transitive"] == ["thm1.x"]


# ============ 秩一结论 ============


def test_rank_one_statement(db):
    checks = {c.name: c for c in rank_one_checks(db)}
    assert all(c.passed for c in checks.values()), [n for n, c in checks.items() if not c.passed]
    covered = checks["thm1.ii:covered_picard_one"].detail["covered"]
    assert "thm2.3" not in covered
    assert {"thm2.1", "thm2.4", "thm2.8"} <= set(covered)
    assert checks["thm1.ii:excluded1_entry"].detail["entry"] == "thm2.3"
    assert checks["thm1.ii:excluded2_model"].detail["dimension"] == 2


def test_rank_one_without_exclusions_fails(db):
    statement = db.rank_one.model_copy(update={"excluded": []})
    covered = {c.name: c for c in rank_one_checks(db, statement)}["thm1.ii:covered_picard_one"]
    assert not covered.passed
    assert "picard_number" in covered.detail["problems"]["thm2.3"]


def test_rank_one_case_filter(db):
    report = verify_database(db, cases=["thm1.ii"])
    assert report.ok
    assert report.config["cases"] == ["thm1.ii"]
    assert report.get("thm1.ii:covered_picard_one").passed
    assert report.get("negative:exclusion_dropped") is None
