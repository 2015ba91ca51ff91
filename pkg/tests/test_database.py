"""
分类数据库的加载与格式校验
"""

import json

import pytest

from src.classification import ClassificationDB
from src.classification.schema import ClassificationEntry
from src.core.exceptions import DatabaseError


def test_load_default(db):
    assert len(db) == len(db.ids()) == len(set(db.ids()))
    assert "thm1.x" in db.ids()
    assert db.nesting is not None
    assert db.get("thm1.x").restricted_type == "G2"


def test_select(db):
    assert [e.id for e in db.select(["thm1.x", "thm1.i"])] == ["thm1.i", "thm1.x"]
    assert len(db.select()) == len(db)
    with pytest.raises(DatabaseError):
        db.select(["thm9.zz"])


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        ClassificationDB.load(str(tmp_path / "missing.json"))


def test_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json", encoding="utf-8")
    with pytest.raises(DatabaseError):
        ClassificationDB.load(str(path))


def test_schema_violations(db_path):
    with open(db_path, encoding="utf-8") as f:
        raw = json.load(f)

    duplicated = dict(raw, entries=raw["entries"] + raw["entries"][:1])
    with pytest.raises(DatabaseError):
        ClassificationDB.from_dict(duplicated)

    entry = dict(raw["entries"][0])
    entry.pop("model")
    with pytest.raises(DatabaseError):
        ClassificationDB.from_dict(dict(raw, entries=[entry]))

    entry = dict(raw["entries"][0], h="H")
    with pytest.raises(DatabaseError):
        ClassificationDB.from_dict(dict(raw, entries=[entry]))


def test_entry_without_embedding_needs_no_fan():
    entry = ClassificationEntry.model_validate(
        {
            "id": "f4",
            "group": "F4",
            "theta": {"kind": "negation"},
            "h": "G^theta",
            "restricted_type": "F4",
            "rank": 4,
            "embedding": False,
        }
    )
    assert entry.fan == [] and entry.model is None


def test_rank_one_statement_record(db):
    assert db.statement_ids() == ["thm1.ii"]
    assert [case.entry for case in db.rank_one.excluded] == ["thm2.3", None]
    assert [e.id for e in db.select(["thm1.ii", "thm2.3"])] == ["thm2.3"]
    assert db.select(["thm1.ii"]) == []


def test_rank_one_id_must_be_unique(db_path):
    with open(db_path, encoding="utf-8") as f:
        raw = json.load(f)
    clash = dict(raw, rank_one=dict(raw["rank_one"], id="thm2.3"))
    with pytest.raises(DatabaseError):
        ClassificationDB.from_dict(clash)
