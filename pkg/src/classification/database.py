"""
分类数据库的读取

数据库是随仓库发布的 JSON 文本（data/classification.json），也可以用 --db 指定外部文件。
读取后只读。
"""

import json
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger
from pydantic import ValidationError

from ..config.settings import DEFAULT_DB_PATH, check_required_files
from ..core.exceptions import DatabaseError
from .schema import ClassificationDatabase, ClassificationEntry, NestingSpec, RankOneStatement


class ClassificationDB:
    """
    分类数据库

    Attributes:
        data: 校验过的数据库内容
        path: 来源路径（内存构造时为 None）
    """

    def __init__(self, data: ClassificationDatabase, path: Optional[str] = None):
        self.data = data
        self.path = path
        self._index = {entry.id: entry for entry in data.entries}

    @classmethod
    def from_dict(cls, raw: Dict[str, Any], path: Optional[str] = None) -> "ClassificationDB":
        """
        由已解析的 JSON 构造

        Raises:
            DatabaseError: 字段缺失或取值非法
        """
        try:
            data = ClassificationDatabase.model_validate(raw)
        except ValidationError as e:
            raise DatabaseError(f"数据库格式错误 ({path or '<memory>'}):\n{e}") from e
        return cls(data, path)

    @classmethod
    def load(cls, path: Optional[str] = None) -> "ClassificationDB":
        """
        读取数据库文件

        Args:
            path: 数据库路径，默认 data/classification.json

        Raises:
            FileNotFoundError: 文件不存在
            DatabaseError: 不是合法的 JSON 或不符合数据格式
        """
        path = path or DEFAULT_DB_PATH
        check_required_files(path)
        try:
            with open(path, "r", encoding="utf-8") as f:
                raw = json.load(f)
        except json.JSONDecodeError as e:
            raise DatabaseError(f"数据库不是合法的 JSON ({path}): {e}") from e
        if not isinstance(raw, dict):
            raise DatabaseError(f"数据库顶层应为对象 ({path})")
        db = cls.from_dict(raw, path)
        logger.info(f"加载分类数据库: {path}（{len(db)} 个条目）")
        return db

    def __len__(self) -> int:
        return len(self.data.entries)

    @property
    def entries(self) -> List[ClassificationEntry]:
        return list(self.data.entries)

    @property
    def nesting(self) -> Optional[NestingSpec]:
        return self.data.nesting

    @property
    def rank_one(self) -> Optional[RankOneStatement]:
        return self.data.rank_one

    def statement_ids(self) -> List[str]:
        """不对应单个条目的总括结论（当前只有秩一结论）"""
        return [self.data.rank_one.id] if self.data.rank_one else []

    def ids(self) -> List[str]:
        return [entry.id for entry in self.data.entries]

    def get(self, case_id: str) -> ClassificationEntry:
        """
        Raises:
            DatabaseError: 条目不存在
        """
        if case_id not in self._index:
            raise DatabaseError(f"未知的条目: {case_id}，可用条目: {self.ids() + self.statement_ids()}")
        return self._index[case_id]

    def select(self, cases: Optional[Sequence[str]] = None) -> List[ClassificationEntry]:
        """按 id 过滤；cases 为空时返回全部条目（保持数据库顺序）"""
        if not cases:
            return self.entries
        wanted = set(cases)
        for case_id in cases:
            if case_id not in self.statement_ids():
                self.get(case_id)
        return [entry for entry in self.data.entries if entry.id in wanted]
