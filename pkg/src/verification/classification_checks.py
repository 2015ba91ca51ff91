"""
分类数据库检验套件（verify-classification 命令）
"""

from loguru import logger

from ..classification import ClassificationDB, verify_database
from ..core.config import RunConfig
from ..core.types import SuiteReport


def run_classification_suite(config: RunConfig) -> SuiteReport:
    """
    读取数据库并核验所选条目

    Raises:
        FileNotFoundError: 数据库文件不存在
        DatabaseError: 数据库格式错误或 --case 指定了未知条目
    """
    db = ClassificationDB.load(config.db)
    report = verify_database(db, cases=config.cases, n_jobs=config.n_jobs)
    report.config = dict(config.to_dict(), db=db.path, entries=report.config.get("cases", []))
    logger.info(f"分类核验完成: {report.summary()}")
    return report
