"""
项目全局配置文件

包含数据库路径、报告与日志目录等常量定义
"""

import os
import os.path as osp
import sys

# ============ 路径配置 ============
_root_dir = osp.abspath(osp.join(osp.dirname(osp.abspath(__file__)), "../.."))
_data_dir = osp.join(_root_dir, "data")

if _root_dir not in sys.path:
    sys.path.insert(0, _root_dir)

# ============ 数据文件路径 ============
DATA_DIR: str = _data_dir

# 分类数据库（随仓库发布的 JSON 文本）
DEFAULT_DB_PATH: str = osp.join(_data_dir, "classification.json")

# 数据库格式说明
SCHEMA_DOC_PATH: str = osp.join(_root_dir, "doc", "classification_schema.md")

# ============ 输出目录 ============
REPORTS_DIR: str = osp.join(_root_dir, "reports")
LOGS_DIR: str = osp.join(_root_dir, "logs")


def get_project_root() -> str:
    """获取项目根目录"""
    return _root_dir


def check_required_files(db_path: str = DEFAULT_DB_PATH) -> None:
    """
    检查必要的输入文件是否存在

    Args:
        db_path: 分类数据库路径

    Raises:
        FileNotFoundError: 如果有必要文件缺失
    """
    required_files = {
        "分类数据库": db_path,
    }

    missing_files = []
    for name, path in required_files.items():
        if not osp.exists(path):
            missing_files.append(f"  - {name}: {path}")

    if missing_files:
        raise FileNotFoundError(
            "\n" + "=" * 70 + "\n"
            "错误：以下必要数据文件不存在：\n" + "\n".join(missing_files) + "\n" + "=" * 70 + "\n"
            "请确认：\n"
            "  1. 默认数据库随仓库发布于 data/classification.json\n"
            "  2. 使用 --db 指定外部数据库时路径正确\n"
            "  3. 数据库格式见 doc/classification_schema.md\n"
            + "=" * 70
        )


def ensure_dirs() -> None:
    """确保必要的目录存在"""
    dirs = [
        REPORTS_DIR,
        LOGS_DIR,
    ]
    for d in dirs:
        os.makedirs(d, exist_ok=True)
