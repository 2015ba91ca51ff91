"""
配置模块

提供项目全局配置、常量和路径管理
"""

from .settings import (
    # 路径
    DATA_DIR,
    DEFAULT_DB_PATH,
    SCHEMA_DOC_PATH,
    REPORTS_DIR,
    LOGS_DIR,
    # 函数
    get_project_root,
    check_required_files,
    ensure_dirs,
)

from .constants import (
    # 采样
    DEFAULT_SEED,
    DEFAULT_SAMPLES,
    NUMERATOR_BOUND,
    DENOMINATOR_BOUND,
    MAX_RESAMPLE,
    # 状态与套件
    CheckStatus,
    Suite,
    ReportFormat,
    # 根系
    TYPE_RANK_RANGE,
    EXCEPTIONAL_ROOT_COUNTS,
    EXCEPTIONAL_AMBIENT_DIM,
    E_DIAGRAM_EDGES,
    # 对称子群与格
    HSpec,
    LatticeKind,
    ModelFamily,
    PROJECTIVE_SPACES,
    SLICE_TYPES,
    COMPOSITION_DIMS,
)

__all__ = [
    # settings
    "DATA_DIR",
    "DEFAULT_DB_PATH",
    "SCHEMA_DOC_PATH",
    "REPORTS_DIR",
    "LOGS_DIR",
    "get_project_root",
    "check_required_files",
    "ensure_dirs",
    # constants
    "DEFAULT_SEED",
    "DEFAULT_SAMPLES",
    "NUMERATOR_BOUND",
    "DENOMINATOR_BOUND",
    "MAX_RESAMPLE",
    "CheckStatus",
    "Suite",
    "ReportFormat",
    "TYPE_RANK_RANGE",
    "EXCEPTIONAL_ROOT_COUNTS",
    "EXCEPTIONAL_AMBIENT_DIM",
    "E_DIAGRAM_EDGES",
    "HSpec",
    "LatticeKind",
    "ModelFamily",
    "PROJECTIVE_SPACES",
    "SLICE_TYPES",
    "COMPOSITION_DIMS",
]
