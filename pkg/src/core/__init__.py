"""
核心模块

提供项目核心数据类型、配置、日志和套件注册表
"""

from .config import RunConfig, SamplingConfig
from .types import CheckResult, SuiteReport
from .logger import LoggerManager, get_logger
from .registry import SuiteRegistry
from .exceptions import (
    SymVarError,
    FieldError,
    DimensionMismatchError,
    NotSkewSymmetricError,
    AlgebraMismatchError,
    CompositionIdentityError,
    RootSystemError,
    ConeError,
    DegenerateSampleError,
    DatabaseError,
    ConfigurationError,
)

__all__ = [
    # config
    "RunConfig",
    "SamplingConfig",
    # types
    "CheckResult",
    "SuiteReport",
    # logger
    "LoggerManager",
    "get_logger",
    # registry
    "SuiteRegistry",
    # exceptions
    "SymVarError",
    "FieldError",
    "DimensionMismatchError",
    "NotSkewSymmetricError",
    "AlgebraMismatchError",
    "CompositionIdentityError",
    "RootSystemError",
    "ConeError",
    "DegenerateSampleError",
    "DatabaseError",
    "ConfigurationError",
]
