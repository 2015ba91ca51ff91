"""
检验套件：每个 CLI 命令对应一个模块
"""

from .jordan_checks import run_jordan_suite
from .g2_checks import run_g2_suite
from .spinor_checks import run_spinor_suite
from .classification_checks import run_classification_suite
from .runner import emit, render, run_suites, validate_config

__all__ = [
    "run_jordan_suite",
    "run_g2_suite",
    "run_spinor_suite",
    "run_classification_suite",
    "emit",
    "render",
    "run_suites",
    "validate_config",
]
