"""
工具模块

报告生成、随机有理数采样、文本表格
"""

from .report import ExactEncoder, ReportGenerator
from .sampling import RationalSampler
from .tables import render_text, suite_table

__all__ = [
    "ExactEncoder",
    "ReportGenerator",
    "RationalSampler",
    "render_text",
    "suite_table",
]
