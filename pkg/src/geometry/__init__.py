"""
G2 的 (q, ϖ) 模型与 Λ^even W 上的旋量实现
"""

from .g2 import SevenSpace, octonion_from_q_phi
from .spinor import SpinorModel, pfaffian_chart, solve_graph

__all__ = [
    "SevenSpace",
    "octonion_from_q_phi",
    "SpinorModel",
    "pfaffian_chart",
    "solve_graph",
]
