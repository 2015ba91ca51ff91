"""
Smooth Projective Symmetric Variety Checks

光滑射影对称簇（Picard 数为一）分类的精确核验包
"""

__version__ = "1.0.0"

# 核心模块
from . import core
from . import config

# 精确代数与李理论
from . import algebra
from . import lie

# 几何模型
from . import geometry

# 分类数据库
from . import classification

# 检验套件
from . import verification

# 工具模块
from . import utils

__all__ = [
    "core",
    "config",
    "algebra",
    "lie",
    "geometry",
    "classification",
    "verification",
    "utils",
]
