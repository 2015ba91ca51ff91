"""
项目常量定义
"""

from typing import Dict, List, Tuple

# ============ 随机采样默认值 ============
DEFAULT_SEED: int = 1

# 各检查套件的默认样本数
DEFAULT_SAMPLES: Dict[str, int] = {
    "jordan": 100,
    "composition": 200,
    "g2": 50,
    "spinor": 20,
}

# 有理数采样范围：分子 ∈ [−NUMERATOR_BOUND, NUMERATOR_BOUND]，分母 ∈ [1, DENOMINATOR_BOUND]
NUMERATOR_BOUND: int = 5
DENOMINATOR_BOUND: int = 4

# 退化样本的最大重采样次数
MAX_RESAMPLE: int = 50


# ============ 检查状态 ============
class CheckStatus:
    """检查的期望结果"""

    PASS = "pass"
    FAIL = "fail"  # 按原始数据求值、预期失败（勘误）

    ALL_STATUSES = [PASS, FAIL]


# ============ 检查套件 ============
class Suite:
    """CLI 可运行的检查套件"""

    JORDAN = "jordan"
    G2 = "g2"
    SPINOR = "spinor"
    CLASSIFICATION = "classification"

    ALL_SUITES = [JORDAN, G2, SPINOR, CLASSIFICATION]


# ============ 报告格式 ============
class ReportFormat:
    """--format 的取值"""

    JSON = "json"
    MARKDOWN = "markdown"
    TEXT = "text"  # pandas 表格

    ALL_FORMATS = [JSON, MARKDOWN, TEXT]


# ============ 根系类型表 ============
# 各单型的秩范围 (最小秩, 最大秩)，None 表示无上界
TYPE_RANK_RANGE: Dict[str, Tuple[int, object]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# 例外型的根个数
EXCEPTIONAL_ROOT_COUNTS: Dict[str, int] = {
    "G2": 12,
    "F4": 48,
    "E6": 72,
    "E7": 126,
    "E8": 240,
}

# 例外型的环境空间维数
EXCEPTIONAL_AMBIENT_DIM: Dict[str, int] = {
    "G2": 3,
    "F4": 4,
    "E6": 8,
    "E7": 8,
    "E8": 8,
}

# E 型 Dynkin 图的边（Bourbaki 编号）
E_DIAGRAM_EDGES: List[Tuple[int, int]] = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


# ============ 对称子群与格 ============
class HSpec:
    """对称子群 H 的取法"""

    FIXED = "G^theta"
    NORMALIZER = "N(G^theta)"
    INDEX_TWO = "index_two"

    ALL_SPECS = [FIXED, NORMALIZER, INDEX_TWO]


# 格 χ*(S) 的描述方式
class LatticeKind:
    """单参数子群格的给法"""

    COROOT = "coroot"
    COWEIGHT = "coweight"
    EXPLICIT_WEIGHTS = "explicit_weights"
    EXPLICIT_COWEIGHTS = "explicit_coweights"

    ALL_KINDS = [COROOT, COWEIGHT, EXPLICIT_WEIGHTS, EXPLICIT_COWEIGHTS]


# ============ 齐性模型族 ============
class ModelFamily:
    """数据库中模型簇的种类（维数公式见 classification.models）"""

    GRASSMANNIAN = "grassmannian"
    ISOTROPIC_ORTHOGONAL = "isotropic_orthogonal"
    ISOTROPIC_SYMPLECTIC = "isotropic_symplectic"
    SPINOR = "spinor"
    QUADRIC = "quadric"
    PROJECTIVE = "projective"
    PRODUCT_PROJECTIVE = "product_projective"
    FLAG = "flag"

    ALL_FAMILIES = [
        GRASSMANNIAN,
        ISOTROPIC_ORTHOGONAL,
        ISOTROPIC_SYMPLECTIC,
        SPINOR,
        QUADRIC,
        PROJECTIVE,
        PRODUCT_PROJECTIVE,
        FLAG,
    ]


# 射影空间 P(V) 中 V 的构造
PROJECTIVE_SPACES: List[str] = ["vector", "sym2", "matrices", "wedge", "jordan", "sl"]

# 切片权判定适用的限制根系类型（且 H = G^θ）
SLICE_TYPES: List[str] = ["A2", "G2"]

# 复合成代数的维数 a
COMPOSITION_DIMS: List[int] = [1, 2, 4, 8]
