"""
齐性模型簇的维数

- grassmannian G_m(n): m(n − m)
- isotropic_orthogonal IG_m(n)（正交迷向）: m(2n − 3m − 1)/2
- isotropic_symplectic IG_m(n)（辛迷向，含 Lagrange 情形 LG_m(2m)）: m(n − m) − m(m − 1)/2
- spinor 𝕊_n（SO_{2n} 的一支极大迷向子空间族）: n(n − 1)/2
- quadric Q ⊂ P^{n−1}: n − 2
- projective P(V): dim V − 1
- product_projective P^{n−1} × P^{n−1}: 2(n − 1)
- flag G/P: 由根系计算
"""

from math import comb
from typing import Any, Dict

from ..config.constants import ModelFamily
from ..core.exceptions import DatabaseError
from ..lie.roots import RootSystem
from .schema import ModelSpec


def _int_param(params: Dict[str, Any], key: str) -> int:
    if key not in params:
        raise DatabaseError(f"模型参数缺少 {key!r}: {params}")
    value = params[key]
    if not isinstance(value, int) or value < 0:
        raise DatabaseError(f"模型参数 {key!r} 应为非负整数，收到 {value!r}")
    return value


def vector_space_dim(space: str, params: Dict[str, Any]) -> int:
    """P(V) 中 V 的维数"""
    if space == "vector":
        return _int_param(params, "n")
    if space == "sym2":
        n = _int_param(params, "n")
        return n * (n + 1) // 2
    if space == "matrices":
        return _int_param(params, "n") ** 2
    if space == "wedge":
        return comb(_int_param(params, "n"), _int_param(params, "k"))
    if space == "jordan":
        # J_3(A) = Herm_3(A)，a = dim A
        return 3 + 3 * _int_param(params, "a")
    if space == "sl":
        return _int_param(params, "n") ** 2 - 1
    raise DatabaseError(f"未知的射影空间类型: {space!r}")


def ambient_dimension(model: ModelSpec) -> int:
    """模型簇本身的维数（不计 codim）"""
    family = model.family
    p = model.params
    if family == ModelFamily.GRASSMANNIAN:
        m, n = _int_param(p, "m"), _int_param(p, "n")
        return m * (n - m)
    if family == ModelFamily.ISOTROPIC_ORTHOGONAL:
        m, n = _int_param(p, "m"), _int_param(p, "n")
        return m * (2 * n - 3 * m - 1) // 2
    if family == ModelFamily.ISOTROPIC_SYMPLECTIC:
        m, n = _int_param(p, "m"), _int_param(p, "n")
        return m * (n - m) - m * (m - 1) // 2
    if family == ModelFamily.SPINOR:
        n = _int_param(p, "n")
        return n * (n - 1) // 2
    if family == ModelFamily.QUADRIC:
        return _int_param(p, "n") - 2
    if family == ModelFamily.PROJECTIVE:
        return vector_space_dim(p.get("space", "vector"), p) - 1
    if family == ModelFamily.PRODUCT_PROJECTIVE:
        return 2 * (_int_param(p, "n") - 1)
    if family == ModelFamily.FLAG:
        if "group" not in p or "marked" not in p:
            raise DatabaseError(f"flag 模型需要 group 与 marked: {p}")
        return RootSystem(p["group"]).dim_flag(p["marked"])
    raise DatabaseError(f"不支持的模型族: {family!r}")


def model_dimension(model: ModelSpec) -> int:
    """X 的维数：模型维数减去截面余维"""
    return ambient_dimension(model) - model.codim
