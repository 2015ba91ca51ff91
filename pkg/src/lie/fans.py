"""
着色锥与着色扇

- 着色锥的两个条件：生成元或为颜色的像 α_i∨，或位于估值锥 −C⁺；相对内部与 −C⁺ 相交
- 完备性：单锥直接判定包含；双锥按公共面所在超平面把 −C⁺ 切成两半分别判定
- 切片最高权与齐性判定
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from ..algebra.linalg import dot, kernel, solve
from ..core.exceptions import ConeError
from .polyhedra import cone_membership, fourier_motzkin
from .restricted import RestrictedRootSystem, Vector, valuation_cone


@dataclass
class ColoredCone:
    """
    着色锥

    Attributes:
        generators: 环境坐标中的生成元
        colors: 颜色（单限制根标号，从 1 开始）
        tokens: 原始记号（仅用于报告）
    """

    generators: List[Vector] = field(default_factory=list)
    colors: List[int] = field(default_factory=list)
    tokens: List[str] = field(default_factory=list)

    @classmethod
    def from_tokens(cls, rrs: RestrictedRootSystem, tokens: Sequence[str], colors: Sequence[int]) -> "ColoredCone":
        return cls([rrs.parse_vector(t) for t in tokens], sorted(colors), list(tokens))

    def to_dict(self) -> Dict:
        return {"generators": self.tokens or [list(map(str, g)) for g in self.generators], "colors": self.colors}


@dataclass
class ColoredFan:
    """着色扇（仅记录极大锥）"""

    cones: List[ColoredCone] = field(default_factory=list)


# ============ 着色锥 ============


def validate_cone(cone: ColoredCone, rrs: RestrictedRootSystem) -> Tuple[bool, Dict]:
    """
    校验着色锥条件

    Returns:
        (是否合法, 证书)
    """
    cert: Dict = {"cone": cone.to_dict()}
    if not cone.generators:
        # 零锥对应开轨道 G/H 本身
        cert["zero_cone"] = True
        return not cone.colors, cert

    coroots = rrs.coroots()
    vcone = valuation_cone(rrs)
    color_images = {c: coroots[c - 1] for c in cone.colors if 1 <= c <= rrs.rank}
    if len(color_images) != len(cone.colors):
        cert["error"] = "颜色标号越界"
        return False, cert
    missing = [c for c, img in color_images.items() if img not in cone.generators]
    if missing:
        cert["colors_not_generators"] = missing
        return False, cert
    offending = [
        i for i, g in enumerate(cone.generators) if g not in color_images.values() and not vcone.contains(g)
    ]
    if offending:
        cert["generators_outside_valuation_cone"] = offending
        return False, cert

    # 快速路径：生成元之和
    center = [sum(col, Fraction(0)) for col in zip(*cone.generators)]
    if vcone.contains(center):
        cert["interior_witness"] = [str(x) for x in center]
        cert["interior_method"] = "average"
        return True, cert

    # λ_i ≥ 1 且 (α_j, Σ λ_i g_i) ≤ 0
    k = len(cone.generators)
    rows, rhs = [], []
    for i in range(k):
        rows.append([Fraction(-int(i == j)) for j in range(k)])
        rhs.append(Fraction(-1))
    for alpha in rrs.basis:
        rows.append([dot(alpha, g) for g in cone.generators])
        rhs.append(Fraction(0))
    lam = fourier_motzkin(rows, rhs)
    cert["interior_method"] = "fourier_motzkin"
    if lam is None:
        cert["interior_witness"] = None
        return False, cert
    cert["interior_witness"] = [str(x) for x in lam]
    return True, cert


# ============ 完备性 ============


def _membership_certificates(generators: Sequence[Vector], vectors: Sequence[Vector]) -> Tuple[bool, List]:
    certs = []
    ok = True
    for v in vectors:
        coeffs = cone_membership(generators, v)
        certs.append(None if coeffs is None else [str(c) for c in coeffs])
        ok = ok and coeffs is not None
    return ok, certs


def is_complete(fan: ColoredFan, rrs: RestrictedRootSystem) -> Tuple[bool, Dict]:
    """
    −C⁺ 是否包含于各极大锥之并

    Raises:
        ConeError: 多于两个极大锥
    """
    vcone = valuation_cone(rrs)
    cones = fan.cones
    if len(cones) > 2:
        raise ConeError(f"不支持含 {len(cones)} 个极大锥的扇")
    if not cones:
        return False, {"method": "empty"}
    if len(cones) == 1:
        ok, certs = _membership_certificates(cones[0].generators, vcone.generators)
        return ok, {"method": "single_cone", "valuation_generators_in_cone": certs}

    c1, c2 = cones
    shared = [g for g in c1.generators if g in c2.generators]
    only1 = [g for g in c1.generators if g not in shared]
    only2 = [g for g in c2.generators if g not in shared]
    cert: Dict = {"method": "shared_facet_split", "shared": len(shared)}
    if not only1 or not only2:
        cert["error"] = "两个锥的生成元互相包含"
        return False, cert

    coords = [rrs.coroot_coordinates(g) for g in shared]
    normals = kernel(coords, rrs.rank) if coords else [[Fraction(int(i == j)) for j in range(rrs.rank)] for i in range(rrs.rank)]
    if len(normals) != 1:
        raise ConeError(f"公共生成元不张成超平面（余维 {len(normals)}）")
    normal = normals[0]

    def h(v):
        return dot(normal, rrs.coroot_coordinates(v))

    side1 = [h(g) for g in only1]
    side2 = [h(g) for g in only2]
    if all(x > 0 for x in side1) and all(x < 0 for x in side2):
        sign = 1
    elif all(x < 0 for x in side1) and all(x > 0 for x in side2):
        sign = -1
    else:
        cert["faces_compatible"] = False
        return False, cert
    cert["faces_compatible"] = True

    values = [sign * h(g) for g in vcone.generators]
    upper = [g for g, v in zip(vcone.generators, values) if v >= 0]
    lower = [g for g, v in zip(vcone.generators, values) if v <= 0]
    for gi, hi in zip(vcone.generators, values):
        for gj, hj in zip(vcone.generators, values):
            if hi > 0 > hj:
                mixed = tuple(hi * y - hj * x for x, y in zip(gi, gj))
                upper.append(mixed)
                lower.append(mixed)
    ok1, certs1 = _membership_certificates(c1.generators, upper)
    ok2, certs2 = _membership_certificates(c2.generators, lower)
    cert["upper_half_in_first"] = certs1
    cert["lower_half_in_second"] = certs2
    return ok1 and ok2, cert


# ============ 切片最高权 ============


def _primitive(coeffs: Sequence[Fraction]) -> List[int]:
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return [x // g for x in ints]


def slice_highest_weight(rrs: RestrictedRootSystem, cone: ColoredCone, lattice: Sequence[Vector]) -> Tuple[Vector, Dict]:
    """
    闭轨道处切片表示的最高权 ω

    ϖ∨ 为格中与颜色 α_c 正交的本原向量，符号取使 ϖ∨ ∈ C；
    ω 由 (ω, α_c∨) = 1 与 (ω, ϖ∨) = 1 唯一确定。

    Raises:
        ConeError: 锥的颜色数不为 1，或线性方程组不相容
    """
    if rrs.rank != 2:
        raise ConeError(f"切片最高权仅对秩 2 定义，收到秩 {rrs.rank}")
    if len(cone.colors) != 1:
        raise ConeError(f"切片最高权需要恰好一个颜色，收到 {cone.colors}")
    c = cone.colors[0]
    alpha_c = rrs.basis[c - 1]
    coroot_c = rrs.coroots()[c - 1]

    relation = kernel([[dot(alpha_c, v) for v in lattice]], len(lattice))
    if len(relation) != 1:
        raise ConeError("与颜色正交的格向量不唯一")
    prim = _primitive(relation[0])
    varpi = tuple(sum((Fraction(k) * v[i] for k, v in zip(prim, lattice)), Fraction(0)) for i in range(rrs.ambient_dim))
    if cone_membership(cone.generators, varpi) is None:
        varpi = tuple(-x for x in varpi)
        if cone_membership(cone.generators, varpi) is None:
            raise ConeError("ϖ∨ 的两个符号都不在锥中")

    weights = rrs.weights()
    rows = [[dot(w, coroot_c) for w in weights], [dot(w, varpi) for w in weights]]
    coeffs = solve(rows, [Fraction(1), Fraction(1)])
    if coeffs is None:
        raise ConeError("切片最高权方程组不相容")
    omega = tuple(sum((x * w[i] for x, w in zip(coeffs, weights)), Fraction(0)) for i in range(rrs.ambient_dim))
    cert = {
        "color": c,
        "varpi_lattice_coordinates": prim,
        "varpi_coroot_coordinates": [str(x) for x in rrs.coroot_coordinates(varpi)],
        "omega_weight_coordinates": [str(x) for x in coeffs],
        "dominant": rrs.is_dominant(omega),
    }
    logger.debug(f"切片最高权（颜色 {c}）: {cert['omega_weight_coordinates']}")
    return omega, cert


def weight_coordinates(rrs: RestrictedRootSystem, weight: Sequence) -> List[Fraction]:
    """在基本权基 ω 下的坐标，即 (w, α_i∨)"""
    return [dot(weight, c) for c in rrs.coroots()]


class Verdict(str, Enum):
    """自同构群是否在簇上可迁"""

    TRANSITIVE = "transitive"
    NON_TRANSITIVE = "non-transitive"


def homogeneity_verdict(
    rrs: RestrictedRootSystem,
    fan: ColoredFan,
    lattice: Sequence[Vector],
    slice_applicable: bool,
    model_homogeneous: bool,
) -> Tuple[Verdict, Dict]:
    """
    自同构群是否可迁

    切片条件成立时（H = G^θ，类型 A2 或 G2）：每个闭轨道的切片权都不支配则不可迁；
    否则采用齐性模型给出的结论。
    """
    if not slice_applicable:
        verdict = Verdict.TRANSITIVE if model_homogeneous else Verdict.NON_TRANSITIVE
        return verdict, {"method": "model"}
    weights = []
    for cone in fan.cones:
        if not cone.colors:
            continue
        _, cert = slice_highest_weight(rrs, cone, lattice)
        weights.append(cert)
    non_dominant = bool(weights) and all(not w["dominant"] for w in weights)
    verdict = Verdict.NON_TRANSITIVE if non_dominant else Verdict.TRANSITIVE
    return verdict, {"method": "slice_weight", "closed_orbits": weights}
