"""
权空间上的对合 θ

数据库中对合按以下几种方式给出（JSON 字段 kind）：

- negation：θ = −id
- swap_negate：两个相同分量的乘积上 (x, y) ↦ (−y, −x)
- signed_permutation：images[k] = ±j 表示 θ(e_{k+1}) = ±e_j（1 起标号）
- fix_span：θ = 2P − id，P 为到给定单根张成空间的正交投影
- matrix：直接给出有理矩阵（字符串元素）
- product：factors 按根系分量逐一给出，拼成分块对角矩阵
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Sequence

from loguru import logger

from ..algebra.field import parse_rational
from ..algebra.linalg import Mat, dot
from ..core.exceptions import RootSystemError
from .roots import RootSystem, ambient_dim

Spec = Dict[str, Any]


def _negation(n: int) -> List[List[Fraction]]:
    return [[Fraction(-int(i == j)) for j in range(n)] for i in range(n)]


def _swap_negate(n: int) -> List[List[Fraction]]:
    if n % 2:
        raise RootSystemError("swap_negate 需要两个相同分量")
    half = n // 2
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(half):
        m[k][half + k] = Fraction(-1)
        m[half + k][k] = Fraction(-1)
    return m


def _signed_permutation(n: int, images: Sequence[int]) -> List[List[Fraction]]:
    if len(images) != n or sorted(abs(x) for x in images) != list(range(1, n + 1)):
        raise RootSystemError(f"非法的带符号置换: {images}（环境维数 {n}）")
    m = [[Fraction(0)] * n for _ in range(n)]
    for k, img in enumerate(images):
        # 第 k 列为 θ(e_{k+1})
        m[abs(img) - 1][k] = Fraction(1 if img > 0 else -1)
    return m


def _fix_span(root_system: RootSystem, indices: Sequence[int]) -> List[List[Fraction]]:
    """θ = 2P − id"""
    n = root_system.ambient_dim
    bad = [i for i in indices if not 1 <= i <= root_system.rank]
    if bad:
        raise RootSystemError(f"fix_span 单根标号越界: {bad}")
    basis = [list(root_system.simple_roots[i - 1]) for i in indices]
    if not basis:
        return _negation(n)
    gram = Mat([[dot(u, v) for v in basis] for u in basis]).inverse()
    k = len(basis)
    # P = Bᵀ G⁻¹ B（B 的行为基向量）
    proj = [
        [sum((basis[a][i] * gram[a, b] * basis[b][j] for a in range(k) for b in range(k)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]
    return [[2 * proj[i][j] - int(i == j) for j in range(n)] for i in range(n)]


def _matrix(n: int, rows: Sequence[Sequence[str]]) -> List[List[Fraction]]:
    m = [[parse_rational(x) for x in row] for row in rows]
    if len(m) != n or any(len(row) != n for row in m):
        raise RootSystemError(f"对合矩阵尺寸应为 {n}×{n}")
    return m


def build_theta(spec: Spec, root_system: RootSystem) -> Mat:
    """
    由 JSON 描述构造 θ 在环境坐标下的矩阵

    Raises:
        RootSystemError: 未知的 kind 或数据不合法
    """
    kind = spec.get("kind")
    n = root_system.ambient_dim
    if kind == "negation":
        return Mat(_negation(n))
    if kind == "swap_negate":
        if len(root_system.components) != 2 or root_system.components[0] != root_system.components[1]:
            raise RootSystemError(f"swap_negate 需要 GxG 型，收到 {root_system.label}")
        return Mat(_swap_negate(n))
    if kind == "signed_permutation":
        return Mat(_signed_permutation(n, spec["images"]))
    if kind == "fix_span":
        return Mat(_fix_span(root_system, spec["roots"]))
    if kind == "matrix":
        return Mat(_matrix(n, spec["rows"]))
    if kind == "product":
        factors = spec["factors"]
        if len(factors) != len(root_system.components):
            raise RootSystemError(f"product 的因子数 {len(factors)} 与分量数 {len(root_system.components)} 不一致")
        m = [[Fraction(0)] * n for _ in range(n)]
        offset = 0
        for (family, rank), factor in zip(root_system.components, factors):
            block = build_theta(factor, RootSystem(f"{family}{rank}")).to_rows()
            size = ambient_dim(family, rank)
            for i in range(size):
                for j in range(size):
                    m[offset + i][offset + j] = block[i][j]
            offset += size
        return Mat(m)
    raise RootSystemError(f"未知的对合类型: {kind!r}")


class InvolutionData:
    """
    根系及其上的对合

    Attributes:
        root_system: 环境根系 R_G
        theta: 环境坐标下的 θ
    """

    def __init__(self, root_system: RootSystem, theta: Mat):
        self.root_system = root_system
        self.theta = theta
        self.validate()

    @classmethod
    def from_spec(cls, group_type: str, spec: Spec) -> "InvolutionData":
        root_system = RootSystem(group_type)
        return cls(root_system, build_theta(spec, root_system))

    def apply(self, vec: Sequence) -> List[Fraction]:
        return self.theta.apply(list(vec))

    def validate(self) -> None:
        """
        θ² = id 且 θ 置换根集

        Raises:
            RootSystemError: 条件不满足
        """
        n = self.root_system.ambient_dim
        if self.theta.rows != n or self.theta.cols != n:
            raise RootSystemError(f"θ 的尺寸 {self.theta.rows}×{self.theta.cols} 与环境维数 {n} 不一致")
        if self.theta @ self.theta != Mat.identity(n):
            raise RootSystemError(f"{self.root_system.label}: θ 不是对合")
        for beta in self.root_system.roots():
            if not self.root_system.is_root(self.apply(beta)):
                raise RootSystemError(f"{self.root_system.label}: θ 不置换根集（{list(map(str, beta))}）")
        logger.debug(f"{self.root_system.label}: 对合校验通过，固定根 {len(self.fixed_roots())} 个")

    def fixed_roots(self) -> List[tuple]:
        """R_G⁰ = {β : θβ = β}"""
        return [b for b in self.root_system.roots() if tuple(self.apply(b)) == b]

    def moved_roots(self) -> List[tuple]:
        """R_G¹ = R_G \\ R_G⁰"""
        fixed = set(self.fixed_roots())
        return [b for b in self.root_system.roots() if b not in fixed]
