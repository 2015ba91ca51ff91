"""
有限根系（A–G 型及其乘积）

单根采用 Bourbaki 标准坐标模型，内积为环境空间的标准点积。
单根标号对外从 1 开始（与 Dynkin 图编号一致），内部列表从 0 开始。
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.linalg import Mat, dot
from ..config.constants import (
    E_DIAGRAM_EDGES,
    EXCEPTIONAL_AMBIENT_DIM,
    EXCEPTIONAL_ROOT_COUNTS,
    TYPE_RANK_RANGE,
)
from ..core.exceptions import RootSystemError

Vector = Tuple[Fraction, ...]

_COMPONENT_RE = re.compile(r"^([A-G])(\d+)$")

# Weyl 轨道枚举的秩上限
MAX_ORBIT_RANK = 4


def parse_type(label: str) -> List[Tuple[str, int]]:
    """
    解析类型标签，如 "B2xA1" -> [("B", 2), ("A", 1)]

    Raises:
        RootSystemError: 未知或秩不合法的类型
    """
    components = []
    for part in label.split("x"):
        match = _COMPONENT_RE.match(part.strip())
        if not match:
            raise RootSystemError(f"未知根系类型: {label!r}")
        family, n = match.group(1), int(match.group(2))
        low, high = TYPE_RANK_RANGE[family]
        if n < low or (high is not None and n > high) or (family == "G" and n != 2):
            raise RootSystemError(f"{family} 型不支持秩 {n}")
        components.append((family, n))
    return components


def ambient_dim(family: str, n: int) -> int:
    if family == "A":
        return n + 1
    if family in ("B", "C", "D"):
        return n
    return EXCEPTIONAL_AMBIENT_DIM[f"{family}{n}"]


def _unit(dim: int, *terms: Tuple[int, object]) -> List[Fraction]:
    vec = [Fraction(0)] * dim
    for pos, coef in terms:
        vec[pos - 1] += Fraction(coef)
    return vec


def simple_roots_of(family: str, n: int) -> List[List[Fraction]]:
    """单型的 Bourbaki 单根（环境坐标 e1..eN）"""
    dim = ambient_dim(family, n)
    if family == "A":
        return [_unit(dim, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
    if family in ("B", "C", "D"):
        roots = [_unit(dim, (i, 1), (i + 1, -1)) for i in range(1, n)]
        if family == "B":
            roots.append(_unit(dim, (n, 1)))
        elif family == "C":
            roots.append(_unit(dim, (n, 2)))
        else:
            roots.append(_unit(dim, (n - 1, 1), (n, 1)))
        return roots
    if family == "G":
        return [_unit(3, (1, 1), (2, -1)), _unit(3, (1, -2), (2, 1), (3, 1))]
    if family == "F":
        half = Fraction(1, 2)
        return [
            _unit(4, (2, 1), (3, -1)),
            _unit(4, (3, 1), (4, -1)),
            _unit(4, (4, 1)),
            _unit(4, (1, half), (2, -half), (3, -half), (4, -half)),
        ]
    if family == "E":
        half = Fraction(1, 2)
        roots = [
            _unit(8, (1, half), (8, half), *[(k, -half) for k in range(2, 8)]),
            _unit(8, (1, 1), (2, 1)),
            _unit(8, (2, 1), (1, -1)),
        ]
        for k in range(3, 8):
            roots.append(_unit(8, (k, 1), (k - 1, -1)))
        return roots[:n]
    raise RootSystemError(f"未知根系类型: {family}{n}")


def expected_cartan(family: str, n: int) -> List[List[int]]:
    """
    由 Dynkin 图给出的 Cartan 矩阵 A_ij = (α_i, α_j∨)

    多重边 (长根 l, 短根 s, 重数 m)：A[s][l] = −1，A[l][s] = −m。
    """
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    simple_edges: List[Tuple[int, int]] = []
    multi_edges: List[Tuple[int, int, int]] = []
    if family == "A":
        simple_edges = [(i, i + 1) for i in range(1, n)]
    elif family == "B":
        simple_edges = [(i, i + 1) for i in range(1, n - 1)]
        multi_edges = [(n - 1, n, 2)]
    elif family == "C":
        simple_edges = [(i, i + 1) for i in range(1, n - 1)]
        multi_edges = [(n, n - 1, 2)]
    elif family == "D":
        simple_edges = [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    elif family == "G":
        multi_edges = [(2, 1, 3)]
    elif family == "F":
        simple_edges = [(1, 2), (3, 4)]
        multi_edges = [(2, 3, 2)]
    elif family == "E":
        simple_edges = [(i, j) for i, j in E_DIAGRAM_EDGES if i <= n and j <= n]
    for i, j in simple_edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    for long_, short, m in multi_edges:
        a[short - 1][long_ - 1] = -1
        a[long_ - 1][short - 1] = -m
    return a


def coroot(alpha: Sequence) -> List[Fraction]:
    """α∨ = 2α/(α, α)"""
    norm = dot(alpha, alpha)
    if not norm:
        raise RootSystemError("零向量没有余根")
    return [2 * x / norm for x in alpha]


def reflect(v: Sequence, alpha: Sequence) -> List[Fraction]:
    """s_α(v) = v − (v, α∨)α"""
    c = dot(v, coroot(alpha))
    return [x - c * y for x, y in zip(v, alpha)]


class RootSystem:
    """
    根系

    Attributes:
        label: 类型标签（乘积以 "x" 连接）
        components: [(族, 秩), ...]
        simple_roots: 环境坐标中的单根
        ambient_dim: 环境空间维数
    """

    def __init__(self, label: str, simple_roots: Optional[Sequence[Sequence]] = None):
        self.components = parse_type(label)
        self.label = label
        if simple_roots is None:
            simple_roots = self._product_simple_roots()
        self.simple_roots: List[Vector] = [tuple(Fraction(x) for x in r) for r in simple_roots]
        self.rank = len(self.simple_roots)
        self.ambient_dim = len(self.simple_roots[0])
        if Mat([list(r) for r in self.simple_roots]).rank() != self.rank:
            raise RootSystemError(f"{label}: 单根线性相关（Gram 矩阵退化）")
        self._check_cartan()
        self._roots: Optional[Dict[Vector, Tuple[int, ...]]] = None

    def _product_simple_roots(self) -> List[List[Fraction]]:
        dims = [ambient_dim(f, n) for f, n in self.components]
        total = sum(dims)
        roots = []
        offset = 0
        for (family, n), dim in zip(self.components, dims):
            for r in simple_roots_of(family, n):
                vec = [Fraction(0)] * total
                vec[offset : offset + dim] = r
                roots.append(vec)
            offset += dim
        return roots

    def _check_cartan(self) -> None:
        expected = [[0] * self.rank for _ in range(self.rank)]
        offset = 0
        for family, n in self.components:
            block = expected_cartan(family, n)
            for i in range(n):
                for j in range(n):
                    expected[offset + i][offset + j] = block[i][j]
            offset += n
        actual = self.cartan_matrix()
        if actual != expected:
            raise RootSystemError(f"{self.label}: Cartan 矩阵与类型不符: {actual}")

    # ============ 基本数据 ============

    def coroots(self) -> List[List[Fraction]]:
        return [coroot(a) for a in self.simple_roots]

    def cartan_matrix(self) -> List[List[Fraction]]:
        """A_ij = (α_i, α_j∨)"""
        cor = self.coroots()
        return [[dot(a, c) for c in cor] for a in self.simple_roots]

    def _combine(self, coeff_rows: Mat, vectors: Sequence[Sequence]) -> List[List[Fraction]]:
        return [
            [sum((coeff_rows[i, j] * vectors[j][k] for j in range(self.rank)), Fraction(0)) for k in range(self.ambient_dim)]
            for i in range(self.rank)
        ]

    def fundamental_weights(self) -> List[List[Fraction]]:
        """ϖ_i = Σ_j (A⁻¹)_ij α_j，满足 (ϖ_i, α_j∨) = δ_ij"""
        inv = Mat(self.cartan_matrix()).inverse()
        return self._combine(inv, self.simple_roots)

    def fundamental_coweights(self) -> List[List[Fraction]]:
        """ω∨_i = Σ_j ((Aᵀ)⁻¹)_ij α_j∨，满足 (α_j, ω∨_i) = δ_ij"""
        inv = Mat(self.cartan_matrix()).transpose().inverse()
        return self._combine(inv, self.coroots())

    # ============ 根 ============

    def _generate(self) -> Dict[Vector, Tuple[int, ...]]:
        """单反射闭包，同时记录单根系数"""
        roots: Dict[Vector, Tuple[int, ...]] = {}
        queue = deque()
        for i, a in enumerate(self.simple_roots):
            coeffs = tuple(int(k == i) for k in range(self.rank))
            for vec, c in ((a, coeffs), (tuple(-x for x in a), tuple(-x for x in coeffs))):
                roots[vec] = c
                queue.append(vec)
        cor = self.coroots()
        while queue:
            beta = queue.popleft()
            coeffs = roots[beta]
            for i, a in enumerate(self.simple_roots):
                pairing = dot(beta, cor[i])
                if not pairing:
                    continue
                image = tuple(x - pairing * y for x, y in zip(beta, a))
                if image in roots:
                    continue
                new = list(coeffs)
                new[i] -= int(pairing)
                roots[image] = tuple(new)
                queue.append(image)
        return roots

    def roots(self) -> List[Vector]:
        if self._roots is None:
            self._roots = self._generate()
            logger.debug(f"{self.label}: 共 {len(self._roots)} 个根")
        return list(self._roots)

    def root_coefficients(self, root: Sequence) -> Tuple[int, ...]:
        self.roots()
        key = tuple(Fraction(x) for x in root)
        if key not in self._roots:
            raise RootSystemError(f"{self.label}: {root} 不是根")
        return self._roots[key]

    def positive_roots(self) -> List[Vector]:
        self.roots()
        return [r for r, c in self._roots.items() if all(x >= 0 for x in c)]

    def is_root(self, vec: Sequence) -> bool:
        self.roots()
        return tuple(Fraction(x) for x in vec) in self._roots

    def expected_root_count(self) -> int:
        total = 0
        for family, n in self.components:
            if family == "A":
                total += n * (n + 1)
            elif family in ("B", "C"):
                total += 2 * n * n
            elif family == "D":
                total += 2 * n * (n - 1)
            else:
                total += EXCEPTIONAL_ROOT_COUNTS[f"{family}{n}"]
        return total

    # ============ 权 ============

    def pairings(self, weight: Sequence) -> List[Fraction]:
        """(w, α_i∨)"""
        return [dot(weight, c) for c in self.coroots()]

    def is_dominant(self, weight: Sequence) -> bool:
        return all(p >= 0 for p in self.pairings(weight))

    def weyl_orbit(self, weight: Sequence) -> List[Vector]:
        """权的 Weyl 轨道（仅限秩不超过 4）"""
        if self.rank > MAX_ORBIT_RANK:
            raise RootSystemError(f"秩 {self.rank} 超出 Weyl 轨道枚举范围")
        start = tuple(Fraction(x) for x in weight)
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for a in self.simple_roots:
                image = tuple(reflect(w, a))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return sorted(seen)

    # ============ 维数 ============

    def dim_group(self) -> int:
        return len(self.roots()) + self.rank

    def dim_flag(self, marked: Iterable[int]) -> int:
        """
        G/P 的维数，P 为去掉 marked 中单根（1 起标号）后的抛物子群

        Raises:
            RootSystemError: 标号越界
        """
        marked = set(marked)
        bad = [m for m in marked if not 1 <= m <= self.rank]
        if bad:
            raise RootSystemError(f"{self.label}: 未知单根标号 {bad}")
        self.roots()
        return sum(1 for c in self._roots.values() if all(x >= 0 for x in c) and any(c[m - 1] > 0 for m in marked))

    def __repr__(self) -> str:
        return f"RootSystem({self.label})"
