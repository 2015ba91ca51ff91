"""
限制根系 R_{G,θ}

R_{G,θ} = {β − θ(β) | β ∈ R_G} \\ {0}，位于 θ 的 (−1) 特征空间。
所有向量保持在环境坐标中，配对为标准点积。
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.linalg import Mat, dot, solve
from ..config.constants import EXCEPTIONAL_ROOT_COUNTS, LatticeKind
from ..core.exceptions import ConeError, RootSystemError
from .involutions import InvolutionData

Vector = Tuple[Fraction, ...]

_TERM_RE = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([aw])(\d+)")


def _sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(u, v))


def _scale(c, v: Sequence) -> Vector:
    return tuple(c * x for x in v)


def _is_lex_positive(v: Sequence) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


def _walk(adj: Dict[int, List[int]], start: int, avoid: int = -1) -> List[int]:
    path, prev, cur = [], avoid, start
    while True:
        path.append(cur)
        nxt = [j for j in adj[cur] if j != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]


def _dynkin_order(label: str, vectors: Sequence[Vector]) -> List[int]:
    """
    单根的 Bourbaki 编号（返回局部下标的排列）

    链型图：B/BC/F 以短根结尾，C_r (r ≥ 3) 与 G2 以长根结尾，A 从下标小的端点开始。
    D 型：长臂 → 分叉点 → 两个叶子；D4 的三条臂按原下标排序。E 型保持原顺序。
    """
    n = len(vectors)
    if n <= 1 or label.startswith("E"):
        return list(range(n))
    adj = {i: [j for j in range(n) if j != i and dot(vectors[i], vectors[j])] for i in range(n)}
    if label.startswith("D"):
        branch = next(i for i in range(n) if len(adj[i]) == 3)
        arms = sorted((_walk(adj, s, branch) for s in adj[branch]), key=lambda a: (-len(a), min(a)))
        return list(reversed(arms[0])) + [branch, arms[1][0], arms[2][0]]
    length = [dot(v, v) for v in vectors]
    ends = sorted(i for i in range(n) if len(adj[i]) == 1)
    first = ends[0]
    if length[ends[0]] != length[ends[1]]:
        end_long = label.startswith("G") or (label.startswith("C") and n >= 3)
        pick = max if end_long else min
        last = pick(ends, key=lambda i: length[i])
        first = ends[0] if last == ends[1] else ends[1]
    return _walk(adj, first)


class RestrictedRootSystem:
    """
    限制根系及其基、b 因子、余根与基本（余）权

    Attributes:
        involution: 原始对合数据
        roots: 限制根集合
        basis: 单限制根 α_1..α_s
        type_label: 识别出的类型（如 "A2"、"BC2"、"A1xA1"）
    """

    def __init__(self, involution: InvolutionData):
        self.involution = involution
        self.ambient_dim = involution.root_system.ambient_dim
        self.roots = self._restricted_roots()
        self.basis = self._find_basis()
        self.rank = len(self.basis)
        self.basis = self._canonical_order()
        self.b_factors = [Fraction(1, 2) if _scale(2, a) in self.roots else Fraction(1) for a in self.basis]
        self.components = self._components()
        self.type_label = "x".join(sorted(label for label, _ in self.components))
        logger.debug(f"{involution.root_system.label}: 限制根系类型 {self.type_label}，秩 {self.rank}")

    # ============ 构造 ============

    def _restricted_roots(self) -> set:
        out = set()
        for beta in self.involution.root_system.roots():
            gamma = _sub(beta, self.involution.apply(beta))
            if any(gamma):
                out.add(gamma)
        return out

    def _coefficients(self, basis: Sequence[Vector], vec: Sequence) -> Optional[List[Fraction]]:
        columns = [list(col) for col in zip(*basis)]
        return solve(columns, list(vec))

    def _is_basis(self, basis: Sequence[Vector]) -> bool:
        if not basis or Mat([list(b) for b in basis]).rank() != len(basis):
            return False
        for gamma in self.roots:
            coeffs = self._coefficients(basis, gamma)
            if coeffs is None or any(c.denominator != 1 for c in coeffs):
                return False
            if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
                return False
        return True

    def _find_basis(self) -> List[Vector]:
        """
        首选 {β − θβ : β 单根} 去重去零；若不构成基则退回字典序正性
        """
        candidates: List[Vector] = []
        for beta in self.involution.root_system.simple_roots:
            gamma = _sub(beta, self.involution.apply(beta))
            if any(gamma) and gamma not in candidates:
                candidates.append(gamma)
        if self._is_basis(candidates):
            return candidates
        logger.warning(f"{self.involution.root_system.label}: 单根的像不构成基，改用字典序正性")
        positive = [g for g in self.roots if _is_lex_positive(g)]
        pos_set = set(positive)
        simple = []
        for g in sorted(positive):
            decomposable = any(_sub(g, h) in pos_set for h in positive if h != g)
            if not decomposable:
                simple.append(g)
        if not self._is_basis(simple):
            raise RootSystemError(f"{self.involution.root_system.label}: 无法确定限制根系的基")
        return simple

    def _canonical_order(self) -> List[Vector]:
        """各不可约分量按 Bourbaki 编号重排，分量按首次出现的顺序拼接"""
        ordered: List[Vector] = []
        for label, members in sorted(self._components(), key=lambda c: min(c[1])):
            local = [self.basis[i] for i in members]
            ordered.extend(local[k] for k in _dynkin_order(label, local))
        return ordered

    def _components(self) -> List[Tuple[str, List[int]]]:
        """按单根的非正交关系分解为不可约分量，并识别类型"""
        n = self.rank
        parent = list(range(n))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, j in combinations(range(n), 2):
            if dot(self.basis[i], self.basis[j]):
                parent[find(i)] = find(j)
        groups: Dict[int, List[int]] = {}
        for i in range(n):
            groups.setdefault(find(i), []).append(i)
        out = []
        for members in groups.values():
            roots = [g for g in self.roots if self._support(g) <= set(members)]
            out.append((self._identify(len(members), roots), members))
        return out

    def _support(self, gamma: Sequence) -> set:
        coeffs = self._coefficients(self.basis, gamma)
        return {i for i, c in enumerate(coeffs) if c}

    @staticmethod
    def _identify(r: int, roots: Sequence[Vector]) -> str:
        root_set = set(roots)
        if any(_scale(2, g) in root_set for g in roots):
            return f"BC{r}"
        count = len(roots)
        lengths = sorted({dot(g, g) for g in roots})
        if r == 1:
            return "A1"
        if count == r * (r + 1) and len(lengths) == 1:
            return f"A{r}"
        if count == 2 * r * r and len(lengths) == 2:
            n_short = sum(1 for g in roots if dot(g, g) == lengths[0])
            if r == 2 or n_short == 2 * r:
                return f"B{r}"
            return f"C{r}"
        if r >= 4 and count == 2 * r * (r - 1) and len(lengths) == 1:
            return f"D{r}"
        for label, total in EXCEPTIONAL_ROOT_COUNTS.items():
            if int(label[1:]) == r and count == total:
                return label
        raise RootSystemError(f"无法识别秩 {r}、根数 {count} 的限制根系")

    # ============ 余根与权 ============

    def restricted_coroot(self, i: int) -> Vector:
        """α_i∨ = 2b_i α_i / (α_i, α_i)（下标从 1 开始）"""
        alpha = self.basis[i - 1]
        return _scale(2 * self.b_factors[i - 1] / dot(alpha, alpha), alpha)

    def coroots(self) -> List[Vector]:
        return [self.restricted_coroot(i) for i in range(1, self.rank + 1)]

    def cartan_matrix(self) -> List[List[Fraction]]:
        """C_kj = (α_k, α_j∨)"""
        cor = self.coroots()
        return [[dot(a, c) for c in cor] for a in self.basis]

    def _combine(self, coeffs: Mat, vectors: Sequence[Vector]) -> List[Vector]:
        return [
            tuple(sum((coeffs[i, j] * vectors[j][k] for j in range(self.rank)), Fraction(0)) for k in range(self.ambient_dim))
            for i in range(self.rank)
        ]

    def weights(self) -> List[Vector]:
        """ω_i，满足 (ω_i, α_j∨) = δ_ij"""
        return self._combine(Mat(self.cartan_matrix()).inverse(), self.basis)

    def coweights(self) -> List[Vector]:
        """ω_i∨，满足 (α_j, ω_i∨) = δ_ij"""
        return self._combine(Mat(self.cartan_matrix()).transpose().inverse(), self.coroots())

    def is_dominant(self, weight: Sequence) -> bool:
        return all(dot(weight, c) >= 0 for c in self.coroots())

    def is_reflection_closed(self) -> bool:
        for gamma in self.roots:
            for a, c, b in zip(self.basis, self.coroots(), self.b_factors):
                # 反射使用未乘 b 因子的余根 2α/(α, α)
                image = _sub(gamma, _scale(dot(gamma, c) / b, a))
                if image not in self.roots:
                    return False
        return True

    # ============ 坐标 ============

    def coroot_coordinates(self, vec: Sequence) -> List[Fraction]:
        """在余根基 α∨ 下的坐标"""
        coeffs = self._coefficients(self.coroots(), vec)
        if coeffs is None:
            raise ConeError(f"向量 {list(map(str, vec))} 不在限制空间中")
        return coeffs

    def pair_roots(self, vec: Sequence) -> List[Fraction]:
        """(α_i, v)"""
        return [dot(a, vec) for a in self.basis]

    def parse_vector(self, token: str, weights: bool = False) -> Vector:
        """
        解析 "a2"、"-w1-w2"、"2w4"、"w1+w2" 形式的向量

        a 表示余根 α∨；w 在 weights=False 时表示余权 ω∨，否则表示权 ω
        """
        text = token.replace(" ", "")
        pos = 0
        total = [Fraction(0)] * self.ambient_dim
        basis_a = self.coroots()
        basis_w = self.weights() if weights else self.coweights()
        while pos < len(text):
            match = _TERM_RE.match(text, pos)
            if not match or (pos > 0 and not match.group(1)):
                raise ConeError(f"无法解析向量记号: {token!r}")
            sign = -1 if match.group(1) == "-" else 1
            coef = Fraction(match.group(2)) if match.group(2) else Fraction(1)
            idx = int(match.group(4))
            if not 1 <= idx <= self.rank:
                raise ConeError(f"记号 {token!r} 的下标越界（秩 {self.rank}）")
            vec = (basis_a if match.group(3) == "a" else basis_w)[idx - 1]
            total = [t + sign * coef * x for t, x in zip(total, vec)]
            pos = match.end()
        if pos == 0:
            raise ConeError(f"空向量记号: {token!r}")
        return tuple(total)

    # ============ 例外根与维数 ============

    def exceptional_roots(self) -> List[int]:
        """
        例外单限制根（1 起标号）

        存在不同的单根 β1, β2 使 β1 − θβ1 = β2 − θβ2 ≠ 0，且
        θβ1 ≠ −β2，或 θβ1 = −β2 但 (β1, β2) ≠ 0。
        """
        simple = self.involution.root_system.simple_roots
        theta = self.involution.apply
        found = set()
        for b1, b2 in combinations(simple, 2):
            g1, g2 = _sub(b1, theta(b1)), _sub(b2, theta(b2))
            if not any(g1) or g1 != g2:
                continue
            neg_b2 = _scale(-1, b2)
            if tuple(theta(b1)) != neg_b2 or dot(b1, b2):
                found.add(self.basis.index(g1) + 1)
        return sorted(found)

    def dimension_of_quotient(self) -> int:
        """dim G/H = s + |R¹|/2"""
        return self.rank + len(self.involution.moved_roots()) // 2


@dataclass
class ValuationCone:
    """
    估值锥 −C⁺ 的两种表示

    Attributes:
        generators: {−ω_i∨}
        inequalities: {α_i}，锥为 {(α_i, v) ≤ 0}
    """

    generators: List[Vector] = field(default_factory=list)
    inequalities: List[Vector] = field(default_factory=list)

    def contains(self, vec: Sequence) -> bool:
        return all(dot(a, vec) <= 0 for a in self.inequalities)

    def cross_validate(self) -> bool:
        """生成元满足所有不等式，且第 i 个不等式恰在 i 以外的生成元上取等"""
        for j, g in enumerate(self.generators):
            for i, a in enumerate(self.inequalities):
                value = dot(a, g)
                if value > 0 or (i != j and value != 0) or (i == j and value == 0):
                    return False
        return True


def restrict(involution: InvolutionData) -> RestrictedRootSystem:
    """构造限制根系"""
    return RestrictedRootSystem(involution)


def valuation_cone(rrs: RestrictedRootSystem) -> ValuationCone:
    return ValuationCone(
        generators=[_scale(-1, w) for w in rrs.coweights()],
        inequalities=list(rrs.basis),
    )


# ============ 格 ============


def lattice_basis(rrs: RestrictedRootSystem, kind: str, tokens: Optional[Sequence[str]] = None) -> List[Vector]:
    """
    单参数子群格 χ*(S) 的基

    Args:
        kind: coroot / coweight / explicit_weights（给出 χ(S) 的基，取对偶）/ explicit_coweights
        tokens: 显式基的向量记号
    """
    if kind == LatticeKind.COROOT:
        return rrs.coroots()
    if kind == LatticeKind.COWEIGHT:
        return rrs.coweights()
    if kind == LatticeKind.EXPLICIT_COWEIGHTS:
        return [rrs.parse_vector(t) for t in tokens]
    if kind == LatticeKind.EXPLICIT_WEIGHTS:
        chars = [rrs.parse_vector(t, weights=True) for t in tokens]
        gram_inv = Mat([[dot(u, v) for v in chars] for u in chars]).inverse()
        k = len(chars)
        return [
            tuple(sum((gram_inv[j, m] * chars[m][c] for m in range(k)), Fraction(0)) for c in range(rrs.ambient_dim))
            for j in range(k)
        ]
    raise ConeError(f"未知的格类型: {kind!r}")


def lattice_coordinates(basis: Sequence[Vector], vec: Sequence) -> Optional[List[Fraction]]:
    columns = [list(col) for col in zip(*basis)]
    return solve(columns, list(vec))


def is_unimodular(basis: Sequence[Vector], generators: Sequence[Sequence]) -> bool:
    """
    生成元在格中整且极大子式的 gcd 为 1（正则锥）
    """
    coords = []
    for g in generators:
        c = lattice_coordinates(basis, g)
        if c is None or any(x.denominator != 1 for x in c):
            return False
        coords.append(c)
    k = len(coords)
    if k == 0:
        return True
    dim = len(basis)
    g = 0
    for cols in combinations(range(dim), k):
        minor = Mat([[row[c] for c in cols] for row in coords]).det()
        g = gcd(g, int(minor))
    return g == 1
