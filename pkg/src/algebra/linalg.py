"""
精确稠密线性代数

在 Q(i, √2) 上做秩、零空间、求解、行列式与 Pfaffian。
矩阵元素统一为 Fraction（全为有理数时的快速路径）或 Scalar。
下标一律从 0 开始。
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from .field import Scalar
from ..core.exceptions import DimensionMismatchError, NotSkewSymmetricError

Vector = List
Rows = List[List]


# ============ 元素归一化 ============


def _all_rational(rows: Iterable[Iterable]) -> bool:
    for row in rows:
        for x in row:
            if isinstance(x, Scalar) and not x.is_rational():
                return False
    return True


def _to_fraction(x) -> Fraction:
    if isinstance(x, Scalar):
        return x.a
    return Fraction(x)


def _to_scalar(x) -> Scalar:
    return x if isinstance(x, Scalar) else Scalar(x)


def normalize_rows(rows: Sequence[Sequence]) -> Rows:
    """
    复制矩阵并统一元素类型

    全部为有理数时转为 Fraction，否则转为 Scalar。
    """
    if _all_rational(rows):
        return [[_to_fraction(x) for x in row] for row in rows]
    return [[_to_scalar(x) for x in row] for row in rows]


def normalize_vector(vec: Sequence) -> Vector:
    return normalize_rows([vec])[0]


# ============ 消元 ============


def rref(rows: Sequence[Sequence], n_cols: Optional[int] = None) -> Tuple[Rows, List[int]]:
    """
    化为简化行阶梯形

    主元选择：候选行中非零元最少者，以控制系数增长。

    Args:
        rows: 矩阵行列表（不修改）
        n_cols: 列数（rows 为空时需给出）

    Returns:
        (R, pivots)：R 为非零行组成的简化阶梯形，pivots 为各行主元列号
    """
    m = normalize_rows(rows)
    if n_cols is None:
        n_cols = len(m[0]) if m else 0
    for row in m:
        if len(row) != n_cols:
            raise DimensionMismatchError(f"行长度不一致: {len(row)} != {n_cols}")

    pivots: List[int] = []
    piv_r = 0
    n_rows = len(m)
    for piv_c in range(n_cols):
        best = None
        best_weight = None
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c]:
                weight = sum(1 for x in m[i_row] if x)
                if best is None or weight < best_weight:
                    best, best_weight = i_row, weight
        if best is None:
            continue
        if best != piv_r:
            m[piv_r], m[best] = m[best], m[piv_r]
        pivot_row = m[piv_r]
        fp = pivot_row[piv_c]
        if fp != 1:
            inv = 1 / fp
            pivot_row = [x * inv if x else x for x in pivot_row]
            m[piv_r] = pivot_row
        support = [c for c in range(piv_c, n_cols) if pivot_row[c]]
        for r in range(n_rows):
            if r == piv_r:
                continue
            fr = m[r][piv_c]
            if not fr:
                continue
            row = m[r]
            for c in support:
                row[c] = row[c] - pivot_row[c] * fr
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return m[:piv_r], pivots


def rank(rows: Sequence[Sequence], n_cols: Optional[int] = None) -> int:
    """精确秩"""
    return len(rref(rows, n_cols)[1])


def kernel(rows: Sequence[Sequence], n_cols: Optional[int] = None) -> List[Vector]:
    """
    零空间基

    对每个自由列 f：v[f] = 1，v[pivot] = −R[r][f]，其余为 0。
    """
    if n_cols is None:
        n_cols = len(rows[0]) if rows else 0
    reduced, pivots = rref(rows, n_cols)
    pivot_set = set(pivots)
    zero = _zero_like(reduced)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = [zero] * n_cols
        vec[free] = zero + 1
        for r, p in enumerate(pivots):
            if reduced[r][free]:
                vec[p] = -reduced[r][free]
        basis.append(vec)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[Vector]:
    """
    求解 M x = b

    Returns:
        一个精确解（自由变量取 0）；无解时返回 None
    """
    if len(rows) != len(rhs):
        raise DimensionMismatchError(f"方程数 {len(rows)} 与右端长度 {len(rhs)} 不一致")
    if not rows:
        return []
    n_cols = len(rows[0])
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented, n_cols + 1)
    if pivots and pivots[-1] == n_cols:
        return None
    zero = _zero_like(reduced)
    sol = [zero] * n_cols
    for r, p in enumerate(pivots):
        sol[p] = reduced[r][n_cols]
    return sol


def _zero_like(rows: Rows):
    for row in rows:
        for x in row:
            if isinstance(x, Scalar):
                return Scalar(0)
            return Fraction(0)
    return Fraction(0)


# ============ 行列式与 Pfaffian ============


def det(rows: Sequence[Sequence]):
    """
    行列式（Bareiss 无分数消元，独立于 rref 的实现）
    """
    m = normalize_rows(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatchError("行列式需要方阵")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return m[k][k] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = m[i][k] * 0
        prev = pivot
    return m[n - 1][n - 1] * sign


def is_skew(rows: Sequence[Sequence]) -> bool:
    n = len(rows)
    for i in range(n):
        if len(rows[i]) != n or rows[i][i]:
            return False
        for j in range(i + 1, n):
            if rows[i][j] + rows[j][i]:
                return False
    return True


def pfaffian(rows: Sequence[Sequence], idx: Optional[Sequence[int]] = None):
    """
    反对称矩阵主子式的 Pfaffian

    Args:
        rows: 反对称矩阵
        idx: 严格递增、长度为偶数的下标列表；None 表示全矩阵

    Raises:
        NotSkewSymmetricError: 矩阵非反对称
        DimensionMismatchError: 下标长度为奇数或不递增
    """
    if not is_skew(rows):
        raise NotSkewSymmetricError("Pfaffian 需要反对称矩阵")
    if idx is None:
        idx = list(range(len(rows)))
    idx = list(idx)
    if len(idx) % 2:
        raise DimensionMismatchError(f"Pfaffian 下标长度必须为偶数: {idx}")
    if any(b <= a for a, b in zip(idx, idx[1:])) or (idx and (idx[0] < 0 or idx[-1] >= len(rows))):
        raise DimensionMismatchError(f"Pfaffian 下标必须严格递增且在范围内: {idx}")
    minor = normalize_rows([[rows[i][j] for j in idx] for i in idx])
    return _pfaffian_skew(minor)


def _pfaffian_skew(a: Rows):
    """斜消元：Pf(A) = a01 · Pf(B')"""
    result = Fraction(1)
    while a:
        n = len(a)
        if not a[0][1]:
            k = next((k for k in range(2, n) if a[0][k]), None)
            if k is None:
                return result * 0
            # 交换第 1 与第 k 行列，Pf 变号
            a[1], a[k] = a[k], a[1]
            for row in a:
                row[1], row[k] = row[k], row[1]
            result = -result
        pivot = a[0][1]
        result = result * pivot
        reduced = []
        for i in range(2, n):
            reduced.append(
                [a[i][j] + (a[1][i] * a[0][j] - a[0][i] * a[1][j]) / pivot for j in range(2, n)]
            )
        a = reduced
    return result


# ============ 子空间工具 ============


class SpanBuilder:
    """增量张成：维护简化阶梯形基，支持成员判定"""

    def __init__(self, n_cols: int):
        self.n_cols = n_cols
        self._rows: Rows = []
        self._pivots: List[int] = []
        self._vectors: List[Vector] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> List[Vector]:
        """加入时线性无关的原始向量"""
        return list(self._vectors)

    def _reduce(self, vec: Sequence) -> Vector:
        v = normalize_vector(list(vec))
        for row, p in zip(self._rows, self._pivots):
            f = v[p]
            if f:
                v = [x - y * f for x, y in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """
        加入向量

        Returns:
            是否增加了维数
        """
        if len(vec) != self.n_cols:
            raise DimensionMismatchError(f"向量长度 {len(vec)} != {self.n_cols}")
        v = self._reduce(vec)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = 1 / v[p]
        v = [x * inv for x in v]
        # 保持已有行在新主元列上为零
        new_rows = []
        for row in self._rows:
            f = row[p]
            new_rows.append([x - y * f for x, y in zip(row, v)] if f else row)
        self._rows = new_rows + [v]
        self._pivots.append(p)
        self._vectors.append(list(vec))
        return True

    def extend(self, vectors: Iterable[Sequence]) -> int:
        added = 0
        for vec in vectors:
            added += self.add(vec)
        return added


def span_basis(vectors: Sequence[Sequence], n_cols: int) -> List[Vector]:
    """张成空间的一组简化基"""
    if not vectors:
        return []
    reduced, _ = rref(vectors, n_cols)
    return reduced


def intersect_spans(u: Sequence[Sequence], v: Sequence[Sequence], n_cols: int) -> List[Vector]:
    """
    两个子空间的交

    求 [U; −V] 的左零空间组合 Σ a_i u_i = Σ b_j v_j，返回 Σ a_i u_i 的基。
    """
    u = span_basis(u, n_cols)
    v = span_basis(v, n_cols)
    if not u or not v:
        return []
    columns = [list(col) for col in zip(*(list(u) + [[-x for x in row] for row in v]))]
    relations = kernel(columns, len(u) + len(v))
    vectors = []
    for rel in relations:
        vec = [sum((rel[i] * u[i][c] for i in range(len(u))), Fraction(0)) for c in range(n_cols)]
        vectors.append(vec)
    return span_basis(vectors, n_cols)


def annihilator(vectors: Sequence[Sequence], n_cols: int) -> List[Vector]:
    """零化子：与所有给定向量配对为零的线性泛函（标准配对）"""
    if not vectors:
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    return kernel(vectors, n_cols)


# ============ 矩阵 ============


class Mat:
    """不可变精确矩阵"""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence], cols: Optional[int] = None):
        data = normalize_rows(entries) if entries else []
        self._rows = tuple(tuple(row) for row in data)
        self.rows = len(self._rows)
        self.cols = len(self._rows[0]) if self._rows else (cols or 0)
        if any(len(row) != self.cols for row in self._rows):
            raise DimensionMismatchError("矩阵各行长度不一致")

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def to_rows(self) -> Rows:
        return [list(row) for row in self._rows]

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return list(self._rows[i])

    def transpose(self) -> "Mat":
        return Mat([list(col) for col in zip(*self._rows)], self.rows)

    def __matmul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise DimensionMismatchError(f"矩阵乘法维度不匹配: {self.cols} != {other.rows}")
            cols = other.transpose()._rows
            return Mat([[_dot(r, c) for c in cols] for r in self._rows], other.cols)
        return self.apply(other)

    def apply(self, vec: Sequence) -> Vector:
        if len(vec) != self.cols:
            raise DimensionMismatchError(f"向量长度 {len(vec)} != {self.cols}")
        return [_dot(r, vec) for r in self._rows]

    def __add__(self, other: "Mat") -> "Mat":
        return Mat([[x + y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.cols)

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat([[x - y for x, y in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.cols)

    def scale(self, factor) -> "Mat":
        return Mat([[x * factor for x in r] for r in self._rows], self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and all(
            x == y for r, s in zip(self._rows, other._rows) for x, y in zip(r, s)
        )

    def __hash__(self):
        return hash((self.rows, self.cols))

    def is_zero(self) -> bool:
        return not any(x for row in self._rows for x in row)

    def rank(self) -> int:
        return rank(self._rows, self.cols)

    def kernel(self) -> List[Vector]:
        basis = kernel(self._rows, self.cols)
        # 零空间基的逐个复核：M v = 0
        for vec in basis:
            if any(self.apply(vec)):
                logger.error("零空间复核失败")
                raise ArithmeticError("kernel vector does not annihilate the matrix")
        return basis

    def solve(self, rhs: Sequence) -> Optional[Vector]:
        return solve(self._rows, rhs)

    def det(self):
        return det(self._rows)

    def inverse(self) -> "Mat":
        n = self.rows
        if n != self.cols:
            raise DimensionMismatchError("逆矩阵需要方阵")
        augmented = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self._rows)]
        reduced, pivots = rref(augmented, 2 * n)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("矩阵不可逆")
        return Mat([row[n:] for row in reduced[:n]], n)

    def pfaffian(self, idx: Optional[Sequence[int]] = None):
        return pfaffian(self._rows, idx)

    def is_skew(self) -> bool:
        return is_skew(self._rows)

    def __repr__(self) -> str:
        return f"Mat({self.rows}x{self.cols})"


def _dot(u: Sequence, v: Sequence):
    total = Fraction(0)
    for x, y in zip(u, v):
        if x and y:
            total = total + x * y
    return total


def dot(u: Sequence, v: Sequence):
    """标准双线性配对"""
    if len(u) != len(v):
        raise DimensionMismatchError(f"向量长度不一致: {len(u)} != {len(v)}")
    return _dot(u, v)
