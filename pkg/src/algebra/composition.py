"""
复化合成代数（维数 1, 2, 4, 8）

- 乘法表为稀疏字典 (i, j) -> [(k, 系数)]，单位元下标固定为 0
- 共轭由每个基元的符号给出（单位元 +1，其余 −1）
- Cayley–Dickson 倍化参数固定为 −1
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from loguru import logger

from .field import Scalar
from .linalg import Mat, SpanBuilder, det, kernel
from ..core.exceptions import AlgebraMismatchError, DimensionMismatchError

Table = Dict[Tuple[int, int], List[Tuple[int, object]]]

ALGEBRA_NAMES = {1: "C", 2: "CxC", 4: "H_C", 8: "O_C"}


def _coef(x):
    if isinstance(x, (Fraction, Scalar)):
        return x
    return Fraction(x)


class CompositionAlgebra:
    """
    有限维单位代数（合成代数的候选）

    Attributes:
        name: 代数名称
        dim: 维数
        table: 稀疏乘法表
        conj_signs: 共轭在各基元上的符号
        labels: 基元标签
    """

    def __init__(
        self,
        name: str,
        dim: int,
        table: Table,
        conj_signs: Sequence[int],
        labels: Optional[Sequence[str]] = None,
    ):
        if len(conj_signs) != dim:
            raise DimensionMismatchError(f"共轭符号长度 {len(conj_signs)} != 维数 {dim}")
        self.name = name
        self.dim = dim
        self.table = {key: [(k, _coef(c)) for k, c in terms if c] for key, terms in table.items()}
        self.conj_signs = tuple(conj_signs)
        self.labels = tuple(labels) if labels else tuple(f"e{k}" for k in range(dim))

    # ============ 元素构造 ============

    def element(self, coeffs: Sequence) -> "AlgElement":
        return AlgElement(self, coeffs)

    def zero(self) -> "AlgElement":
        return AlgElement(self, [0] * self.dim)

    def one(self) -> "AlgElement":
        return self.basis_element(0)

    def basis_element(self, k: int) -> "AlgElement":
        coeffs = [0] * self.dim
        coeffs[k] = 1
        return AlgElement(self, coeffs)

    def basis(self) -> List["AlgElement"]:
        return [self.basis_element(k) for k in range(self.dim)]

    # ============ 结构运算 ============

    def multiply(self, x: Sequence, y: Sequence) -> List:
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                terms = self.table.get((i, j))
                if not terms:
                    continue
                w = xi * yj
                for k, t in terms:
                    out[k] = out[k] + w * t
        return out

    def __repr__(self) -> str:
        return f"CompositionAlgebra({self.name}, dim={self.dim})"


class AlgElement:
    """合成代数中的元素（值类型）"""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: CompositionAlgebra, coeffs: Sequence):
        if len(coeffs) != algebra.dim:
            raise DimensionMismatchError(f"系数长度 {len(coeffs)} != 代数维数 {algebra.dim}")
        self.algebra = algebra
        self.coeffs = tuple(_coef(c) for c in coeffs)

    def _check(self, other: "AlgElement") -> None:
        if not isinstance(other, AlgElement) or other.algebra is not self.algebra:
            raise AlgebraMismatchError(f"不同代数的元素不能混合运算: {self.algebra} / {getattr(other, 'algebra', other)}")

    def __add__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        self._check(other)
        return AlgElement(self.algebra, [x - y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgElement":
        return AlgElement(self.algebra, [-x for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            self._check(other)
            return AlgElement(self.algebra, self.algebra.multiply(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction, Scalar)):
            return AlgElement(self.algebra, [x * other for x in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return AlgElement(self.algebra, [x * other for x in self.coeffs])
        return NotImplemented

    def conj(self) -> "AlgElement":
        return AlgElement(self.algebra, [x * s for x, s in zip(self.coeffs, self.algebra.conj_signs)])

    def real(self):
        """单位元分量"""
        return self.coeffs[0]

    def norm(self):
        """N(x) = x·x̄ 的单位分量"""
        return (self * self.conj()).coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_scalar(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return other.algebra is self.algebra and all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.algebra), self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*{lab}" for c, lab in zip(self.coeffs, self.algebra.labels) if c]
        return " + ".join(terms) if terms else "0"


# ============ 构造 ============


def base_field() -> CompositionAlgebra:
    """一维代数 C"""
    return CompositionAlgebra(ALGEBRA_NAMES[1], 1, {(0, 0): [(0, 1)]}, [1], ["1"])


def cayley_dickson(base: CompositionAlgebra) -> CompositionAlgebra:
    """
    Cayley–Dickson 倍化，参数 −1

    (a, b)(c, d) = (ac − d̄b, da + bc̄)，(a, b)‾ = (ā, −b)

    Raises:
        DimensionMismatchError: 输入维数为 8（十六维不再是合成代数）
    """
    if base.dim not in (1, 2, 4):
        raise DimensionMismatchError(f"Cayley–Dickson 倍化仅接受维数 1、2、4，收到 {base.dim}")
    n = base.dim
    basis = base.basis()
    zero = base.zero()

    def pair_product(a, b, c, d):
        return (a * c - d.conj() * b, d * a + b * c.conj())

    def as_pair(k):
        return (basis[k], zero) if k < n else (zero, basis[k - n])

    table: Table = {}
    for i in range(2 * n):
        for j in range(2 * n):
            a, b = as_pair(i)
            c, d = as_pair(j)
            first, second = pair_product(a, b, c, d)
            coeffs = list(first.coeffs) + list(second.coeffs)
            terms = [(k, x) for k, x in enumerate(coeffs) if x]
            if terms:
                table[(i, j)] = terms
    signs = list(base.conj_signs) + [-1] * n
    labels = ["1"] + [f"e{k}" for k in range(1, 2 * n)]
    algebra = CompositionAlgebra(ALGEBRA_NAMES.get(2 * n, f"A{2 * n}"), 2 * n, table, signs, labels)
    logger.debug(f"Cayley–Dickson 倍化: {base.name} -> {algebra.name}")
    return algebra


def standard_algebra(dim: int) -> CompositionAlgebra:
    """由 C 反复倍化得到的维数为 dim 的复化合成代数"""
    if dim not in ALGEBRA_NAMES:
        raise DimensionMismatchError(f"合成代数维数必须为 1、2、4、8，收到 {dim}")
    algebra = base_field()
    while algebra.dim < dim:
        algebra = cayley_dickson(algebra)
    return algebra


# ============ 代数运算 ============


def associator(a: AlgElement, b: AlgElement, c: AlgElement) -> AlgElement:
    """[a, b, c] = (ab)c − a(bc)"""
    a._check(b)
    a._check(c)
    return (a * b) * c - a * (b * c)


def commutator(a: AlgElement, b: AlgElement) -> AlgElement:
    return a * b - b * a


def polar(x: AlgElement, y: AlgElement):
    """范数的极化 B(x, y) = ½(N(x+y) − N(x) − N(y))"""
    return ((x + y).norm() - x.norm() - y.norm()) / 2


def composition_defect(x: AlgElement, y: AlgElement):
    """N(xy) − N(x)N(y)"""
    return (x * y).norm() - x.norm() * y.norm()


def is_alternative(algebra: CompositionAlgebra) -> bool:
    """结合子在所有基元三元组上交错"""
    basis = algebra.basis()
    for a, b, c in product(basis, repeat=3):
        value = associator(a, b, c)
        if not (value + associator(b, a, c)).is_zero():
            return False
        if not (value + associator(a, c, b)).is_zero():
            return False
    return True


def is_associative(algebra: CompositionAlgebra) -> bool:
    basis = algebra.basis()
    return all(associator(a, b, c).is_zero() for a, b, c in product(basis, repeat=3))


def operator_matrix(algebra: CompositionAlgebra, func) -> Mat:
    """线性映射 func 在基下的矩阵（列为基元的像）"""
    columns = [func(e).coeffs for e in algebra.basis()]
    return Mat([list(row) for row in zip(*columns)])


def derivations(algebra: CompositionAlgebra) -> List[Mat]:
    """
    导子代数的一组基

    未知量 D[p][i]（D(e_i) = Σ_p D[p][i] e_p），
    对每个 (i, j, k) 列出 D(e_i e_j) = D(e_i)e_j + e_i D(e_j) 的第 k 分量。
    """
    n = algebra.dim

    def var(p, i):
        return p * n + i

    rows = []
    for i in range(n):
        for j in range(n):
            eqs: Dict[int, Dict[int, object]] = {}

            def put(k, v, c):
                row = eqs.setdefault(k, {})
                row[v] = row.get(v, 0) + c

            for m, t in algebra.table.get((i, j), ()):
                for k in range(n):
                    put(k, var(k, m), t)
            for p in range(n):
                for k, t in algebra.table.get((p, j), ()):
                    put(k, var(p, i), -t)
                for k, t in algebra.table.get((i, p), ()):
                    put(k, var(p, j), -t)
            for row in eqs.values():
                dense = [Fraction(0)] * (n * n)
                for v, c in row.items():
                    dense[v] = dense[v] + c
                if any(dense):
                    rows.append(dense)
    if not rows:
        basis = [[Fraction(int(v == w)) for w in range(n * n)] for v in range(n * n)]
    else:
        basis = kernel(rows, n * n)
    mats = [Mat([[vec[var(p, i)] for i in range(n)] for p in range(n)]) for vec in basis]
    logger.debug(f"{algebra.name} 导子代数维数: {len(mats)}")
    return mats


def apply_operator(matrix: Mat, x: AlgElement) -> AlgElement:
    return AlgElement(x.algebra, matrix.apply(list(x.coeffs)))


def is_derivation(algebra: CompositionAlgebra, matrix: Mat) -> bool:
    basis = algebra.basis()
    for a, b in product(basis, repeat=2):
        lhs = apply_operator(matrix, a * b)
        rhs = apply_operator(matrix, a) * b + a * apply_operator(matrix, b)
        if lhs != rhs:
            return False
    return True


def inner_derivation(a: AlgElement, b: AlgElement) -> Mat:
    """内导子 D_{a,b}(x) = [[a,b],x] − 3[a,b,x]"""
    ab = commutator(a, b)
    return operator_matrix(a.algebra, lambda x: commutator(ab, x) - associator(a, b, x) * 3)


# ============ 子代数 ============


def subalgebra_closure(gens: Iterable[AlgElement]) -> List[AlgElement]:
    """
    由 gens 与 1 生成的单位子代数的一组基
    """
    gens = list(gens)
    if not gens:
        raise DimensionMismatchError("生成元列表为空")
    algebra = gens[0].algebra
    for g in gens:
        gens[0]._check(g)
    span = SpanBuilder(algebra.dim)
    span.add(algebra.one().coeffs)
    for g in gens:
        span.add(g.coeffs)
    done = 0
    while True:
        basis = [algebra.element(v) for v in span.basis]
        grew = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i < done and j < done:
                    continue
                if span.add((basis[i] * basis[j]).coeffs):
                    grew = True
        done = len(basis)
        if not grew:
            break
    return [algebra.element(v) for v in span.basis]


def span_rank(elements: Sequence[AlgElement]) -> int:
    if not elements:
        return 0
    span = SpanBuilder(elements[0].algebra.dim)
    span.extend(e.coeffs for e in elements)
    return span.dim


def norm_gram(elements: Sequence[AlgElement]) -> Mat:
    return Mat([[polar(x, y) for y in elements] for x in elements])


def is_quaternion_subalgebra(basis: Sequence[AlgElement]) -> bool:
    """
    判定张成空间是否为复化四元数子代数

    条件：四维、含单位元、乘法封闭、基元三元组上结合、范数限制非退化。
    """
    basis = list(basis)
    if len(basis) != 4 or span_rank(basis) != 4:
        return False
    algebra = basis[0].algebra
    span = SpanBuilder(algebra.dim)
    span.extend(e.coeffs for e in basis)
    if not span.contains(algebra.one().coeffs):
        return False
    for a, b in product(basis, repeat=2):
        if not span.contains((a * b).coeffs):
            return False
    for a, b, c in product(basis, repeat=3):
        if not associator(a, b, c).is_zero():
            return False
    return bool(det(norm_gram(basis).to_rows()))
