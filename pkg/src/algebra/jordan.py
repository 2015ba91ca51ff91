"""
Jordan 代数 J₃(A) 与 Zorn 空间

Hermite 矩阵的排布：

    [[r1, x̄3, x̄2],
     [x3, r2, x̄1],
     [x2, x1, r3]]

矩阵乘法按（可能非结合的）代数乘法逐项计算。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .composition import AlgElement, CompositionAlgebra, associator
from ..core.exceptions import AlgebraMismatchError

Matrix3 = List[List[AlgElement]]


class Herm3:
    """J₃(A) 中的 3×3 Hermite 矩阵（值类型）"""

    __slots__ = ("algebra", "r", "x")

    def __init__(self, algebra: CompositionAlgebra, r: Sequence, x: Sequence[AlgElement]):
        if len(r) != 3 or len(x) != 3:
            raise ValueError("Herm3 需要 3 个对角元与 3 个非对角元")
        for xi in x:
            if xi.algebra is not algebra:
                raise AlgebraMismatchError("非对角元不属于给定代数")
        self.algebra = algebra
        self.r = tuple(Fraction(v) if isinstance(v, int) else v for v in r)
        self.x = tuple(x)

    # ============ 构造 ============

    @classmethod
    def zero(cls, algebra: CompositionAlgebra) -> "Herm3":
        return cls(algebra, (0, 0, 0), (algebra.zero(),) * 3)

    @classmethod
    def identity(cls, algebra: CompositionAlgebra) -> "Herm3":
        return cls(algebra, (1, 1, 1), (algebra.zero(),) * 3)

    @classmethod
    def diagonal(cls, algebra: CompositionAlgebra, r: Sequence) -> "Herm3":
        return cls(algebra, r, (algebra.zero(),) * 3)

    @classmethod
    def from_matrix(cls, algebra: CompositionAlgebra, m: Matrix3) -> "Herm3":
        """
        从一般 3×3 矩阵读取 Hermite 矩阵

        Raises:
            ArithmeticError: 矩阵不是 Hermite 的
        """
        if not is_hermitian(m):
            raise ArithmeticError("矩阵不是 Hermite 的")
        return cls(algebra, (m[0][0].real(), m[1][1].real(), m[2][2].real()), (m[2][1], m[2][0], m[1][0]))

    def to_matrix(self) -> Matrix3:
        one = self.algebra.one()
        r1, r2, r3 = (one * v for v in self.r)
        x1, x2, x3 = self.x
        return [
            [r1, x3.conj(), x2.conj()],
            [x3, r2, x1.conj()],
            [x2, x1, r3],
        ]

    # ============ 线性结构 ============

    def _check(self, other: "Herm3") -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(f"不同代数上的 Hermite 矩阵: {self.algebra} / {other.algebra}")

    def __add__(self, other: "Herm3") -> "Herm3":
        self._check(other)
        return Herm3(self.algebra, [a + b for a, b in zip(self.r, other.r)], [a + b for a, b in zip(self.x, other.x)])

    def __sub__(self, other: "Herm3") -> "Herm3":
        self._check(other)
        return Herm3(self.algebra, [a - b for a, b in zip(self.r, other.r)], [a - b for a, b in zip(self.x, other.x)])

    def scale(self, factor) -> "Herm3":
        return Herm3(self.algebra, [a * factor for a in self.r], [a * factor for a in self.x])

    def trace(self):
        return self.r[0] + self.r[1] + self.r[2]

    def is_zero(self) -> bool:
        return not any(self.r) and all(x.is_zero() for x in self.x)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Herm3):
            return NotImplemented
        return other.algebra is self.algebra and (self - other).is_zero()

    def __hash__(self):
        return hash((id(self.algebra), self.r))

    def coordinates(self) -> List:
        """长度为 3 + 3·dim A 的坐标向量"""
        out = list(self.r)
        for xi in self.x:
            out.extend(xi.coeffs)
        return out

    def __repr__(self) -> str:
        return f"Herm3({self.algebra.name}, r={list(map(str, self.r))})"


# ============ 矩阵运算 ============


def matrix_product(a: Matrix3, b: Matrix3) -> Matrix3:
    """普通矩阵乘法（代数乘法逐项计算，不假设结合律）"""
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = a[i][0] * b[0][j]
            acc = acc + a[i][1] * b[1][j]
            acc = acc + a[i][2] * b[2][j]
            row.append(acc)
        out.append(row)
    return out


def is_hermitian(m: Matrix3) -> bool:
    for i in range(3):
        if not m[i][i].is_scalar():
            return False
        for j in range(i + 1, 3):
            if m[j][i].conj() != m[i][j]:
                return False
    return True


def square(p: Herm3) -> Herm3:
    """P²（普通乘积，恒为 Hermite）"""
    m = p.to_matrix()
    return Herm3.from_matrix(p.algebra, matrix_product(m, m))


def jordan_product(a: Herm3, b: Herm3) -> Herm3:
    """A∘B = ½(AB + BA)"""
    a._check(b)
    ma, mb = a.to_matrix(), b.to_matrix()
    ab = matrix_product(ma, mb)
    ba = matrix_product(mb, ma)
    half = Fraction(1, 2)
    total = [[(ab[i][j] + ba[i][j]) * half for j in range(3)] for i in range(3)]
    return Herm3.from_matrix(a.algebra, total)


def trace_form(a: Herm3, b: Herm3):
    """tr(A∘B)"""
    return jordan_product(a, b).trace()


def quadratic_trace(p: Herm3):
    """tr(P²)"""
    return square(p).trace()


def comatrix(p: Herm3) -> Herm3:
    """com P = P² − (tr P)P + ½((tr P)² − tr P²)I"""
    t = p.trace()
    p2 = square(p)
    s = (t * t - p2.trace()) / 2
    return p2 - p.scale(t) + Herm3.identity(p.algebra).scale(s)


def det3(p: Herm3, com: Optional[Herm3] = None):
    """det P = ⅓ tr(com(P)∘P)；com 为已算好的 com(P)"""
    return trace_form(comatrix(p) if com is None else com, p) / 3


def cube(p: Herm3) -> Herm3:
    """Jordan 立方 P³ = P²∘P"""
    return jordan_product(square(p), p)


def cubic_identity_residual(p: Herm3, d=None) -> Herm3:
    """P³ − tr(P)P² + S(P)P − det(P)I，S(P) = ½((tr P)² − tr P²)"""
    t = p.trace()
    p2 = square(p)
    s = (t * t - p2.trace()) / 2
    return cube(p) - p2.scale(t) + p.scale(s) - Herm3.identity(p.algebra).scale(det3(p) if d is None else d)


def comatrix_product_residual(p: Herm3, com: Optional[Herm3] = None, d=None) -> Matrix3:
    """com(P)·P − det(P)·I（普通乘积）"""
    com = comatrix(p) if com is None else com
    prod = matrix_product(com.to_matrix(), p.to_matrix())
    d = det3(p, com) if d is None else d
    one = p.algebra.one()
    return [[prod[i][j] - (one * d if i == j else p.algebra.zero()) for j in range(3)] for i in range(3)]


def octonion_residual(p: Herm3) -> AlgElement:
    """非对角元的结合子 [x1, x2, x3]"""
    x1, x2, x3 = p.x
    return associator(x1, x2, x3)


def jordan_inverse(p: Herm3, com: Optional[Herm3] = None) -> Herm3:
    """P⁻¹ = com(P)/det(P)"""
    com = comatrix(p) if com is None else com
    d = det3(p, com)
    if not d:
        raise ZeroDivisionError("det(P) = 0，P 不可逆")
    return com.scale(1 / d)


def herm3_dim(algebra_dim: int) -> int:
    return 3 + 3 * algebra_dim


def zorn_dim(algebra_dim: int) -> int:
    return 2 + 2 * herm3_dim(algebra_dim)


# ============ Zorn 空间 ============


@dataclass(frozen=True)
class Zorn2:
    """Z₂(A) = C ⊕ J₃(A) ⊕ J₃(A)* ⊕ C*"""

    z1: object
    z2: Herm3
    z3: Herm3
    z4: object

    @property
    def dim(self) -> int:
        return zorn_dim(self.z2.algebra.dim)

    def coordinates(self) -> List:
        return [self.z1] + self.z2.coordinates() + self.z3.coordinates() + [self.z4]


def freudenthal_phi(x, p: Herm3) -> Zorn2:
    """φ(x, P) = (x³, x²P, x·com(P), det(P))"""
    return Zorn2(x ** 3, p.scale(x * x), comatrix(p).scale(x), det3(p))


def in_section(z: Zorn2) -> bool:
    """超平面截面 z1 = z4"""
    return z.z1 == z.z4
