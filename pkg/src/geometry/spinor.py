"""
Λ^even W 上的纯旋量坐标与 G₂×G₂ 分解

V₁ ⊕ V₂ 上取二次型 Q = B ⊕ (−B)；W = ⟨e₁, e₂, e₃, u, f₁, f₂, f₃⟩（u = e₀ + f₀）为极大迷向子空间，
对偶迷向基 w̃ⱼ 满足 Q(wᵢ, w̃ⱼ) = δᵢⱼ。Clifford 作用：wᵢ ↦ εᵢ（外积），w̃ⱼ ↦ 2ιⱼ（缩并）。

so(Q) 中元素在 (w, w̃) 基下分块 [[a, b], [c, −aᵀ]]，旋量表示为
    ρ = Σ aᵢⱼ εᵢιⱼ − ½ tr(a) + Σ cᵢⱼ ιᵢιⱼ + ¼ Σ bᵢⱼ εᵢεⱼ
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..algebra.field import Scalar
from ..algebra.linalg import Mat, annihilator, dot, intersect_spans, kernel, pfaffian, rank, span_basis
from ..core.exceptions import DegenerateSampleError, DimensionMismatchError, NotSkewSymmetricError
from .g2 import (
    SevenSpace,
    derivations_on_v,
    exponential,
    nilpotent_derivations,
    octonion_from_q_phi,
    sigma_matrix,
    torus_matrix,
    v,
)

W_LABELS: Tuple[str, ...] = ("e1", "e2", "e3", "u", "f1", "f2", "f3")
EVEN_SUBSETS: List[Tuple[int, ...]] = [s for size in range(0, 8, 2) for s in combinations(range(7), size)]
SUBSET_INDEX: Dict[Tuple[int, ...], int] = {s: n for n, s in enumerate(EVEN_SUBSETS)}

# 图 A′ 上的自由坐标（1 起始），x₁₂, x₁₃, x₂₃, x₅₆ 由方程解出
SOLVED_PAIRS: Tuple[Tuple[int, int], ...] = ((1, 2), (1, 3), (2, 3), (5, 6))
FREE_PAIRS: Tuple[Tuple[int, int], ...] = tuple(p for p in combinations(range(1, 8), 2) if p not in SOLVED_PAIRS)
ALL_PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(1, 8), 2))

# x_{i,j} 与同一环面权的另一个 Pfaffian 坐标；原始方程的 x₄₇ 配的是权不同的 [1,2,3,4]
MODEL_EQUATION_PARTNERS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (1, 2): (1, 2, 4, 5, 6, 7),
    (1, 3): (1, 3, 4, 5, 6, 7),
    (2, 3): (2, 3, 4, 5, 6, 7),
    (4, 7): (1, 2, 3, 7),
}
PRINTED_EQUATION_PARTNERS: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (1, 2): (1, 2, 4, 5, 6, 7),
    (1, 3): (1, 3, 4, 5, 6, 7),
    (2, 3): (2, 3, 4, 5, 6, 7),
    (4, 7): (1, 2, 3, 4),
}


def subset_index(*labels: int) -> int:
    """1 起始标号的偶子集在 64 维坐标中的位置"""
    return SUBSET_INDEX[tuple(sorted(x - 1 for x in labels))]


def _wedge(i: int, s: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    if i in s:
        return None
    sign = -1 if sum(1 for k in s if k < i) % 2 else 1
    return sign, tuple(sorted(s + (i,)))


def _contract(j: int, s: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    if j not in s:
        return None
    sign = -1 if sum(1 for k in s if k < j) % 2 else 1
    return sign, tuple(k for k in s if k != j)


def _compose(ops, s):
    """从右到左依次作用，返回 (符号, 子集) 或 None"""
    sign = 1
    for op, idx in reversed(ops):
        hit = op(idx, s)
        if hit is None:
            return None
        sign, s = sign * hit[0], hit[1]
    return sign, s


# ============ 坐标与图 ============


@dataclass
class EvenForms:
    """Λ^even W 中的向量（64 个偶子集坐标）"""

    coords: List = field(default_factory=lambda: [Fraction(0)] * 64)

    def get(self, *labels: int):
        return self.coords[subset_index(*labels)]


def skew_from_entries(entries: Dict[Tuple[int, int], object], n: int = 7) -> Mat:
    """由上三角元素 x_{i,j}（1 起始）构造反对称矩阵"""
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), value in entries.items():
        if not i < j:
            raise NotSkewSymmetricError(f"元素下标需满足 i < j，收到 ({i}, {j})")
        rows[i - 1][j - 1] = value
        rows[j - 1][i - 1] = -value
    return Mat(rows)


def entries_of(p: Mat) -> Dict[Tuple[int, int], object]:
    return {(i, j): p[i - 1, j - 1] for i, j in ALL_PAIRS}


def _with_entry(p: Mat, pair: Tuple[int, int], value) -> Mat:
    entries = entries_of(p)
    entries[pair] = value
    return skew_from_entries(entries, p.rows)


def bracket(p: Mat, *labels: int):
    """[i₁, …, i₂ₖ]：主子式的 Pfaffian（标号从 1 开始）"""
    if not labels:
        return Fraction(1)
    return pfaffian(p.to_rows(), [x - 1 for x in labels])


def pfaffian_chart(p: Mat) -> EvenForms:
    """
    exp(p)·x 的坐标：偶子集 S 处为 Pf(p_S)，空集处为 1

    Raises:
        NotSkewSymmetricError: p 不反对称
    """
    if p.rows != 7 or p.cols != 7:
        raise DimensionMismatchError(f"图坐标需要 7 × 7 矩阵，收到 {p.rows} × {p.cols}")
    if not p.is_skew():
        raise NotSkewSymmetricError("图坐标矩阵不反对称")
    rows = p.to_rows()
    return EvenForms([Fraction(1) if not s else pfaffian(rows, list(s)) for s in EVEN_SUBSETS])


def v1_equations(p: Mat) -> List:
    """
    原始的四条残差：x_{i,j} − [i,j,4,5,6,7]（(i,j) = (1,2), (1,3), (2,3)）与 x₄₇ − [1,2,3,4]
    """
    return [p[i - 1, j - 1] - bracket(p, *partner) for (i, j), partner in PRINTED_EQUATION_PARTNERS.items()]


def _affine_parts(p: Mat, pair: Tuple[int, int]):
    """x_{i,j} − [i,j,4,5,6,7] = D·x_{i,j} − L，对 x_{i,j} 仿射"""
    i, j = pair
    r0 = _with_entry(p, pair, Fraction(0))
    r1 = _with_entry(p, pair, Fraction(1))
    f0 = -bracket(r0, i, j, 4, 5, 6, 7)
    f1 = Fraction(1) - bracket(r1, i, j, 4, 5, 6, 7)
    return f1 - f0, -f0


def _relation(p: Mat):
    """代入前三条方程后第四条方程乘以公分母 D 的值"""
    d, l12 = _affine_parts(p, (1, 2))
    _, l13 = _affine_parts(p, (1, 3))
    _, l23 = _affine_parts(p, (2, 3))
    return p[3, 6] * d - (l12 * p[2, 3] - l13 * p[1, 3] + l23 * p[0, 3])


def solve_graph(free: Sequence) -> Mat:
    """
    图 A′ 上由 17 个自由坐标确定的点

    关系式对 x₅₆ 仿射：N(t) = x₄₇·D(t) − Σ c_{i,j} L_{i,j}(t)，取 t* = −N(0)/(N(1) − N(0))，
    再由 x_{i,j} = L_{i,j}/D 得到其余三个坐标。

    Raises:
        DegenerateSampleError: 关系式退化或分母为零
    """
    if len(free) != len(FREE_PAIRS):
        raise DimensionMismatchError(f"需要 {len(FREE_PAIRS)} 个自由坐标，收到 {len(free)}")
    entries = {pair: Fraction(0) for pair in ALL_PAIRS}
    entries.update(dict(zip(FREE_PAIRS, free)))

    def at(t):
        local = dict(entries)
        local[(5, 6)] = t
        return skew_from_entries(local)

    n0, n1 = _relation(at(Fraction(0))), _relation(at(Fraction(1)))
    slope = n1 - n0
    if slope:
        t = -n0 / slope
    elif not n0:
        t = Fraction(0)
    else:
        raise DegenerateSampleError("关系式对 x₅₆ 退化")
    p = at(t)
    for pair in ((1, 2), (1, 3), (2, 3)):
        d, l = _affine_parts(p, pair)
        if not d:
            raise DegenerateSampleError(f"x{pair[0]}{pair[1]} 的分母 1 − [4,5,6,7] 为零")
        entries[pair] = l / d
    entries[(5, 6)] = t
    p = skew_from_entries(entries)
    residuals = v1_equations(p)
    if any(residuals):
        raise DegenerateSampleError(f"回代残差非零: {[str(r) for r in residuals]}")
    return p


def relation_second_difference(p: Mat):
    """代入后的关系式关于 x₄₇ 的二阶差分（非零说明关系式对 x₄₇ 非线性）"""
    values = [_relation(_with_entry(p, (4, 7), Fraction(k))) for k in range(3)]
    return values[2] - 2 * values[1] + values[0]


def jacobian_rank(functions, p: Mat) -> int:
    """
    函数组在 p 处关于 21 个坐标的 Jacobian 秩

    Pfaffian 对每个单独的 x_{i,j} 仿射，偏导数即差分 F(x_{i,j} = 1) − F(x_{i,j} = 0)。
    """
    columns = []
    for pair in ALL_PAIRS:
        hi = functions(_with_entry(p, pair, Fraction(1)))
        lo = functions(_with_entry(p, pair, Fraction(0)))
        columns.append([x - y for x, y in zip(hi, lo)])
    rows = [list(r) for r in zip(*columns)]
    return rank(rows, len(ALL_PAIRS))


# ============ Clifford 实现 ============


@dataclass
class Decomposition:
    """Λ^even W = (V₁⊗V₂) ⊕ V₁ ⊕ V₂ ⊕ ℂ 的各分量基"""

    invariant_first: List[List] = field(default_factory=list)
    invariant_second: List[List] = field(default_factory=list)
    trivial: List[List] = field(default_factory=list)
    first: List[List] = field(default_factory=list)
    second: List[List] = field(default_factory=list)
    tensor: List[List] = field(default_factory=list)
    functionals: List[List] = field(default_factory=list)

    def dimensions(self) -> Dict[str, int]:
        return {
            "invariant_first": len(self.invariant_first),
            "invariant_second": len(self.invariant_second),
            "trivial": len(self.trivial),
            "V1": len(self.first),
            "V2": len(self.second),
            "V1xV2": len(self.tensor),
            "functionals": len(self.functionals),
        }


class SpinorModel:
    """V₁ ⊕ V₂ 上的旋量模型（两份相同的 (q, ϖ) 数据）"""

    def __init__(self, space: Optional[SevenSpace] = None):
        self.space = space or SevenSpace.corrected()
        self.algebra = octonion_from_q_phi(self.space)

    # ============ 标架 ============

    @cached_property
    def gram(self) -> Mat:
        rows = [[Fraction(0)] * 14 for _ in range(14)]
        for i in range(7):
            for j in range(7):
                rows[i][j] = self.space.gram[i, j]
                rows[7 + i][7 + j] = -self.space.gram[i, j]
        return Mat(rows)

    @cached_property
    def frame(self) -> Mat:
        """列依次为 w₁, …, w₇, w̃₁, …, w̃₇ 在 V₁ ⊕ V₂ 中的坐标"""
        g = self.space.gram
        q0 = g[v(0), v(0)]
        cols = []

        def unit(idx, coef=Fraction(1)):
            col = [Fraction(0)] * 14
            col[idx] = coef
            return col

        for k in (1, 2, 3):
            cols.append(unit(v(k)))
        u = unit(v(0))
        u[7 + v(0)] = Fraction(1)
        cols.append(u)
        for k in (1, 2, 3):
            cols.append(unit(7 + v(k)))
        for k in (1, 2, 3):
            cols.append(unit(v(-k), 1 / g[v(k), v(-k)]))
        dual_u = unit(v(0), 1 / (2 * q0))
        dual_u[7 + v(0)] = -1 / (2 * q0)
        cols.append(dual_u)
        for k in (1, 2, 3):
            cols.append(unit(7 + v(-k), -1 / g[v(k), v(-k)]))
        return Mat([list(r) for r in zip(*cols)])

    @cached_property
    def frame_inverse(self) -> Mat:
        return self.frame.inverse()

    def frame_is_hyperbolic(self) -> bool:
        """PᵀGP = [[0, I], [I, 0]]"""
        expected = Mat([[Fraction(int(abs(i - j) == 7)) for j in range(14)] for i in range(14)])
        return self.frame.transpose() @ self.gram @ self.frame == expected

    # ============ 表示 ============

    def embed(self, d: Mat, slot: int) -> Mat:
        """V 上的矩阵放入 V₁ ⊕ V₂ 的第 slot 个分量"""
        rows = [[Fraction(0)] * 14 for _ in range(14)]
        off = 7 * slot
        for i in range(7):
            for j in range(7):
                rows[off + i][off + j] = d[i, j]
        return Mat(rows)

    def blocks(self, x: Mat) -> Tuple[Mat, Mat, Mat]:
        """
        (w, w̃) 基下的分块 (a, b, c)

        Raises:
            NotSkewSymmetricError: x 不在 so(Q) 中
        """
        m = self.frame_inverse @ x @ self.frame
        a = Mat([[m[i, j] for j in range(7)] for i in range(7)])
        b = Mat([[m[i, 7 + j] for j in range(7)] for i in range(7)])
        c = Mat([[m[7 + i, j] for j in range(7)] for i in range(7)])
        d = Mat([[m[7 + i, 7 + j] for j in range(7)] for i in range(7)])
        if not (b.is_skew() and c.is_skew() and d == a.transpose().scale(-1)):
            raise NotSkewSymmetricError("矩阵不保持二次型 Q")
        return a, b, c

    def rho(self, x: Mat) -> Mat:
        """so(Q) 在 Λ^even W 上的作用（64 × 64）"""
        a, b, c = self.blocks(x)
        trace = sum((a[i, i] for i in range(7)), Fraction(0))
        terms = []
        for i in range(7):
            for j in range(7):
                if a[i, j]:
                    terms.append((a[i, j], ((_wedge, i), (_contract, j))))
                if c[i, j]:
                    terms.append((c[i, j], ((_contract, i), (_contract, j))))
                if b[i, j]:
                    terms.append((b[i, j] / 4, ((_wedge, i), (_wedge, j))))
        rows = [[Fraction(0)] * 64 for _ in range(64)]
        for col, s in enumerate(EVEN_SUBSETS):
            if trace:
                rows[col][col] -= trace / 2
            for coef, ops in terms:
                hit = _compose(ops, s)
                if hit is None:
                    continue
                sign, target = hit
                rows[SUBSET_INDEX[target]][col] += coef * sign
        return Mat(rows)

    @cached_property
    def derivations(self) -> List[Mat]:
        return derivations_on_v(self.algebra)

    @cached_property
    def rho_first(self) -> List[Mat]:
        return [self.rho(self.embed(d, 0)) for d in self.derivations]

    @cached_property
    def rho_second(self) -> List[Mat]:
        return [self.rho(self.embed(d, 1)) for d in self.derivations]

    @cached_property
    def decomposition(self) -> Decomposition:
        """逐块计算各 G₂×G₂ 分量"""

        def common_kernel(ops):
            return kernel([row for op in ops for row in op.to_rows()], 64)

        def image(ops, vectors):
            return span_basis([op.apply(vec) for op in ops for vec in vectors], 64)

        units = [[Fraction(int(i == j)) for j in range(64)] for i in range(64)]
        inv1 = common_kernel(self.rho_second)
        inv2 = common_kernel(self.rho_first)
        trivial = intersect_spans(inv1, inv2, 64)
        first = image(self.rho_first, inv1)
        second = image(self.rho_second, inv2)
        tensor = intersect_spans(image(self.rho_first, units), image(self.rho_second, units), 64)
        functionals = annihilator(tensor + trivial, 64)
        dec = Decomposition(inv1, inv2, trivial, first, second, tensor, functionals)
        logger.debug(f"旋量分解维数: {dec.dimensions()}")
        return dec

    def functional_values(self, p: Mat) -> List:
        coords = pfaffian_chart(p).coords
        return [dot(phi, coords) for phi in self.decomposition.functionals]

    # ============ 模型方程 ============

    @cached_property
    def equation_coefficients(self) -> Dict[Tuple[int, int], object]:
        """
        x_{i,j} = c·[S]：十四个泛函张成的空间与 ⟨x_{i,j}, [S]⟩ 的交

        Raises:
            DimensionMismatchError: 交不是一条线，或线上 x_{i,j} 的系数为零
        """
        functionals = self.decomposition.functionals
        out = {}
        for pair, partner in MODEL_EQUATION_PARTNERS.items():
            ratio = line_ratio(functionals, subset_index(*partner), subset_index(*pair))
            if ratio is None:
                raise DimensionMismatchError(f"x{pair[0]}{pair[1]} 与 {list(partner)} 之间没有唯一的线性关系")
            out[pair] = -ratio
        logger.debug(f"模型方程系数: {[(pair, str(c)) for pair, c in out.items()]}")
        return out

    def model_equations(self, p: Mat) -> List:
        """由泛函导出的四条残差 x_{i,j} − c·[S]"""
        coefficients = self.equation_coefficients
        return [
            p[i - 1, j - 1] - coefficients[(i, j)] * bracket(p, *partner)
            for (i, j), partner in MODEL_EQUATION_PARTNERS.items()
        ]

    # ============ X′ 上的点 ============

    def graph_point(self, g: Mat) -> Mat:
        """
        自同构 g 的图 {(x, gx)} 在 Pfaffian 坐标中的点 p

        Raises:
            DegenerateSampleError: 图与 W 不横截
        """
        cols = []
        for j in range(7):
            col = [Fraction(int(i == j)) for i in range(7)] + [g[i, j] for i in range(7)]
            cols.append(self.frame_inverse.apply(col))
        top = Mat([[cols[j][i] for j in range(7)] for i in range(7)])
        bottom = Mat([[cols[j][7 + i] for j in range(7)] for i in range(7)])
        if not bottom.det():
            raise DegenerateSampleError("自同构的图与 W 不横截")
        p = (top @ bottom.inverse()).scale(Fraction(1, 2))
        if not p.is_skew():
            raise NotSkewSymmetricError("图不是迷向子空间")
        return p

    @cached_property
    def root_derivations(self) -> List[Mat]:
        """四个幂零内导子及其 σ 共轭，正负根向量都出现"""
        nilpotents = list(nilpotent_derivations(self.algebra).values())
        sigma = sigma_matrix()
        return nilpotents + [sigma @ d @ sigma for d in nilpotents]

    def random_automorphism(self, sampler) -> Mat:
        """σ^b ∘ t ∘ Π exp(s·D)，D 取根向量导子，各出现两次"""
        nilpotents = self.root_derivations
        g = Mat.identity(7)
        for d in nilpotents + nilpotents:
            g = g @ exponential(d, sampler.rational())
        g = torus_matrix(sampler.rational(nonzero=True), sampler.rational(nonzero=True)) @ g
        if sampler.coin():
            g = sigma_matrix() @ g
        return g


# ============ 显式向量 ============


def printed_coefficient() -> Scalar:
    return Scalar.sqrt_minus2() * 2


def explicit_first_vectors(coef=None) -> Dict[str, List]:
    """c·eᵢ∧eⱼ + eᵢ∧eⱼ∧u∧f₁∧f₂∧f₃，(i, j) ∈ {(1,2), (1,3), (2,3)}，c 缺省取原始值 2√−2"""
    coef = printed_coefficient() if coef is None else Scalar.coerce(coef)
    out = {}
    for i, j in ((1, 2), (1, 3), (2, 3)):
        vec = [Scalar(0)] * 64
        vec[subset_index(i, j)] = coef
        vec[subset_index(i, j, 4, 5, 6, 7)] = Scalar(1)
        out[f"({i},{j})"] = vec
    return out


def explicit_trivial_vector(coef=None) -> List:
    """c·1 + e₁∧e₂∧e₃（奇数次部分补 ∧u），c 缺省取原始值 2√−2"""
    vec = [Scalar(0)] * 64
    vec[subset_index()] = printed_coefficient() if coef is None else Scalar.coerce(coef)
    vec[subset_index(1, 2, 3, 4)] = Scalar(1)
    return vec


def line_ratio(basis: Sequence[Sequence], low: int, high: int) -> Optional[object]:
    """子空间与 ⟨w_low, w_high⟩ 的交若为一条线 x·w_low + y·w_high，返回 x/y"""
    plane = [[Fraction(int(i == low)) for i in range(64)], [Fraction(int(i == high)) for i in range(64)]]
    line = intersect_spans(basis, plane, 64)
    if len(line) != 1 or not line[0][high]:
        return None
    return line[0][low] / line[0][high]
