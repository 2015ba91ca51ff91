"""
由 (q, ϖ) 重建的八元数模型与 G₂/(SL₂×SL₂) 的显式几何

七维空间 V 的基为 e₋₃, …, e₃（列表下标 k+3），代数基为 (1, e₋₃, …, e₃)。
乘法：a·b = −B(a, b)·1 + λ(a × b)，其中 B(a × b, c) = ϖ(a, b, c)，
λ 由合成恒等式 N(ab) = N(a)N(b) 唯一确定（只取一次）。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Sequence, Tuple

from loguru import logger

from ..algebra.composition import (
    AlgElement,
    CompositionAlgebra,
    associator,
    derivations,
    inner_derivation,
    is_quaternion_subalgebra,
    norm_gram,
    subalgebra_closure,
)
from ..algebra.field import Scalar
from ..algebra.linalg import Mat, SpanBuilder, det, intersect_spans
from ..core.exceptions import CompositionIdentityError, DimensionMismatchError, FieldError

LABELS: Tuple[int, ...] = (-3, -2, -1, 0, 1, 2, 3)
TRIPLES: List[Tuple[int, int, int]] = list(combinations(range(7), 3))
TRIPLE_INDEX: Dict[Tuple[int, int, int], int] = {t: n for n, t in enumerate(TRIPLES)}

# 图坐标：行对应 e1, e₋₂, e₋₃，列对应 e2, e3, e0, e₋₁
CHART_ROWS: Tuple[int, ...] = (1, -2, -3)
CHART_COLS: Tuple[int, ...] = (2, 3, 0, -1)


def v(label: int) -> int:
    """e_label 在 V 中的下标"""
    return label + 3


def permutation_sign(seq: Sequence[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


# ============ 七维空间 ============


@dataclass
class SevenSpace:
    """
    带二次型 q 与三形式 ϖ 的七维空间

    Attributes:
        name: 数据来源（printed 或 corrected）
        gram: B 的 Gram 矩阵
        phi: 递增三元组 -> ϖ 系数
    """

    name: str
    gram: Mat
    phi: Dict[Tuple[int, int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def _build(cls, name: str, e0_scale: Fraction, e0_sign: int) -> "SevenSpace":
        g = [[Fraction(0)] * 7 for _ in range(7)]
        g[v(0)][v(0)] = e0_scale
        for k in (1, 2, 3):
            g[v(k)][v(-k)] = g[v(-k)][v(k)] = Fraction(1, 2)
        phi: Dict[Tuple[int, int, int], Fraction] = {}

        def put(labels, coef):
            idx = [v(x) for x in labels]
            phi[tuple(sorted(idx))] = Fraction(coef * permutation_sign(idx))

        for k in (1, 2, 3):
            put((0, k, -k), e0_sign)
        put((1, 2, 3), 2)
        put((-1, -2, -3), 2)
        return cls(name, Mat(g), phi)

    @classmethod
    def printed(cls) -> "SevenSpace":
        """原始数据：q = (e₀*)² + Σ e_k* e₋ₖ*，ϖ = Σ e₀*∧e_k*∧e₋ₖ* + 2e₁*∧e₂*∧e₃* + 2e₋₁*∧e₋₂*∧e₋₃*"""
        return cls._build("printed", Fraction(1), 1)

    @classmethod
    def corrected(cls) -> "SevenSpace":
        """修正数据：e₀ 的尺度为 −¼，e₀ 项符号取负"""
        return cls._build("corrected", Fraction(-1, 4), -1)

    @cached_property
    def gram_inverse(self) -> Mat:
        return self.gram.inverse()

    def bilinear(self, a: Sequence, b: Sequence):
        return sum((a[i] * self.gram[i, j] * b[j] for i in range(7) for j in range(7) if a[i] and b[j]), Fraction(0))

    def quadratic(self, a: Sequence):
        return self.bilinear(a, a)

    def trilinear(self, a: Sequence, b: Sequence, c: Sequence):
        total = Fraction(0)
        for (i, j, k), coef in self.phi.items():
            for p in permutations((i, j, k)):
                x, y, z = a[p[0]], b[p[1]], c[p[2]]
                if x and y and z:
                    total = total + coef * permutation_sign([(i, j, k).index(t) for t in p]) * x * y * z
        return total

    def cross(self, a: Sequence, b: Sequence) -> List:
        """B(a × b, c) = ϖ(a, b, c)"""
        units = [[Fraction(int(i == j)) for j in range(7)] for i in range(7)]
        rhs = [self.trilinear(a, b, e) for e in units]
        return self.gram_inverse.apply(rhs)


def reference_vectors() -> List[List[Fraction]]:
    """基向量及两两之和，共 28 个"""
    units = [[Fraction(int(i == j)) for j in range(7)] for i in range(7)]
    sums = [[x + y for x, y in zip(units[i], units[j])] for i, j in combinations(range(7), 2)]
    return units + sums


def cross_product_scale(space: SevenSpace):
    """
    使合成恒等式成立的 λ

    对探测向量对：λ² = (q(a)q(b) − B(a,b)²) / q(a × b)；q(a × b) = 0 时要求 q(a)q(b) = B(a,b)²。

    Raises:
        CompositionIdentityError: 各探测对给出的 λ² 不一致，或 λ² 非有理平方
    """
    values = set()
    for a, b in combinations(reference_vectors(), 2):
        ab = space.cross(a, b)
        num = space.quadratic(a) * space.quadratic(b) - space.bilinear(a, b) ** 2
        den = space.quadratic(ab)
        if den:
            values.add(num / den)
        elif num:
            raise CompositionIdentityError(f"{space.name}: q(a×b) = 0 但 q(a)q(b) ≠ B(a,b)²")
    if len(values) != 1:
        raise CompositionIdentityError(f"{space.name}: 无法选取 λ 使合成恒等式成立，λ² 候选 {sorted(map(str, values))}")
    lam_sq = values.pop()
    try:
        lam = Scalar(lam_sq).sqrt()
    except FieldError as e:
        raise CompositionIdentityError(f"{space.name}: λ² = {lam_sq} 无有理平方根") from e
    logger.debug(f"{space.name}: λ = {lam}")
    return lam.to_fraction() if lam.is_rational() else lam


def octonion_from_q_phi(space: SevenSpace) -> CompositionAlgebra:
    """由 (q, ϖ) 构造 C1 ⊕ V 上的八维代数"""
    lam = cross_product_scale(space)
    table = {(0, 0): [(0, Fraction(1))]}
    for i in range(7):
        table[(0, i + 1)] = [(i + 1, Fraction(1))]
        table[(i + 1, 0)] = [(i + 1, Fraction(1))]
    units = [[Fraction(int(i == j)) for j in range(7)] for i in range(7)]
    for i in range(7):
        for j in range(7):
            terms = []
            b = space.gram[i, j]
            if b:
                terms.append((0, -b))
            for k, x in enumerate(space.cross(units[i], units[j])):
                if x:
                    terms.append((k + 1, lam * x))
            if terms:
                table[(i + 1, j + 1)] = terms
    labels = ["1"] + [f"e{k}" for k in LABELS]
    return CompositionAlgebra(f"O_qphi[{space.name}]", 8, table, [1] + [-1] * 7, labels)


def imaginary(algebra: CompositionAlgebra, vec: Sequence) -> AlgElement:
    return algebra.element([Fraction(0)] + list(vec))


# ============ 三次外积 ============


def wedge_from_terms(terms: Iterable[Tuple[int, Tuple[int, int, int]]]) -> List[Fraction]:
    """Σ coef · e_a∧e_b∧e_c（标签为 −3..3）的 35 维坐标"""
    out = [Fraction(0)] * 35
    for coef, labels in terms:
        idx = [v(x) for x in labels]
        if len(set(idx)) < 3:
            continue
        out[TRIPLE_INDEX[tuple(sorted(idx))]] += coef * permutation_sign(idx)
    return out


def associator_map(algebra: CompositionAlgebra) -> Mat:
    """结合子 Λ³V → O 的矩阵（8 × 35，列对应递增三元组）"""
    basis = [imaginary(algebra, [Fraction(int(i == j)) for j in range(7)]) for i in range(7)]
    columns = [associator(basis[i], basis[j], basis[k]).coeffs for i, j, k in TRIPLES]
    return Mat([list(row) for row in zip(*columns)])


def associator_is_alternating(algebra: CompositionAlgebra) -> bool:
    """所有基元三元组上结合子交错（含重复指标时为零）"""
    basis = [imaginary(algebra, [Fraction(int(i == j)) for j in range(7)]) for i in range(7)]
    for i in range(7):
        for j in range(7):
            for k in range(7):
                value = associator(basis[i], basis[j], basis[k])
                if len({i, j, k}) < 3:
                    if not value.is_zero():
                        return False
                    continue
                sorted_value = associator(*[basis[t] for t in sorted((i, j, k))])
                if value != sorted_value * permutation_sign([i, j, k]):
                    return False
    return True


def unit_associator_vanishes(algebra: CompositionAlgebra) -> bool:
    """[1, ·, ·] ≡ 0"""
    one = algebra.one()
    return all(associator(one, a, b).is_zero() for a in algebra.basis() for b in algebra.basis())


# ============ 导子与权 ============


def derivations_on_v(algebra: CompositionAlgebra) -> List[Mat]:
    """导子限制到 V 上（7 × 7）"""
    return [restrict_to_v(d) for d in derivations(algebra)]


def restrict_to_v(d: Mat) -> Mat:
    return Mat([[d[i + 1, j + 1] for j in range(7)] for i in range(7)])


def wedge3_operator(d: Mat) -> Mat:
    """V 上的线性映射 D 诱导的 Λ³V 上的导子作用（35 × 35）"""
    rows = [[Fraction(0)] * 35 for _ in range(35)]
    for col, triple in enumerate(TRIPLES):
        for slot in range(3):
            src = triple[slot]
            for p in range(7):
                coef = d[p, src]
                if not coef:
                    continue
                idx = list(triple)
                idx[slot] = p
                if len(set(idx)) < 3:
                    continue
                rows[TRIPLE_INDEX[tuple(sorted(idx))]][col] += coef * permutation_sign(idx)
    return Mat(rows)


def weight_of_triple(triple: Tuple[int, int, int]) -> Tuple[int, int]:
    """三元组的 T-权，记为 (n₁ − n₃, n₂ − n₃)（ε₁ + ε₂ + ε₃ = 0）"""
    n = [0, 0, 0]
    for idx in triple:
        label = LABELS[idx]
        if label:
            n[abs(label) - 1] += 1 if label > 0 else -1
    return (n[0] - n[2], n[1] - n[2])


def weights_of(vec: Sequence) -> set:
    return {weight_of_triple(TRIPLES[i]) for i, x in enumerate(vec) if x}


def printed_weight_vectors() -> Dict[str, List[Fraction]]:
    """七个已印出的 T-权向量（逐项照录）"""
    raw = {
        "X1": [(1, (-2, -3, 0)), (-1, (1, 2, -2)), (-1, (1, 3, -3))],
        "X2": [(1, (2, -2, -3)), (-1, (1, 2, 0)), (1, (1, -1, -3))],
        "X3": [(1, (3, -2, -3)), (-1, (1, 3, 0)), (-1, (1, -1, -2))],
        "X4": [(1, (1, 2, 3)), (-1, (-1, -2, -3))],
        "X5": [(1, (2, 3, -3)), (-1, (1, 2, -1)), (1, (0, -1, -3))],
        "X6": [(-1, (2, 3, -2)), (-1, (1, 3, -1)), (-1, (0, -1, -2))],
        "X7": [(-1, (1, -1, -2)), (-1, (2, 3, 0)), (-1, (3, -1, -3))],
    }
    return {name: wedge_from_terms(terms) for name, terms in raw.items()}


def corrected_seventh_vector() -> List[Fraction]:
    """X7 的修正：首项 e₁∧e₋₁∧e₋₂ 改为 e₂∧e₋₁∧e₋₂，三项同为权 (−1, 0)"""
    return wedge_from_terms([(-1, (2, -1, -2)), (-1, (2, 3, 0)), (-1, (3, -1, -3))])


def dual_operators(operators: Sequence[Mat]) -> List[Mat]:
    """Λ³V* 上的对偶作用（转置；符号不影响张成空间）"""
    return [op.transpose() for op in operators]


def stable_span(seed: Sequence[Sequence], operators: Sequence[Mat], n: int) -> List[List]:
    """包含 seed 且在所有算子下稳定的最小子空间"""
    span = SpanBuilder(n)
    queue = [list(s) for s in seed]
    while queue:
        vec = queue.pop()
        if span.add(vec):
            for op in operators:
                queue.append(op.apply(vec))
    return span.basis


def weight_line(basis: Sequence[Sequence], weight: Tuple[int, int]) -> List[List]:
    """子空间与给定权空间的交"""
    weight_space = [
        [Fraction(int(i == n)) for i in range(35)] for n, t in enumerate(TRIPLES) if weight_of_triple(t) == weight
    ]
    return intersect_spans(basis, weight_space, 35)


def invariant_trivector(space: SevenSpace) -> List[Fraction]:
    """ϖ 经 B⁻¹ 升指标得到的 Λ³V 中向量"""
    ginv = space.gram_inverse
    out = [Fraction(0)] * 35
    for n, (i, j, k) in enumerate(TRIPLES):
        total = Fraction(0)
        for triple, coef in space.phi.items():
            for p in permutations(range(3)):
                a, b, c = triple[p[0]], triple[p[1]], triple[p[2]]
                w = ginv[i, a] * ginv[j, b] * ginv[k, c]
                if w:
                    total += coef * permutation_sign(p) * w
        out[n] = total
    return out


# ============ 自同构 ============


def _extend(m: Mat) -> Mat:
    """V 上的矩阵延拓为 C1 ⊕ V 上（1 固定）"""
    rows = [[Fraction(1)] + [Fraction(0)] * 7]
    for i in range(7):
        rows.append([Fraction(0)] + [m[i, j] for j in range(7)])
    return Mat(rows)


def sigma_matrix() -> Mat:
    """e_k ↔ e₋ₖ，e₀ ↦ −e₀"""
    rows = [[Fraction(0)] * 7 for _ in range(7)]
    for k in LABELS:
        rows[v(-k)][v(k)] = Fraction(-1) if k == 0 else Fraction(1)
    return Mat(rows)


def torus_matrix(t1, t2) -> Mat:
    """环面元 (t₁, t₂, t₃)，t₁t₂t₃ = 1"""
    t = {1: t1, 2: t2, 3: 1 / (t1 * t2)}
    rows = [[Fraction(0)] * 7 for _ in range(7)]
    rows[v(0)][v(0)] = Fraction(1)
    for k in (1, 2, 3):
        rows[v(k)][v(k)] = t[k]
        rows[v(-k)][v(-k)] = 1 / t[k]
    return Mat(rows)


def is_automorphism(algebra: CompositionAlgebra, m: Mat) -> bool:
    """g(ab) = g(a)g(b) 对所有基元对成立（m 为 V 上矩阵）"""
    full = _extend(m)
    basis = algebra.basis()
    images = [algebra.element(full.apply(list(e.coeffs))) for e in basis]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            lhs = algebra.element(full.apply(list((a * b).coeffs)))
            if lhs != images[i] * images[j]:
                return False
    return True


def nilpotent_derivations(algebra: CompositionAlgebra) -> Dict[str, Mat]:
    """四个非零权的内导子（限制到 V）"""
    def e(k):
        return imaginary(algebra, [Fraction(int(i == v(k))) for i in range(7)])

    pairs = {"D(e1,e2)": (1, 2), "D(e-1,e-2)": (-1, -2), "D(e0,e3)": (0, 3), "D(e0,e-1)": (0, -1)}
    return {name: restrict_to_v(inner_derivation(e(a), e(b))) for name, (a, b) in pairs.items()}


def is_nilpotent(d: Mat, power: int = 7) -> bool:
    m = d
    for _ in range(power - 1):
        m = m @ d
    return m.is_zero()


def exponential(d: Mat, s) -> Mat:
    """exp(s·D)，D 幂零"""
    n = d.rows
    result = Mat.identity(n)
    term = Mat.identity(n)
    for k in range(1, n + 1):
        term = (term @ d).scale(s * Fraction(1, k))
        if term.is_zero():
            break
        result = result + term
    return result


# ============ 仿射图坐标 ============


def chart_point(params: Sequence) -> List[List]:
    """
    由 8 个自由坐标 (a, b, f, g, h, l, m, n) 得到 3 × 4 的图坐标矩阵

    行 (e1, e₋₂, e₋₃)，列 (e2, e3, e0, e₋₁)：
        c = g − l, d = fm − gl, k = −a + (fn − hl), r = −b + (gn − hm)
    """
    if len(params) != 8:
        raise DimensionMismatchError(f"图坐标需要 8 个自由参数，收到 {len(params)}")
    a, b, f, g, h, l, m, n = params
    c = g - l
    d = f * m - g * l
    k = -a + (f * n - h * l)
    r = -b + (g * n - h * m)
    return [[a, b, c, d], [f, g, h, k], [l, m, n, r]]


def _entry(chart: Sequence[Sequence], row: int, col_label: int):
    return chart[row - 1][CHART_COLS.index(col_label)]


def minor(chart: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]):
    """T_{rows, cols}：行号从 1 开始，列用标签 (2, 3, 0, −1)"""
    return det([[_entry(chart, r, c) for c in cols] for r in rows])


def chart_residuals(chart: Sequence[Sequence]) -> Dict[str, object]:
    """三条剩余方程"""
    return {
        "R1": minor(chart, (1, 2), (2, 3)) - minor(chart, (2, 3), (2, -1)) + minor(chart, (1, 2), (0, -1)),
        "R2": minor(chart, (1, 3), (2, 3)) - minor(chart, (2, 3), (3, -1)) + minor(chart, (1, 3), (0, -1)),
        "R3": _entry(chart, 3, -1) + minor(chart, (1, 2, 3), (2, 3, 0)) + minor(chart, (1, 2), (3, -1)),
    }


def corrected_third_residual(chart: Sequence[Sequence]):
    """由修正后的 X7 得到的第三条方程 T(1,3),(2,−1) − T(1,2,3),(2,3,0) − T(1,2),(3,−1)"""
    return minor(chart, (1, 3), (2, -1)) - minor(chart, (1, 2, 3), (2, 3, 0)) - minor(chart, (1, 2), (3, -1))


def graph_equations(chart: Sequence[Sequence]) -> List:
    """四条图方程的残差"""
    return [
        _entry(chart, 1, 0) - (-_entry(chart, 3, 2) + _entry(chart, 2, 3)),
        _entry(chart, 2, -1) - (-_entry(chart, 1, 2) + minor(chart, (2, 3), (2, 0))),
        _entry(chart, 3, -1) - (-_entry(chart, 1, 3) + minor(chart, (2, 3), (3, 0))),
        _entry(chart, 1, -1) - minor(chart, (2, 3), (2, 3)),
    ]


def chart_plane(chart: Sequence[Sequence]) -> List[List]:
    """W 的基 e_j + Σ a_{r,i} e_i（V 中坐标）"""
    vectors = []
    for r, j in enumerate(CHART_ROWS, start=1):
        vec = [Fraction(0)] * 7
        vec[v(j)] = Fraction(1)
        for col in CHART_COLS:
            vec[v(col)] = vec[v(col)] + _entry(chart, r, col)
        vectors.append(vec)
    return vectors


def quaternion_characterization(algebra: CompositionAlgebra, plane: Sequence[Sequence]) -> Tuple[bool, Dict]:
    """C1 ⊕ W 生成的子代数是否为四维复化四元数代数"""
    gens = [imaginary(algebra, vec) for vec in plane]
    closure = subalgebra_closure(gens)
    info = {"closure_dim": len(closure)}
    if len(closure) != 4:
        return False, info
    info["norm_gram_det"] = str(det(norm_gram(closure).to_rows()))
    return is_quaternion_subalgebra(closure), info
