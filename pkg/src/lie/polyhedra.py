"""
精确多面体工具：Fourier–Motzkin 可行性与锥成员判定
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..algebra.linalg import Mat, solve

Constraint = Tuple[Tuple[Fraction, ...], Fraction]


def _normalize(coeffs: Sequence, rhs) -> Constraint:
    """以首个非零系数的绝对值归一，便于去重"""
    lead = next((abs(c) for c in coeffs if c), None)
    if lead is None:
        return tuple(Fraction(0) for _ in coeffs), Fraction(rhs)
    return tuple(Fraction(c) / lead for c in coeffs), Fraction(rhs) / lead


def fourier_motzkin(a: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """
    判定 A x ≤ b 是否可行

    Returns:
        一个可行点（回代求得）；不可行时返回 None
    """
    if not a:
        return []
    dim = len(a[0])
    system = list({_normalize(row, rhs) for row, rhs in zip(a, b)})
    stages: List[List[Constraint]] = []
    for k in range(dim):
        stages.append(system)
        pos = [c for c in system if c[0][k] > 0]
        neg = [c for c in system if c[0][k] < 0]
        rest = [c for c in system if c[0][k] == 0]
        combined = set(rest)
        for p_coeffs, p_rhs in pos:
            for n_coeffs, n_rhs in neg:
                sp, sn = 1 / p_coeffs[k], -1 / n_coeffs[k]
                coeffs = [sp * x + sn * y for x, y in zip(p_coeffs, n_coeffs)]
                coeffs[k] = Fraction(0)
                combined.add(_normalize(coeffs, sp * p_rhs + sn * n_rhs))
        system = list(combined)
    if any(rhs < 0 for _, rhs in system):
        return None

    # 回代：从最后一个变量开始在 [lo, hi] 中取值
    x = [Fraction(0)] * dim
    for k in reversed(range(dim)):
        lo, hi = None, None
        for coeffs, rhs in stages[k]:
            c = coeffs[k]
            if not c:
                continue
            bound = (rhs - sum((coeffs[j] * x[j] for j in range(k + 1, dim)), Fraction(0))) / c
            if c > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            x[k] = (lo + hi) / 2
        elif lo is not None:
            x[k] = lo
        elif hi is not None:
            x[k] = hi
    return x


def satisfies(a: Sequence[Sequence], b: Sequence, x: Sequence) -> bool:
    return all(sum((c * v for c, v in zip(row, x)), Fraction(0)) <= rhs for row, rhs in zip(a, b))


def cone_membership(generators: Sequence[Sequence], vec: Sequence) -> Optional[List[Fraction]]:
    """
    判定 vec ∈ cone(generators)（Carathéodory：只需检查线性无关子集）

    Returns:
        非负系数（长度与 generators 相同）；不在锥中时返回 None
    """
    dim = len(vec)
    if not any(vec):
        return [Fraction(0)] * len(generators)
    gens = [list(g) for g in generators]
    for size in range(1, min(len(gens), dim) + 1):
        for subset in combinations(range(len(gens)), size):
            chosen = [gens[i] for i in subset]
            if Mat(chosen).rank() != size:
                continue
            columns = [list(col) for col in zip(*chosen)]
            coeffs = solve(columns, list(vec))
            if coeffs is None or any(c < 0 for c in coeffs):
                continue
            out = [Fraction(0)] * len(gens)
            for i, c in zip(subset, coeffs):
                out[i] = c
            return out
    return None
