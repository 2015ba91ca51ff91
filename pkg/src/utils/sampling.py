"""
精确随机采样

从有界分子、分母中抽取有理数，控制精确运算中的系数增长。
同一种子产生同一序列（numpy Generator）。
"""

from fractions import Fraction
from typing import List, Optional

import numpy as np

from ..algebra.composition import AlgElement, CompositionAlgebra
from ..algebra.field import Scalar
from ..algebra.jordan import Herm3
from ..config.constants import DEFAULT_SEED
from ..core.config import SamplingConfig


class RationalSampler:
    """有界随机有理数采样器"""

    def __init__(self, seed: int = DEFAULT_SEED, config: Optional[SamplingConfig] = None):
        self.seed = seed
        self.config = config or SamplingConfig()
        self._rng = np.random.default_rng(seed)

    def spawn(self, index: int) -> "RationalSampler":
        """派生独立子采样器（并行批次使用，结果与执行顺序无关）"""
        return RationalSampler(int(self.seed) * 100003 + index, self.config)

    def rational(self, nonzero: bool = False) -> Fraction:
        bound = self.config.numerator_bound
        while True:
            num = int(self._rng.integers(-bound, bound + 1))
            den = int(self._rng.integers(1, self.config.denominator_bound + 1))
            if num or not nonzero:
                return Fraction(num, den)

    def coin(self) -> bool:
        return bool(self._rng.integers(0, 2))

    def scalar(self, nonzero: bool = False):
        """complex_components 打开时返回 Q(i, √2) 中的元素，否则返回有理数"""
        if not self.config.complex_components:
            return self.rational(nonzero)
        while True:
            value = Scalar(self.rational(), self.rational(), self.rational(), self.rational())
            if value or not nonzero:
                return value

    def vector(self, n: int) -> List:
        return [self.scalar() for _ in range(n)]

    def element(self, algebra: CompositionAlgebra) -> AlgElement:
        return algebra.element(self.vector(algebra.dim))

    def herm3(self, algebra: CompositionAlgebra) -> Herm3:
        r = [self.scalar() for _ in range(3)]
        x = [self.element(algebra) for _ in range(3)]
        return Herm3(algebra, r, x)
