#!/usr/bin/env python
"""
Demo: 由 (q, ϖ) 重建八元数，结合子核与图坐标残差
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.exceptions import CompositionIdentityError
from src.geometry import g2

print("=" * 60)
print("Demo: G2 模型")
print("=" * 60)

# 1. 原始形式不满足合成恒等式
print("\n[1/3] 原始 (q, ϖ)...")
try:
    g2.octonion_from_q_phi(g2.SevenSpace.printed())
except CompositionIdentityError as e:
    print(f"  {e}")

# 2. 修正后的代数
print("\n[2/3] 修正后的 (q, ϖ)...")
space = g2.SevenSpace.corrected()
algebra = g2.octonion_from_q_phi(space)
amap = g2.associator_map(algebra)
print(f"  λ = {g2.cross_product_scale(space)}")
print(f"  结合子秩 {amap.rank()}，核维数 {len(amap.kernel())}")

# 3. 图坐标 b = 1
print("\n[3/3] 图坐标残差（b = 1，其余为 0）...")
chart = g2.chart_point([Fraction(0), Fraction(1)] + [Fraction(0)] * 6)
for name, value in g2.chart_residuals(chart).items():
    print(f"  {name} = {value}")
print(f"  修正后的第三条 = {g2.corrected_third_residual(chart)}")

print("\n" + "=" * 60)
