#!/usr/bin/env python
"""
Demo: J3(A) 的余子式恒等式与 Freudenthal 截面
"""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra import Herm3, comatrix, det3, freudenthal_phi, in_section, jordan_product, standard_algebra
from src.utils.sampling import RationalSampler

print("=" * 60)
print("Demo: J3(A)")
print("=" * 60)

sampler = RationalSampler(7)
for dim in (1, 2, 4, 8):
    algebra = standard_algebra(dim)
    p = sampler.herm3(algebra)
    d = det3(p)
    ok = jordan_product(comatrix(p), p) == Herm3.identity(algebra).scale(d)
    print(f"\n  {algebra.name}: det(P) = {d}")
    print(f"  com(P)∘P = det(P)·I: {ok}")

# 截面 z1 = z4 等价于 x³ = det P
algebra = standard_algebra(8)
zero = algebra.zero()
p = Herm3(algebra, (Fraction(2), Fraction(3), Fraction(36)), (zero, zero, zero))
for x in (Fraction(6), Fraction(5)):
    print(f"\n  x = {x}, det P = {det3(p)}: φ(x, P) 在截面上 = {in_section(freudenthal_phi(x, p))}")

print("\n" + "=" * 60)
