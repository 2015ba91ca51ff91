#!/usr/bin/env python
"""
Demo: 核验单个条目

对 G2/(SL2 x SL2) 跑全部检验，打印每一项的结果；
原始数据中的 slice 权重 −ω1+ω2 记为预期失败。
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.classification import ClassificationDB, verify_entry

print("=" * 60)
print("Demo: 核验 thm1.x")
print("=" * 60)

db = ClassificationDB.load()
entry = db.get("thm1.x")
print(f"\n  {entry.title}  受限根系 {entry.restricted_type}  维数 {entry.dimension}")

checks = verify_entry(entry)
for check in checks:
    mark = "ok" if check.ok else "MISMATCH"
    print(f"  {check.name:<48} {check.status:<5} 预期 {check.expected:<5} {mark}")

print(f"\n  与预期一致: {all(c.ok for c in checks)}")
print("\n" + "=" * 60)
