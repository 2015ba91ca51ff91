#!/usr/bin/env python
"""
Demo: 分类数据库

读取随仓库发布的数据库，按受限根系类型列出条目与模型维数
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import pandas as pd

from src.classification import ClassificationDB, model_dimension

print("=" * 60)
print("Demo: 分类数据库")
print("=" * 60)

# 1. 读取
print("\n[1/2] 读取数据库...")
db = ClassificationDB.load()
print(f"  条目数: {len(db)}")

# 2. 汇总
print("\n[2/2] 条目一览...")
rows = [
    {
        "id": e.id,
        "group": e.group,
        "type": e.restricted_type,
        "dim": e.dimension,
        "model_dim": model_dimension(e.model) if e.model else None,
        "homogeneous": e.homogeneous,
    }
    for e in db.entries
]
table = pd.DataFrame(rows)
print(table.to_string(index=False))
print("\n按受限根系类型计数:")
print(table.groupby("type").size().to_string())

print("\n" + "=" * 60)
