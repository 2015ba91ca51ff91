#!/usr/bin/env python
"""
Demo: 小样本运行全部检验套件并输出文本报告
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config.constants import Suite
from src.core.config import RunConfig
from src.verification import render, run_suites

print("=" * 60)
print("Demo: 检验套件")
print("=" * 60)

config = RunConfig(command="demo", samples=3, fmt="text")
reports = run_suites(config, Suite.ALL_SUITES)
print(render(config, reports))

print("\n" + "=" * 60)
