"""
报告生成工具
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

import numpy as np

from ..algebra.field import Scalar
from ..core.types import SuiteReport


class ExactEncoder(json.JSONEncoder):
    """自定义JSON编码器，支持精确标量与numpy类型"""

    def default(self, obj):
        if isinstance(obj, Fraction):
            return str(obj)
        elif isinstance(obj, Scalar):
            return obj.to_json()
        elif isinstance(obj, (np.integer,)):
            return int(obj)
        elif isinstance(obj, (np.floating,)):
            return float(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, (np.bool_,)):
            return bool(obj)
        elif isinstance(obj, (set, frozenset, tuple)):
            return sorted(obj, key=str) if isinstance(obj, (set, frozenset)) else list(obj)
        return super().default(obj)


class ReportGenerator:
    """
    检验报告生成器

    报告不含时间戳，键按字母序输出：同一种子的两次运行得到逐字节相同的 JSON。
    """

    def __init__(self, command: str):
        """
        初始化报告生成器

        Args:
            command: 命令名称
        """
        self.command = command
        self.report_data: Dict[str, Any] = {
            "report_info": {"command": command},
            "config": {},
            "suites": [],
            "summary": {},
        }

    def add_config(self, config: Dict[str, Any]) -> "ReportGenerator":
        """添加运行配置"""
        self.report_data["config"].update(config)
        return self

    def add_suite(self, suite: SuiteReport) -> "ReportGenerator":
        """添加一个检验套件"""
        self.report_data["suites"].append(suite.to_dict())
        return self

    def add_summary(self, summary: Dict[str, Any]) -> "ReportGenerator":
        """添加汇总信息"""
        self.report_data["summary"].update(summary)
        return self

    def finalize(self, suites: List[SuiteReport]) -> "ReportGenerator":
        """由各套件计算总体结论"""
        return self.add_summary(
            {
                "ok": all(s.ok for s in suites),
                "checks": sum(len(s.checks) for s in suites),
                "unexpected": sum(s.n_unexpected for s in suites),
                "expected_failures": sum(1 for s in suites for c in s.checks if c.ok and not c.passed),
            }
        )

    def to_dict(self) -> Dict[str, Any]:
        """导出为字典"""
        return self.report_data

    def to_json(self, indent: int = 2) -> str:
        """导出为JSON字符串"""
        return json.dumps(self.report_data, cls=ExactEncoder, indent=indent, ensure_ascii=False, sort_keys=True)

    @staticmethod
    def save_text(output_path: str, text: str) -> str:
        """写出文本（末尾补换行），返回路径"""
        target = Path(output_path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        return str(target)

    def save_json(self, output_path: str) -> str:
        return self.save_text(output_path, self.to_json())

    def to_markdown(self) -> str:
        """生成Markdown报告"""
        lines = [f"# {self.command} 检验报告\n"]

        if self.report_data["config"]:
            lines.append("## 运行配置\n")
            for key, value in sorted(self.report_data["config"].items()):
                lines.append(f"- **{key}**: {value}")
            lines.append("")

        for suite in self.report_data["suites"]:
            summary = suite["summary"]
            lines.append(f"## 套件: {suite['suite']}\n")
            lines.append(f"- **检验数**: {summary['checks']}")
            lines.append(f"- **成立**: {summary['passed']}")
            lines.append(f"- **不成立**: {summary['failed']}")
            lines.append(f"- **与预期不符**: {summary['unexpected']}\n")
            lines.append("| 检验 | 结果 | 预期 | 来源 |")
            lines.append("|------|------|------|------|")
            for check in suite["checks"]:
                mark = "" if check["ok"] else " ⚠"
                lines.append(f"| {check['name']} | {check['status']}{mark} | {check['expected']} | {check['provenance']} |")
            lines.append("")
            if suite["findings"]:
                lines.append("### 信息性结果\n")
                for finding in suite["findings"]:
                    value = json.dumps(finding["value"], cls=ExactEncoder, ensure_ascii=False)
                    lines.append(f"- **{finding['name']}**: {value} {finding.get('note', '')}".rstrip())
                lines.append("")

        if self.report_data["summary"]:
            lines.append("## 汇总\n")
            for key, value in sorted(self.report_data["summary"].items()):
                lines.append(f"- **{key}**: {value}")
            lines.append("")

        return "\n".join(lines)

    def save_markdown(self, output_path: str) -> str:
        return self.save_text(output_path, self.to_markdown())
