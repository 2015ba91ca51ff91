"""
核心数据类型定义
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..config.constants import CheckStatus


@dataclass
class CheckResult:
    """
    单项精确检验的结果

    expected 为 'fail' 的检验记录原始数据中的勘误：按原样计算，
    预期不成立；修正值由另一项预期成立的检验给出。
    """

    name: str
    passed: bool
    expected: str = CheckStatus.PASS
    detail: Dict[str, Any] = field(default_factory=dict)
    certificate: Dict[str, Any] = field(default_factory=dict)
    provenance: str = ""

    @property
    def ok(self) -> bool:
        """观测结果与预期一致"""
        return self.passed == (self.expected == CheckStatus.PASS)

    @property
    def status(self) -> str:
        return CheckStatus.PASS if self.passed else CheckStatus.FAIL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "expected": self.expected,
            "ok": self.ok,
            "detail": self.detail,
            "certificate": self.certificate,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        data = dict(data)
        if "passed" not in data and "status" in data:
            data["passed"] = data["status"] == CheckStatus.PASS
        return cls(**{k: v for k, v in data.items() if k in cls.__dataclass_fields__})


@dataclass
class SuiteReport:
    """一个检验套件的汇总"""

    suite: str
    config: Dict[str, Any] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    findings: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, check: CheckResult) -> "SuiteReport":
        self.checks.append(check)
        return self

    def extend(self, checks: List[CheckResult]) -> "SuiteReport":
        self.checks.extend(checks)
        return self

    def add_finding(self, name: str, value: Any, note: str = "") -> "SuiteReport":
        """记录无判定的信息性结果"""
        self.findings.append({"name": name, "value": value, "note": note})
        return self

    def get(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    @property
    def n_unexpected(self) -> int:
        return sum(1 for c in self.checks if not c.ok)

    def summary(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "checks": len(self.checks),
            "passed": self.n_passed,
            "failed": self.n_failed,
            "unexpected": self.n_unexpected,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "config": self.config,
            "summary": self.summary(),
            "checks": [c.to_dict() for c in self.checks],
            "findings": self.findings,
        }
