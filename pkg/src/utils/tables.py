"""
纯文本表格输出
"""

from typing import List

import pandas as pd

from ..core.types import SuiteReport


def suite_table(suite: SuiteReport) -> pd.DataFrame:
    """每项检验一行"""
    rows = [
        {
            "check": c.name,
            "status": c.status,
            "expected": c.expected,
            "ok": "yes" if c.ok else "NO",
            "provenance": c.provenance,
        }
        for c in suite.checks
    ]
    return pd.DataFrame(rows, columns=["check", "status", "expected", "ok", "provenance"])


def render_text(suites: List[SuiteReport]) -> str:
    """把若干套件渲染为文本"""
    blocks = []
    for suite in suites:
        s = suite.summary()
        header = f"[{suite.suite}] checks={s['checks']} passed={s['passed']} failed={s['failed']} unexpected={s['unexpected']}"
        table = suite_table(suite)
        body = table.to_string(index=False) if not table.empty else "(no checks)"
        blocks.append(header + "\n" + body)
        if suite.findings:
            findings = pd.DataFrame(
                [{"finding": f["name"], "value": str(f["value"]), "note": f.get("note", "")} for f in suite.findings]
            )
            blocks.append(findings.to_string(index=False))
    overall = "OK" if all(s.ok for s in suites) else "FAILED"
    blocks.append(f"overall: {overall}")
    return "\n\n".join(blocks)
