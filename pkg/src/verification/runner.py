"""
套件运行与报告输出

CLI 的各命令共用：运行套件、生成报告、写出或打印。
"""

from typing import List

from loguru import logger

from ..config.constants import ReportFormat
from ..core.config import RunConfig
from ..core.exceptions import ConfigurationError
from ..core.registry import SuiteRegistry
from ..core.types import SuiteReport
from ..utils.report import ReportGenerator
from ..utils.tables import render_text

FORMATS = ReportFormat.ALL_FORMATS


def validate_config(config: RunConfig) -> RunConfig:
    """
    校验命令行参数

    Raises:
        ConfigurationError: 参数取值非法
    """
    if config.samples is not None and config.samples < 1:
        raise ConfigurationError(f"--samples 必须为正整数，收到 {config.samples}")
    if config.fmt not in FORMATS:
        raise ConfigurationError(f"--format 只支持 {FORMATS}，收到 {config.fmt}")
    if config.n_jobs == 0:
        raise ConfigurationError("--n-jobs 不能为 0")
    if config.sampling.numerator_bound < 1 or config.sampling.denominator_bound < 1:
        raise ConfigurationError("采样范围必须为正整数")
    return config


def run_suites(config: RunConfig, suites: List[str]) -> List[SuiteReport]:
    """按顺序运行所选套件"""
    validate_config(config)
    reports = []
    for name in suites:
        logger.info(f"运行套件: {name}（{SuiteRegistry.describe(name)}）")
        reports.append(SuiteRegistry.get(name)(config))
    return reports


def build_report(config: RunConfig, reports: List[SuiteReport]) -> ReportGenerator:
    generator = ReportGenerator(config.command).add_config(config.to_dict())
    for report in reports:
        generator.add_suite(report)
    return generator.finalize(reports)


def render(config: RunConfig, reports: List[SuiteReport]) -> str:
    """按 config.fmt 生成报告文本"""
    if config.fmt == ReportFormat.TEXT:
        return render_text(reports)
    generator = build_report(config, reports)
    if config.fmt == ReportFormat.MARKDOWN:
        return generator.to_markdown()
    return generator.to_json()


def save(config: RunConfig, reports: List[SuiteReport]) -> str:
    """按 config.fmt 写出到 config.out，返回路径"""
    if config.fmt == ReportFormat.TEXT:
        return ReportGenerator.save_text(config.out, render_text(reports))
    generator = build_report(config, reports)
    if config.fmt == ReportFormat.MARKDOWN:
        return generator.save_markdown(config.out)
    return generator.save_json(config.out)


def emit(config: RunConfig, reports: List[SuiteReport]) -> bool:
    """
    写出报告（--out 给出时写文件，否则打印）

    Returns:
        所有检验是否与预期一致
    """
    if config.out:
        path = save(config, reports)
        logger.info(f"报告已保存: {path}")
    else:
        print(render(config, reports))

    ok = all(r.ok for r in reports)
    for report in reports:
        for check in report.checks:
            if not check.ok:
                logger.error(f"与预期不符: {check.name}（结果 {check.status}，预期 {check.expected}）")
    return ok
