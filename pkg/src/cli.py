"""
统一命令行接口

运行分类数据库核验与 G2 / 旋量 / Jordan 检验套件

退出码：0 全部与预期一致；1 有检验与预期不符；2 输入错误（数据库、参数、文件）
"""

import argparse
import sys

from .config import ensure_dirs
from .config.constants import DEFAULT_SEED, ReportFormat, Suite
from .core.logger import LoggerManager

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def setup_logging(verbose: bool = False):
    """设置日志"""
    level = "DEBUG" if verbose else "INFO"
    return LoggerManager.get_logger("symvar_check", level=level)


def build_config(args, command: str):
    """由命令行参数构造 RunConfig"""
    from .core.config import RunConfig

    return RunConfig(
        command=command,
        cases=list(getattr(args, "case", None) or []),
        seed=args.seed,
        samples=args.samples,
        out=args.out,
        fmt=args.format,
        db=getattr(args, "db", None),
        verbose=args.verbose,
        n_jobs=args.n_jobs,
    )


def _run(args, command: str, suites) -> int:
    """运行套件并输出报告，返回退出码"""
    from .core.exceptions import ConfigurationError, DatabaseError
    from .verification.runner import emit, run_suites

    logger = setup_logging(args.verbose)
    ensure_dirs()
    config = build_config(args, command)
    try:
        reports = run_suites(config, suites)
        ok = emit(config, reports)
    except (DatabaseError, ConfigurationError, FileNotFoundError) as e:
        logger.error(f"输入错误: {e}")
        return EXIT_INPUT_ERROR
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def verify_classification_command(args) -> int:
    """分类数据库核验命令"""
    return _run(args, "verify-classification", [Suite.CLASSIFICATION])


def check_g2_command(args) -> int:
    """G2 检验命令"""
    return _run(args, "check-g2", [Suite.G2])


def check_spinor_command(args) -> int:
    """旋量检验命令"""
    return _run(args, "check-spinor", [Suite.SPINOR])


def check_jordan_command(args) -> int:
    """Jordan / 合成代数检验命令"""
    return _run(args, "check-jordan", [Suite.JORDAN])


def list_cases_command(args) -> int:
    """列出数据库中的条目"""
    from .classification import ClassificationDB
    from .core.exceptions import DatabaseError
    from .core.registry import SuiteRegistry

    logger = setup_logging(args.verbose)
    try:
        db = ClassificationDB.load(args.db)
    except (DatabaseError, FileNotFoundError) as e:
        logger.error(f"输入错误: {e}")
        return EXIT_INPUT_ERROR

    print(f"\n数据库条目 ({len(db)}):")
    for entry in db.entries:
        model = entry.model.name if entry.model else "-"
        print(f"  {entry.id:<12} {entry.restricted_type:<6} {entry.group:<10} {model}")
    if db.rank_one is not None:
        print(f"  {db.rank_one.id:<12} {'rank1':<6} {'-':<10} {db.rank_one.title}")

    print("\n检验套件:")
    for name in SuiteRegistry.list_suites():
        print(f"  {name:<15} {SuiteRegistry.describe(name)}")
    return EXIT_OK


def _add_common_arguments(parser: argparse.ArgumentParser, with_db: bool = False, with_cases: bool = False):
    if with_cases:
        parser.add_argument("--case", action="append", default=None, help="条目编号，可重复；不指定则核验整个数据库")
    if with_db:
        parser.add_argument("--db", default=None, help="数据库路径，默认 data/classification.json")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="随机种子")
    parser.add_argument("--samples", type=int, default=None, help="样本数，不指定则取各套件默认值")
    parser.add_argument("--out", default=None, help="报告输出路径，不指定则打印")
    parser.add_argument("--format", choices=ReportFormat.ALL_FORMATS, default=ReportFormat.JSON, help="报告格式")
    parser.add_argument("--n-jobs", type=int, default=1, help="joblib 并行进程数")
    parser.add_argument("--verbose", "-v", action="store_true", help="详细日志")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Symmetric Variety Classification Checks CLI",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", help="可用命令")

    # 分类核验
    vc_parser = subparsers.add_parser("verify-classification", help="核验分类数据库")
    _add_common_arguments(vc_parser, with_db=True, with_cases=True)
    vc_parser.set_defaults(func=verify_classification_command)

    # G2
    g2_parser = subparsers.add_parser("check-g2", help="G2 模型、结合子核与图表残差")
    _add_common_arguments(g2_parser)
    g2_parser.set_defaults(func=check_g2_command)

    # 旋量
    sp_parser = subparsers.add_parser("check-spinor", help="Pfaffian 坐标与 X′ 的局部维数")
    _add_common_arguments(sp_parser)
    sp_parser.set_defaults(func=check_spinor_command)

    # Jordan
    jd_parser = subparsers.add_parser("check-jordan", help="合成代数与 J3(A) 恒等式")
    _add_common_arguments(jd_parser)
    jd_parser.set_defaults(func=check_jordan_command)

    # 列出条目
    ls_parser = subparsers.add_parser("list-cases", help="列出数据库条目")
    ls_parser.add_argument("--db", default=None, help="数据库路径")
    ls_parser.add_argument("--verbose", "-v", action="store_true", help="详细日志")
    ls_parser.set_defaults(func=list_cases_command)

    return parser


def main(argv=None):
    """主入口"""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "func", None):
        parser.print_help()
        sys.exit(EXIT_INPUT_ERROR)
    sys.exit(args.func(args))


if __name__ == "__main__":
    main()
