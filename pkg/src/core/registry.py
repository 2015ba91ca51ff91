"""
检验套件注册表
管理套件名到运行函数的映射（惰性加载）
"""

from typing import Callable, Dict, List

from loguru import logger

from .config import RunConfig
from .types import SuiteReport

SuiteRunner = Callable[[RunConfig], SuiteReport]


class SuiteRegistry:
    """套件注册表 - 支持惰性加载"""

    _suites: Dict[str, SuiteRunner] = {}
    _descriptions: Dict[str, str] = {}
    _initialized: bool = False

    @classmethod
    def _ensure_initialized(cls):
        """确保已初始化（惰性加载）"""
        if not cls._initialized:
            cls._initialized = True
            _register_all_suites()

    @classmethod
    def register(cls, name: str, runner: SuiteRunner, description: str = "") -> None:
        """
        注册检验套件

        Args:
            name: 套件名称
            runner: 接受 RunConfig、返回 SuiteReport 的函数
            description: 简短说明
        """
        cls._suites[name] = runner
        cls._descriptions[name] = description
        logger.debug(f"注册套件: {name}")

    @classmethod
    def get(cls, name: str) -> SuiteRunner:
        """
        获取套件运行函数

        Raises:
            KeyError: 套件未注册
        """
        cls._ensure_initialized()
        if name not in cls._suites:
            raise KeyError(f"未注册的套件: {name}，可用套件: {list(cls._suites.keys())}")
        return cls._suites[name]

    @classmethod
    def list_suites(cls) -> List[str]:
        """列出所有已注册套件"""
        cls._ensure_initialized()
        return list(cls._suites.keys())

    @classmethod
    def describe(cls, name: str) -> str:
        cls._ensure_initialized()
        return cls._descriptions.get(name, "")


def _register_all_suites():
    """注册所有套件（内部调用）"""
    from ..config.constants import Suite
    from ..verification.classification_checks import run_classification_suite
    from ..verification.g2_checks import run_g2_suite
    from ..verification.jordan_checks import run_jordan_suite
    from ..verification.spinor_checks import run_spinor_suite

    SuiteRegistry.register(Suite.JORDAN, run_jordan_suite, "合成代数与 J3(A) 恒等式")
    SuiteRegistry.register(Suite.G2, run_g2_suite, "G2 七维模型、结合子核与图表残差")
    SuiteRegistry.register(Suite.SPINOR, run_spinor_suite, "Λ^even W 的 Pfaffian 坐标与 X′ 的局部维数")
    SuiteRegistry.register(Suite.CLASSIFICATION, run_classification_suite, "分类数据库核验")
