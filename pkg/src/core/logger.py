"""
统一日志管理 - 使用 loguru
"""

import os
import sys

from loguru import logger

_CONSOLE_FORMAT = "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: ^1}</level> | <level>{message}</level>"
_FILE_FORMAT = "{time:YYYYMMDD} | {level: ^1} | {message}"

# 移除默认处理器
logger.remove()

# 屏幕日志：时间(HH:mm:ss.ms) + 级别首字母 + 消息
_console_id = logger.add(sys.stderr, colorize=True, level="INFO", format=_CONSOLE_FORMAT)

# 文件日志：时间(YYYYMMDD) + 级别首字母 + 消息
os.makedirs("logs", exist_ok=True)
logger.add(
    "logs/symvar_check.log",
    rotation="10 MB",
    retention="30 days",
    encoding="utf-8",
    level="DEBUG",
    format=_FILE_FORMAT,
)


class LoggerManager:
    """日志管理器（统一返回 loguru logger）"""

    @classmethod
    def get_logger(cls, name: str = "symvar_check", level=None):
        """
        获取 logger，可选地调整屏幕日志级别

        Args:
            name: logger名称（loguru中不使用，仅作兼容）
            level: 屏幕日志级别，如 "DEBUG"；None 则保持不变

        Returns:
            loguru logger
        """
        global _console_id
        if level is not None:
            logger.remove(_console_id)
            _console_id = logger.add(sys.stderr, colorize=True, level=level, format=_CONSOLE_FORMAT)
        return logger


def get_logger(name: str = "symvar_check"):
    """
    获取 logger（实际返回 loguru logger）

    Args:
        name: logger名称（loguru中不使用，仅作兼容）

    Returns:
        loguru logger
    """
    return logger
