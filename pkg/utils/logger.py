# 日志工具

import logging
import sys
from typing import Optional


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    获取日志记录器

    标准输出保留给命令结果，日志一律写到标准错误；
    配置了 LOG_FILE 时同时写入文件。

    Args:
        name: 日志记录器名称
        level: 日志级别（默认读取配置）

    Returns:
        配置好的日志记录器
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        # 延迟导入，避免 config 与 utils 循环依赖
        from config.settings import get_settings

        settings = get_settings()
        log_level = level or settings.log_level or "INFO"
        logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))
        logger.propagate = False

        formatter = logging.Formatter(
            fmt="%(asctime)s | %(levelname)-8s | %(name)s:%(lineno)d | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )

        # 控制台处理器
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.DEBUG)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        # 文件处理器
        if settings.log_file:
            file_handler = logging.FileHandler(settings.log_file, encoding="utf-8")
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    return logger


def set_level(level: str) -> None:
    """调整已创建的所有工具包日志记录器的级别（CLI --log-level 使用）"""
    numeric = getattr(logging, level.upper(), logging.INFO)
    for logger in logging.root.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and logger.handlers:
            logger.setLevel(numeric)
