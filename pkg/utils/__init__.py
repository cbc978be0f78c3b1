# 工具模块：日志
from .logger import get_logger, set_level

__all__ = ['get_logger', 'set_level']
