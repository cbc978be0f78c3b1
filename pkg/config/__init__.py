# 配置模块（环境变量 / .env）
from .settings import Settings, get_settings

__all__ = ['Settings', 'get_settings']
