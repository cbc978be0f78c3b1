# 应用配置

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv


def _default_jobs() -> int:
    return os.cpu_count() or 1


@dataclass
class Settings:
    """应用配置"""

    # 日志配置
    log_level: str = "INFO"
    log_file: Optional[str] = None

    # 并行度（进程数）
    jobs: int = field(default_factory=_default_jobs)

    # 级数截断阶
    series_order: int = 40

    # 枚举上限（按带符号置换的窗口长度计）
    enum_limit_a: int = 10
    enum_limit_bc: int = 7
    enum_limit_d: int = 8

    # 实根验证的最大秩
    roots_max_rank: int = 40

    # 输出格式: text, json, csv
    output_format: str = "text"

    @classmethod
    def from_env(cls) -> "Settings":
        """从环境变量（及可选的 .env 文件）加载配置"""
        load_dotenv()
        return cls(
            log_level=os.getenv("LOG_LEVEL", "INFO"),
            log_file=os.getenv("LOG_FILE"),
            jobs=int(os.getenv("EULER_JOBS", str(_default_jobs()))),
            series_order=int(os.getenv("EULER_SERIES_ORDER", "40")),
            enum_limit_a=int(os.getenv("EULER_ENUM_LIMIT_A", "10")),
            enum_limit_bc=int(os.getenv("EULER_ENUM_LIMIT_BC", "7")),
            enum_limit_d=int(os.getenv("EULER_ENUM_LIMIT_D", "8")),
            roots_max_rank=int(os.getenv("EULER_ROOTS_MAX_RANK", "40")),
            output_format=os.getenv("EULER_OUTPUT", "text"),
        )

    def enum_limit(self, family) -> int:
        """
        返回某族的枚举上限（窗口长度）

        Args:
            family: Family 或族名称

        Returns:
            可枚举的最大窗口长度
        """
        name = getattr(family, "value", str(family)).upper()
        if name == "A":
            return self.enum_limit_a
        if name in ("B", "C"):
            return self.enum_limit_bc
        if name == "D":
            return self.enum_limit_d
        return 0


@lru_cache()
def get_settings() -> Settings:
    """获取配置单例"""
    return Settings.from_env()
