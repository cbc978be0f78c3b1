# 验证套件执行器

import os
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, replace
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from config.settings import get_settings
from core.verify import CheckResult, enumeration_jobs
from utils.logger import get_logger

from .suites import CheckSpec

logger = get_logger(__name__)


class CheckStatus(Enum):
    """检查状态"""
    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"
    RECORDED = "recorded"  # 只记录结果，不计入失败


@dataclass
class CheckRecord:
    """单项检查的执行记录"""
    name: str
    params: Dict[str, Any]
    status: CheckStatus
    result: Optional[CheckResult] = None
    error_message: str = ""
    elapsed_ms: float = 0.0

    @property
    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.name}({args})"

    def to_dict(self) -> Dict[str, Any]:
        residual = self.result.residual if self.result else None
        return {
            "name": self.name,
            "params": dict(self.params),
            "status": self.status.value,
            "ok": self.result.ok if self.result else False,
            "residual": str(residual) if residual is not None else None,
            "detail": self.result.detail if self.result else "",
            "error_message": self.error_message,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class SuiteResult:
    """验证套件结果"""
    suite_name: str
    total: int
    passed: int
    failed: int
    error: int
    recorded: int
    pass_rate: float
    total_time_ms: float
    records: List[CheckRecord] = field(default_factory=list)
    started_at: str = ""
    finished_at: str = ""

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.error == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite_name": self.suite_name,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "error": self.error,
            "recorded": self.recorded,
            "pass_rate": self.pass_rate,
            "total_time_ms": self.total_time_ms,
            "records": [r.to_dict() for r in self.records],
            "started_at": self.started_at,
            "finished_at": self.finished_at,
        }


def _single_process_worker():
    # 套件已按检查并行，检查内部的枚举不再开进程池
    os.environ["EULER_JOBS"] = "1"
    get_settings.cache_clear()


def run_check(spec: CheckSpec) -> CheckRecord:
    """
    执行单项检查，异常转为 ERROR 记录

    Args:
        spec: 检查描述

    Returns:
        CheckRecord
    """
    started = time.perf_counter()
    try:
        with enumeration_jobs(spec.jobs):
            result = spec.func(**spec.kwargs)
    except Exception as e:
        elapsed = round((time.perf_counter() - started) * 1000, 3)
        logger.error(f"{spec.label} 执行错误: {e}")
        return CheckRecord(name=spec.name, params=spec.kwargs, status=CheckStatus.ERROR,
                           error_message=f"{type(e).__name__}: {e}", elapsed_ms=elapsed)

    if spec.informational or result.informational:
        status = CheckStatus.RECORDED
    else:
        status = CheckStatus.PASSED if result.ok else CheckStatus.FAILED
    return CheckRecord(name=spec.name, params=spec.kwargs, status=status,
                       result=result, elapsed_ms=result.elapsed_ms)


class CheckExecutor:
    """验证套件执行器"""

    def __init__(self, max_workers: Optional[int] = None):
        """
        Args:
            max_workers: 进程数，默认取配置中的 jobs
        """
        self.max_workers = max_workers or get_settings().jobs

    def execute_suite(
        self,
        specs: List[CheckSpec],
        suite_name: str = "verify",
        parallel: bool = False,
    ) -> SuiteResult:
        """
        执行验证套件

        Args:
            specs: 检查列表
            suite_name: 套件名称
            parallel: 是否多进程执行

        Returns:
            套件结果，records 的顺序与 specs 一致
        """
        started_at = datetime.now().isoformat()
        logger.info(f"开始执行套件 {suite_name}，共 {len(specs)} 项")
        records: List[Optional[CheckRecord]] = [None] * len(specs)

        if parallel and self.max_workers > 1 and len(specs) > 1:
            with ProcessPoolExecutor(max_workers=self.max_workers,
                                     initializer=_single_process_worker) as executor:
                # 检查之间已并行，检查内部只用单进程枚举
                futures = {executor.submit(run_check, replace(spec, jobs=1)): index
                           for index, spec in enumerate(specs)}
                for future in as_completed(futures):
                    records[futures[future]] = future.result()
        else:
            for index, spec in enumerate(specs):
                records[index] = run_check(spec)

        finished_at = datetime.now().isoformat()

        # 统计
        passed = sum(1 for r in records if r.status == CheckStatus.PASSED)
        failed = sum(1 for r in records if r.status == CheckStatus.FAILED)
        error = sum(1 for r in records if r.status == CheckStatus.ERROR)
        recorded = sum(1 for r in records if r.status == CheckStatus.RECORDED)
        total = len(records)
        asserted = total - recorded
        total_time = sum(r.elapsed_ms for r in records)
        pass_rate = (passed / asserted * 100) if asserted > 0 else 100.0

        logger.info(f"套件 {suite_name} 完成: 通过 {passed}，失败 {failed}，错误 {error}，记录 {recorded}")
        return SuiteResult(
            suite_name=suite_name,
            total=total,
            passed=passed,
            failed=failed,
            error=error,
            recorded=recorded,
            pass_rate=round(pass_rate, 2),
            total_time_ms=round(total_time, 2),
            records=records,
            started_at=started_at,
            finished_at=finished_at,
        )
