# 验证执行器模块

from .suites import CheckSpec, SUITES, build_suite
from .check_executor import CheckExecutor, CheckRecord, CheckStatus, SuiteResult, run_check

__all__ = ['CheckSpec', 'SUITES', 'build_suite', 'CheckExecutor', 'CheckRecord',
           'CheckStatus', 'SuiteResult', 'run_check']
