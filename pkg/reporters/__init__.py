# 报告生成器模块

from .models import (
    PolynomialModel,
    FlagTermModel,
    FlagPolynomialModel,
    CheckRecordModel,
    SuiteReportModel,
    TableRowModel,
)
from .formatting import OUTPUT_FORMATS, format_polynomial, format_flag, parse_polynomial_json, parse_flag_json
from .suite_reporter import SuiteReporter, generate_table_report

__all__ = [
    'PolynomialModel', 'FlagTermModel', 'FlagPolynomialModel', 'CheckRecordModel',
    'SuiteReportModel', 'TableRowModel', 'OUTPUT_FORMATS', 'format_polynomial', 'format_flag',
    'parse_polynomial_json', 'parse_flag_json', 'SuiteReporter', 'generate_table_report',
]
