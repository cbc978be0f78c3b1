# 验证套件与对照表报告生成器

from datetime import datetime
from pathlib import Path
from typing import List, Optional

from executors.check_executor import CheckStatus, SuiteResult

from .formatting import check_format, dump_csv, dump_json
from .models import SuiteReportModel, TableRowModel


class SuiteReporter:
    """验证套件报告生成器"""

    def __init__(self, output_dir: Optional[str] = None):
        """
        Args:
            output_dir: 报告输出目录；为空时只生成文本不落盘
        """
        self.output_dir = Path(output_dir) if output_dir else None
        if self.output_dir:
            self.output_dir.mkdir(parents=True, exist_ok=True)

    def generate_report(self, result: SuiteResult, format: str = "text") -> str:
        """
        生成验证报告

        Args:
            result: 套件结果
            format: text / json / csv

        Returns:
            报告内容
        """
        format = check_format(format)
        if format == "json":
            return dump_json(SuiteReportModel.from_suite(result))
        if format == "csv":
            return self._generate_csv_report(result)
        return self._generate_text_report(result)

    def _generate_text_report(self, result: SuiteResult) -> str:
        """Markdown 风格的文本报告"""
        report = f"""# 验证报告: {result.suite_name}

| 项目 | 值 |
|------|-----|
| **检查总数** | {result.total} |
| **通过数** | {result.passed} |
| **失败数** | {result.failed} |
| **错误数** | {result.error} |
| **仅记录** | {result.recorded} |
| **通过率** | {result.pass_rate}% |
| **总耗时** | {result.total_time_ms:.0f}ms |

"""
        status_icons = {
            CheckStatus.PASSED: "PASS",
            CheckStatus.FAILED: "FAIL",
            CheckStatus.ERROR: "ERROR",
            CheckStatus.RECORDED: "INFO",
        }

        report += "| 状态 | 检查 | 耗时 |\n"
        report += "|------|------|------|\n"
        for r in result.records:
            report += f"| {status_icons[r.status]} | {r.label} | {r.elapsed_ms:.0f}ms |\n"

        failed = [r for r in result.records if r.status in (CheckStatus.FAILED, CheckStatus.ERROR)]
        if failed:
            report += "\n## 失败详情\n\n"
            for r in failed:
                report += f"### {r.label}\n\n"
                if r.error_message:
                    report += f"错误: `{r.error_message}`\n\n"
                if r.result and r.result.detail:
                    report += f"说明: {r.result.detail}\n\n"
                if r.result and r.result.residual is not None:
                    report += f"残差 (左边-右边): `{r.result.residual}`\n\n"

        recorded = [r for r in result.records if r.status == CheckStatus.RECORDED]
        if recorded:
            report += "\n## 仅记录的检查\n\n"
            for r in recorded:
                outcome = "成立" if r.result and r.result.ok else "不成立"
                report += f"- {r.label}: {outcome}\n"

        return report

    def _generate_csv_report(self, result: SuiteResult) -> str:
        rows = []
        for r in result.records:
            residual = r.result.residual if r.result else None
            rows.append((r.name, " ".join(f"{k}={v}" for k, v in r.params.items()), r.status.value,
                         "" if residual is None else str(residual), r.error_message))
        return dump_csv(("check", "params", "status", "residual", "error"), rows)

    def save_report(self, result: SuiteResult, format: str = "text",
                    filename: Optional[str] = None) -> str:
        """
        保存报告到文件

        Returns:
            保存的文件路径
        """
        if not self.output_dir:
            raise ValueError("未配置报告输出目录")
        content = self.generate_report(result, format)
        if not filename:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            filename = f"verify_{result.suite_name}_{timestamp}"
        ext_map = {"text": ".md", "json": ".json", "csv": ".csv"}
        filepath = self.output_dir / f"{filename}{ext_map[format]}"
        filepath.write_text(content, encoding="utf-8")
        return str(filepath)


def generate_table_report(rows: List[TableRowModel], format: str = "text") -> str:
    """
    对照表报告：每行给出计算值与是否匹配

    Args:
        rows: 表行
        format: text / json / csv
    """
    format = check_format(format)
    if format == "json":
        return dump_json(rows)
    if format == "csv":
        return dump_csv(("type", "polynomial", "pass"),
                        [(row.label, row.text, "pass" if row.passed else "fail") for row in rows])

    width = max((len(row.label) for row in rows), default=0)
    lines = []
    for row in rows:
        mark = "pass" if row.passed else "FAIL"
        lines.append(f"{row.label.ljust(width)}  {mark}  {row.text}")
        if not row.passed:
            lines.append(f"{' ' * width}  expected  {row.expected.to_polynomial()}")
    return "\n".join(lines) + "\n"
