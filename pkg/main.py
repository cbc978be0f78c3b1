# 仿射欧拉多项式工具 - 主入口

"""
仿射欧拉多项式工具 - 精确计算与验证

功能:
1. 计算普通/仿射欧拉多项式（一元或旗多元），支持枚举、图公式、生成函数三种方法
2. 复现对照表：用图公式计算各型的仿射欧拉多项式并与期望值逐行比对
3. 约化Steinberg环面的旗 f/h-向量
4. 运行验证套件（恒等式、多元展开、γ-展开、生成函数、环面、实根性）

使用示例:
    python main.py compute --family B --rank 3 --method diagram
    python main.py compute --family A --rank 2 --form flag --method enumerate
    python main.py table1 --output csv
    python main.py torus --family C --rank 2
    python main.py verify --suite identities --max-rank 6 --output json
"""

import json
import sys
from typing import List, Optional

import click

from config.settings import get_settings
from core.diagram import affine_eulerian_formula
from core.errors import DomainError, InputError, UnsupportedError
from core.families import Family
from core.flag import univariate
from core.torus import build
from core.verify import eulerian_polynomial, flag_eulerian_polynomial
from executors.check_executor import CheckExecutor, SuiteResult
from executors.suites import SUITES, build_suite
from parsers.data_loader import load_table1
from reporters.formatting import OUTPUT_FORMATS, format_flag, format_polynomial
from reporters.models import FlagPolynomialModel, PolynomialModel, TableRowModel
from reporters.suite_reporter import SuiteReporter, generate_table_report
from utils.logger import get_logger, set_level

logger = get_logger(__name__)

# 参数组合错误：click 的 UsageError 以退出码 2 结束
USAGE_ERRORS = (InputError, DomainError, UnsupportedError)


def _output_option(func):
    return click.option("--output", "-o", type=click.Choice(OUTPUT_FORMATS), default=None,
                        help="输出格式（默认读取配置）")(func)


def _jobs_option(func):
    return click.option("--jobs", "-j", type=click.IntRange(min=1), default=None,
                        help="进程数（默认为可用CPU数）")(func)


def _resolve_output(output: Optional[str]) -> str:
    return output or get_settings().output_format


def _resolve_jobs(jobs: Optional[int]) -> int:
    return jobs or get_settings().jobs


def _parse_family(value: str) -> Family:
    try:
        return Family.parse(value)
    except InputError as e:
        raise click.BadParameter(str(e), param_hint="--family") from e


@click.group()
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="日志级别")
def cli(log_level: Optional[str]):
    """仿射欧拉多项式工具 - 精确计算与验证"""
    if log_level:
        set_level(log_level)


# ==================== compute ====================

def _check_combination(family: Family, rank: Optional[int], form: str, method: str):
    """参数组合校验，不合法时抛出 UsageError"""
    if family.is_classical and rank is None:
        raise click.UsageError(f"{family.value} 型需要 --rank")
    if method == "enumerate" and not family.is_classical:
        raise click.UsageError(f"{family.value} 型没有枚举模型，请使用 --method diagram")
    if method == "egf":
        if form == "flag":
            raise click.UsageError("生成函数方法只给出一元多项式，不能与 --form flag 同用")
        if not family.is_classical:
            raise click.UsageError(f"{family.value} 型没有生成函数，请使用 --method diagram")


def cmd_compute(family: Family, rank: Optional[int], statistic: str, form: str, method: str,
                output: str, jobs: int) -> str:
    """计算并格式化一个多项式"""
    affine = statistic == "affine"
    if form == "flag":
        return format_flag(flag_eulerian_polynomial(family, rank, affine, method, jobs), output)
    return format_polynomial(eulerian_polynomial(family, rank, affine, method, jobs), output)


@cli.command()
@click.option("--family", "-f", required=True, help="族: A, B, C, D, E6, E7, E8, F4, G2")
@click.option("--rank", "-r", type=int, default=None, help="Coxeter秩（例外型可省略）")
@click.option("--statistic", type=click.Choice(["ordinary", "affine"]), default="affine", show_default=True)
@click.option("--form", type=click.Choice(["univariate", "flag"]), default="univariate", show_default=True)
@click.option("--method", "-m", type=click.Choice(["auto", "enumerate", "diagram", "egf"]),
              default="auto", show_default=True)
@_output_option
@_jobs_option
def compute(family: str, rank: Optional[int], statistic: str, form: str, method: str,
            output: Optional[str], jobs: Optional[int]):
    """计算（仿射）欧拉多项式"""
    family = _parse_family(family)
    _check_combination(family, rank, form, method)
    try:
        text = cmd_compute(family, rank, statistic, form, method, _resolve_output(output), _resolve_jobs(jobs))
    except USAGE_ERRORS as e:
        raise click.UsageError(str(e)) from e
    click.echo(text)


# ==================== table1 ====================

def cmd_table1() -> List[TableRowModel]:
    """用图公式计算对照表的每一行"""
    rows = []
    for row in load_table1():
        computed = univariate(affine_eulerian_formula(Family.parse(row.family), row.rank))
        passed = computed == row.expected
        if not passed:
            logger.warning(f"{row.label} 不匹配: 计算 {computed}，期望 {row.expected}")
        rows.append(TableRowModel(
            label=row.label,
            family=row.family,
            rank=row.rank,
            computed=PolynomialModel.from_polynomial(computed),
            expected=PolynomialModel.from_polynomial(row.expected),
            passed=passed,
            text=str(computed),
        ))
    return rows


@cli.command()
@_output_option
def table1(output: Optional[str]):
    """复现仿射欧拉多项式对照表"""
    rows = cmd_table1()
    click.echo(generate_table_report(rows, _resolve_output(output)).rstrip("\n"))
    if not all(row.passed for row in rows):
        sys.exit(1)


# ==================== torus ====================

@cli.command()
@click.option("--family", "-f", required=True, help="族: A, B, C, D, E6, E7, E8, F4, G2")
@click.option("--rank", "-r", type=int, default=None, help="Coxeter秩（例外型可省略）")
@click.option("--vector", type=click.Choice(["f", "h", "both"]), default="both", show_default=True,
              help="输出旗 f-向量、h-向量或两者")
@click.option("--unreduced", is_flag=True, help="保留空面（f_∅ = 1）")
@_output_option
def torus(family: str, rank: Optional[int], vector: str, unreduced: bool, output: Optional[str]):
    """约化Steinberg环面的旗 f/h-向量"""
    family = _parse_family(family)
    if family.is_classical and rank is None:
        raise click.UsageError(f"{family.value} 型需要 --rank")
    output = _resolve_output(output)
    try:
        model = build(family, rank, reduced=not unreduced)
    except USAGE_ERRORS as e:
        raise click.UsageError(str(e)) from e

    if vector == "f":
        click.echo(format_flag(model.flag_f, output))
    elif vector == "h":
        click.echo(format_flag(model.flag_h, output))
    elif output == "text":
        click.echo(f"f: {model.flag_f}")
        click.echo(f"h: {model.flag_h}")
    else:
        if output == "csv":
            raise click.UsageError("CSV 输出需要 --vector f 或 --vector h")
        click.echo(json.dumps({
            "flag_f": FlagPolynomialModel.from_flag(model.flag_f).model_dump(),
            "flag_h": FlagPolynomialModel.from_flag(model.flag_h).model_dump(),
        }, indent=2, ensure_ascii=False))


# ==================== verify ====================

def cmd_verify(suite: str, max_rank: Optional[int] = None, order: Optional[int] = None,
               parallel: bool = True, jobs: Optional[int] = None) -> SuiteResult:
    """组装并执行验证套件；串行执行时 jobs 交给检查内部的枚举"""
    jobs = _resolve_jobs(jobs)
    specs = build_suite(suite, max_rank, order, jobs)
    executor = CheckExecutor(max_workers=jobs)
    return executor.execute_suite(specs, suite_name=suite, parallel=parallel)


@cli.command()
@click.option("--suite", "-s", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--max-rank", type=click.IntRange(min=1), default=None, help="秩上限（默认按套件取值）")
@click.option("--order", type=click.IntRange(min=1), default=None,
              help="级数截断阶：用于级数恒等式与 roots 套件（roots 要求 n_max ≤ 截断阶）；"
                   "compute --method egf 总是恰好展开到所需下标")
@click.option("--parallel/--serial", default=True, show_default=True, help="是否多进程执行各项检查")
@click.option("--report-dir", default=None, help="同时把报告保存到该目录")
@_output_option
@_jobs_option
def verify(suite: str, max_rank: Optional[int], order: Optional[int], parallel: bool,
           report_dir: Optional[str], output: Optional[str], jobs: Optional[int]):
    """运行验证套件；任何检查失败时退出码为 1"""
    output = _resolve_output(output)
    try:
        result = cmd_verify(suite, max_rank, order, parallel, jobs)
    except USAGE_ERRORS as e:
        raise click.UsageError(str(e)) from e

    reporter = SuiteReporter(output_dir=report_dir)
    click.echo(reporter.generate_report(result, output).rstrip("\n"))
    if report_dir:
        path = reporter.save_report(result, output)
        logger.info(f"报告已保存: {path}")
    if not result.ok:
        sys.exit(1)


def main():
    cli()


if __name__ == "__main__":
    main()
