#!/usr/bin/env python3
"""
输出模型与报告生成测试
"""

import os
import sys
from fractions import Fraction

import pytest
from pydantic import ValidationError

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.errors import InputError
from core.flag import FlagPolynomial
from core.poly import Polynomial
from core.verify import CheckResult
from executors import CheckExecutor, CheckSpec
from reporters import SuiteReporter
from reporters.formatting import format_flag, format_polynomial
from reporters.models import CheckRecordModel, FlagPolynomialModel, PolynomialModel


def _residual_check() -> CheckResult:
    residual = FlagPolynomial.from_terms(1, [((0,), 1), ((1,), -1)])
    return CheckResult(name="swap", params={"n": 1}, ok=False, residual=residual, detail="颜色未对齐")


def test_polynomial_model_keeps_exact_coefficients():
    p = Polynomial((0, Fraction(1, 3), -2))
    model = PolynomialModel.from_polynomial(p)
    assert model.coefficients == ["0", "1/3", "-2"]
    assert model.to_polynomial() == p


def test_polynomial_model_rejects_non_numbers():
    with pytest.raises(ValidationError):
        PolynomialModel(coefficients=["1", "x"])


def test_flag_model_round_trip():
    p = FlagPolynomial.from_terms(2, [((), 1), ((0, 2), -3)])
    model = FlagPolynomialModel.from_flag(p)
    assert model.n == 2
    assert model.to_flag() == p


def test_format_flag_csv():
    p = FlagPolynomial.from_terms(2, [((0,), 1), ((1, 2), 2)])
    assert format_flag(p, "csv").splitlines() == ["subset,coefficient", "0,1", "1 2,2"]


def test_format_rejects_unknown_output():
    with pytest.raises(InputError):
        format_polynomial(Polynomial.one(), "xml")


def test_record_model_keeps_flag_residual():
    result = CheckExecutor(max_workers=1).execute_suite([CheckSpec("swap", _residual_check)])
    model = CheckRecordModel.from_record(result.records[0])
    assert model.status == "failed"
    assert isinstance(model.residual, FlagPolynomialModel)
    assert model.residual.to_flag() == _residual_check().residual


def test_text_report_lists_failures(tmp_path):
    result = CheckExecutor(max_workers=1).execute_suite([CheckSpec("swap", _residual_check)], suite_name="demo")
    reporter = SuiteReporter(output_dir=str(tmp_path))
    report = reporter.generate_report(result)
    assert "# 验证报告: demo" in report
    assert "| FAIL | swap() |" in report
    assert "说明: 颜色未对齐" in report
    assert "`t_0 - t_1`" in report
    path = reporter.save_report(result, "json", filename="demo")
    assert path.endswith("demo.json")
    assert (tmp_path / "demo.json").exists()


def test_save_report_requires_directory():
    result = CheckExecutor(max_workers=1).execute_suite([])
    with pytest.raises(ValueError):
        SuiteReporter().save_report(result)
