# 输出数据模型

from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator

from core.flag import FlagPolynomial
from core.poly import Polynomial
from executors.check_executor import CheckRecord, SuiteResult


class PolynomialModel(BaseModel):
    """一元多项式；系数用十进制字符串保存大整数"""
    variable: str = Field("t", description="变量名")
    coefficients: List[str] = Field(..., description="c0, c1, ... 的十进制字符串")

    @field_validator("coefficients")
    @classmethod
    def _check_coefficients(cls, value: List[str]) -> List[str]:
        for c in value:
            Fraction(c)
        return value

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "PolynomialModel":
        return cls(coefficients=[str(c) for c in p.coefficients])

    def to_polynomial(self) -> Polynomial:
        return Polynomial(tuple(Fraction(c) for c in self.coefficients))


class FlagTermModel(BaseModel):
    """旗多项式的一项"""
    subset: List[int] = Field(..., description="升序颜色集合")
    coefficient: str = Field(..., description="十进制字符串")


class FlagPolynomialModel(BaseModel):
    """多元旗多项式，各项按先基数后字典序排列"""
    n: int = Field(..., description="颜色为 0..n")
    terms: List[FlagTermModel] = Field(default_factory=list)

    @classmethod
    def from_flag(cls, p: FlagPolynomial) -> "FlagPolynomialModel":
        return cls(n=p.n, terms=[FlagTermModel(subset=list(subset), coefficient=str(value))
                                 for subset, value in p.terms()])

    def to_flag(self) -> FlagPolynomial:
        return FlagPolynomial.from_terms(self.n, [(term.subset, int(term.coefficient)) for term in self.terms])


ResidualModel = Union[FlagPolynomialModel, PolynomialModel]


def residual_model(residual) -> Optional[ResidualModel]:
    if residual is None:
        return None
    if isinstance(residual, FlagPolynomial):
        return FlagPolynomialModel.from_flag(residual)
    return PolynomialModel.from_polynomial(residual)


class CheckRecordModel(BaseModel):
    """单项检查"""
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)
    status: str
    ok: bool
    residual: Optional[ResidualModel] = Field(None, description="左边-右边，成立时为空")
    detail: str = ""
    error_message: str = ""
    elapsed_ms: float = 0.0

    @classmethod
    def from_record(cls, record: CheckRecord) -> "CheckRecordModel":
        result = record.result
        return cls(
            name=record.name,
            params=dict(record.params),
            status=record.status.value,
            ok=result.ok if result else False,
            residual=residual_model(result.residual) if result else None,
            detail=result.detail if result else "",
            error_message=record.error_message,
            elapsed_ms=record.elapsed_ms,
        )


class SuiteReportModel(BaseModel):
    """验证套件报告"""
    suite_name: str
    total: int
    passed: int
    failed: int
    error: int
    recorded: int
    pass_rate: float
    total_time_ms: float
    started_at: str = ""
    finished_at: str = ""
    records: List[CheckRecordModel] = Field(default_factory=list)

    @classmethod
    def from_suite(cls, result: SuiteResult) -> "SuiteReportModel":
        return cls(
            suite_name=result.suite_name,
            total=result.total,
            passed=result.passed,
            failed=result.failed,
            error=result.error,
            recorded=result.recorded,
            pass_rate=result.pass_rate,
            total_time_ms=result.total_time_ms,
            started_at=result.started_at,
            finished_at=result.finished_at,
            records=[CheckRecordModel.from_record(r) for r in result.records],
        )


class TableRowModel(BaseModel):
    """对照表的一行：图公式计算值与期望值"""
    label: str
    family: str
    rank: int
    computed: PolynomialModel
    expected: PolynomialModel
    passed: bool
    text: str = Field("", description="计算值的文本形式")
