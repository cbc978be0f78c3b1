# 多项式的文本 / JSON / CSV 输出

import csv
import io
import json
from typing import Iterable, List, Sequence, Union

from pydantic import BaseModel

from core.errors import InputError
from core.flag import FlagPolynomial
from core.poly import Polynomial

from .models import FlagPolynomialModel, PolynomialModel

OUTPUT_FORMATS = ("text", "json", "csv")


def check_format(output: str) -> str:
    if output not in OUTPUT_FORMATS:
        raise InputError(f"未知的输出格式: {output}，可选 {list(OUTPUT_FORMATS)}")
    return output


def dump_json(model: Union[BaseModel, List[BaseModel]]) -> str:
    """模型转 JSON 文本（缩进2，保留非ASCII字符）"""
    if isinstance(model, list):
        data = [m.model_dump() for m in model]
    else:
        data = model.model_dump()
    return json.dumps(data, indent=2, ensure_ascii=False)


def dump_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def format_polynomial(p: Polynomial, output: str = "text") -> str:
    """
    输出一元多项式

    Args:
        p: 多项式
        output: text（"10t + 28t^2 + 10t^3"）、json 或 csv（exponent,coefficient）

    Returns:
        文本，末尾不带换行
    """
    output = check_format(output)
    if output == "json":
        return dump_json(PolynomialModel.from_polynomial(p))
    if output == "csv":
        rows = [(k, c) for k, c in enumerate(p.coefficients) if c != 0]
        return dump_csv(("exponent", "coefficient"), rows).rstrip("\n")
    return str(p)


def format_flag(p: FlagPolynomial, output: str = "text") -> str:
    """输出旗多项式；CSV 的子集写成空格分隔的颜色"""
    output = check_format(output)
    if output == "json":
        return dump_json(FlagPolynomialModel.from_flag(p))
    if output == "csv":
        rows = [(" ".join(str(c) for c in subset), value) for subset, value in p.terms()]
        return dump_csv(("subset", "coefficient"), rows).rstrip("\n")
    return str(p)


def parse_polynomial_json(text: str) -> Polynomial:
    return PolynomialModel.model_validate(json.loads(text)).to_polynomial()


def parse_flag_json(text: str) -> FlagPolynomial:
    return FlagPolynomialModel.model_validate(json.loads(text)).to_flag()
