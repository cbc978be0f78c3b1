# 多项式文本解析器

import re
from fractions import Fraction
from typing import List, Tuple

from core.errors import InputError
from core.flag import FlagPolynomial
from core.poly import Polynomial

# 形如 "10t^2"、"(1/2)t"、"-3"、"t"
_TERM = re.compile(r"^(?:\(?(\d+(?:/\d+)?)\)?)?\*?(t(?:\^(\d+))?)?$")
# 形如 "2t_0t_1"、"t_3"、"5"
_FLAG_TERM = re.compile(r"^(\d+)?\*?((?:t_\d+)*)$")
_FLAG_VAR = re.compile(r"t_(\d+)")


def _split_terms(text: str) -> List[Tuple[int, str]]:
    """按 +/- 拆成 (符号, 项文本)，括号内的符号不拆"""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise InputError("多项式文本为空")

    terms: List[Tuple[int, str]] = []
    sign = 1
    signed = False
    current = ""
    depth = 0
    for ch in compact:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0:
            if current:
                terms.append((sign, current))
                current = ""
            elif signed:
                raise InputError(f"多项式文本中运算符连续出现: {text!r}")
            sign = -1 if ch == "-" else 1
            signed = True
            continue
        current += ch
        signed = False
    if not current:
        raise InputError(f"多项式文本以运算符结尾: {text!r}")
    terms.append((sign, current))
    return terms


def parse_polynomial(text: str) -> Polynomial:
    """
    解析 "10t + 28t^2 + 10t^3" 形式的一元多项式

    Args:
        text: 多项式文本，变量为 t，有理系数写作 (p/q)

    Returns:
        Polynomial
    """
    if text.strip() == "0":
        return Polynomial.zero()

    coefficients = {}
    for sign, term in _split_terms(text):
        match = _TERM.match(term)
        if not match or (match.group(1) is None and match.group(2) is None):
            raise InputError(f"无法解析的项: {term!r}")
        number, variable, power = match.groups()
        value = Fraction(number) if number else Fraction(1)
        exponent = 0
        if variable:
            exponent = int(power) if power else 1
        coefficients[exponent] = coefficients.get(exponent, 0) + sign * value

    size = max(coefficients) + 1
    return Polynomial(tuple(coefficients.get(k, 0) for k in range(size)))


def parse_flag_polynomial(text: str, n: int) -> FlagPolynomial:
    """
    解析 "t_0 + 2t_0t_1" 形式的旗多项式

    Args:
        text: 旗多项式文本
        n: 颜色参数

    Returns:
        FlagPolynomial
    """
    if text.strip() == "0":
        return FlagPolynomial.zero(n)

    terms = []
    for sign, term in _split_terms(text):
        match = _FLAG_TERM.match(term)
        if not match or (match.group(1) is None and not match.group(2)):
            raise InputError(f"无法解析的旗多项式项: {term!r}")
        number, variables = match.groups()
        colors = [int(c) for c in _FLAG_VAR.findall(variables)]
        if len(set(colors)) != len(colors):
            raise InputError(f"旗多项式的项必须是多重线性的: {term!r}")
        terms.append((colors, sign * (int(number) if number else 1)))
    return FlagPolynomial.from_terms(n, terms)
