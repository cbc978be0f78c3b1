# 截断指数生成函数

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Tuple, Union

from utils.logger import get_logger

from .errors import DomainError, InputError
from .poly import Polynomial

logger = get_logger(__name__)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    """
    z 的幂级数，保留 z^0..z^order；系数是 t 的有理系数多项式

    所有运算的结果在 z^order 以内都是精确的。
    """
    order: int
    coefficients: Tuple[Polynomial, ...]

    def __post_init__(self):
        if self.order < 0:
            raise InputError(f"截断阶不能为负: {self.order}")
        coeffs = tuple(self.coefficients[: self.order + 1])
        coeffs += (Polynomial.zero(),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def constant(cls, value: Union[Polynomial, Scalar], order: int) -> "TruncatedSeries":
        return cls(order, (Polynomial.coerce(value),))

    @classmethod
    def z(cls, order: int) -> "TruncatedSeries":
        return cls(order, (Polynomial.zero(), Polynomial.one()))

    def coefficient(self, k: int) -> Polynomial:
        if k > self.order:
            raise DomainError(f"z^{k} 超出截断阶 {self.order}")
        return self.coefficients[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(min(order, self.order), self.coefficients)

    def _align(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._align(other)
        order = min(self.order, other.order)
        return TruncatedSeries(order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coefficients))

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._align(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._align(other) - self

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, Polynomial)):
            return TruncatedSeries(self.order, tuple(a * other for a in self.coefficients))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        result = []
        for k in range(order + 1):
            total = Polynomial.zero()
            for i in range(k + 1):
                a = self.coefficients[i]
                if not a.is_zero:
                    total = total + a * other.coefficients[k - i]
            result.append(total)
        return TruncatedSeries(order, tuple(result))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        """
        逐项递推除法 q_k = (a_k - Σ_{i≥1} d_i q_{k-i}) / d_0

        d_0 是 t 的多项式；每一步都要求整除（结果系数仍是多项式）。
        """
        other = self._align(other)
        if other.coefficients[0].is_zero:
            raise DomainError("级数除法要求除式的常数项非零")
        order = min(self.order, other.order)
        d0 = other.coefficients[0]
        quotient = []
        for k in range(order + 1):
            numerator = self.coefficients[k]
            for i in range(1, k + 1):
                d = other.coefficients[i]
                if not d.is_zero:
                    numerator = numerator - d * quotient[k - i]
            quotient.append(numerator.exact_div(d0))
        return TruncatedSeries(order, tuple(quotient))

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """乘以 z^k"""
        return TruncatedSeries(self.order, (Polynomial.zero(),) * k + self.coefficients)

    def scale(self, c: Scalar) -> "TruncatedSeries":
        """z -> c·z"""
        return TruncatedSeries(self.order, tuple(a * (Fraction(c) ** k) for k, a in enumerate(self.coefficients)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return self.coefficients[: order + 1] == other.coefficients[: order + 1]

    def __hash__(self) -> int:
        return hash((self.order, self.coefficients))


def exp_linear(a: Polynomial, order: int) -> TruncatedSeries:
    """e^{a z} = Σ_{k≤order} a^k z^k / k!"""
    coefficients = []
    power = Polynomial.one()
    for k in range(order + 1):
        coefficients.append(power * Fraction(1, math.factorial(k)))
        power = power * a
    return TruncatedSeries(order, tuple(coefficients))


# ==================== 闭形式 ====================

_ONE_MINUS_T = Polynomial((1, -1))
_T = Polynomial.t()


def _closed_a(order: int) -> TruncatedSeries:
    e1 = exp_linear(_ONE_MINUS_T, order)
    return TruncatedSeries.constant(_ONE_MINUS_T, order) / (1 - e1 * _T)


def _closed_bc(order: int) -> TruncatedSeries:
    e1 = exp_linear(_ONE_MINUS_T, order)
    e2 = exp_linear(_ONE_MINUS_T * 2, order)
    return (e1 * _ONE_MINUS_T) / (1 - e2 * _T)


def _closed_d(order: int) -> TruncatedSeries:
    e1 = exp_linear(_ONE_MINUS_T, order)
    e2 = exp_linear(_ONE_MINUS_T * 2, order)
    return ((e1 - TruncatedSeries.z(order)) * _ONE_MINUS_T) / (1 - e2 * _T)


def _closed_aff_a(order: int) -> TruncatedSeries:
    e1 = exp_linear(_ONE_MINUS_T, order)
    return (TruncatedSeries.z(order) * _ONE_MINUS_T) / (1 - e1 * _T)


def _closed_aff_c(order: int) -> TruncatedSeries:
    e2 = exp_linear(_ONE_MINUS_T * 2, order)
    return TruncatedSeries.constant(_ONE_MINUS_T, order) / (1 - e2 * _T)


def _closed_aff_b(order: int) -> TruncatedSeries:
    e1 = exp_linear(_ONE_MINUS_T, order)
    e2 = exp_linear(_ONE_MINUS_T * 2, order)
    numerator = (1 - (e1 * _T).shift(1)) * (_ONE_MINUS_T * 2)
    return numerator / (1 - e2 * _T)


def _closed_aff_d(order: int) -> TruncatedSeries:
    e1 = exp_linear(_ONE_MINUS_T, order)
    e2 = exp_linear(_ONE_MINUS_T * 2, order)
    z2 = TruncatedSeries.constant(_T, order).shift(2)
    numerator = (1 + z2 - (e1 * (_T * 2)).shift(1)) * (_ONE_MINUS_T * 2)
    return numerator / (1 - e2 * _T)


CLOSED_FORMS: Dict[str, Callable[[int], TruncatedSeries]] = {
    "A": _closed_a,
    "BC": _closed_bc,
    "D": _closed_d,
    "affA": _closed_aff_a,
    "affC": _closed_aff_c,
    "affB": _closed_aff_b,
    "affD": _closed_aff_d,
}

# 系数是真正群多项式的最小下标；更小的下标只是级数约定
GENUINE_MIN_INDEX = {
    "A": 1,
    "BC": 1,
    "D": 2,
    "affA": 2,
    "affC": 1,
    "affB": 2,
    "affD": 3,
}

_cache: Dict[str, TruncatedSeries] = {}


def closed_form(name: str, order: int) -> TruncatedSeries:
    """
    展开命名的闭形式到 z^order

    同名只保留算到的最高阶，低阶请求直接截断复用。
    """
    if name not in CLOSED_FORMS:
        raise InputError(f"未知的生成函数: {name}，可选 {sorted(CLOSED_FORMS)}")
    if order < 0:
        raise InputError(f"截断阶不能为负: {order}")
    cached = _cache.get(name)
    if cached is None or cached.order < order:
        logger.debug(f"展开生成函数 {name} 到 z^{order}")
        cached = CLOSED_FORMS[name](order)
        _cache[name] = cached
    return cached.truncate(order)


def extract(name: str, n: int) -> Polynomial:
    """
    n!·[z^n]；A 再除以 t，得到 S_n 的欧拉多项式

    Args:
        name: 生成函数名
        n: 下标（必须在真正群多项式的范围内）

    Returns:
        整系数多项式
    """
    if name not in CLOSED_FORMS:
        raise InputError(f"未知的生成函数: {name}，可选 {sorted(CLOSED_FORMS)}")
    minimum = GENUINE_MIN_INDEX[name]
    if n < minimum:
        raise DomainError(f"{name} 的第 {n} 项只是级数约定值，请使用 convention_values")
    value = closed_form(name, n).coefficient(n) * math.factorial(n)
    if name == "A":
        value = value.exact_div(_T)
    return value.to_integral()


def convention_values(name: str) -> Dict[int, Polynomial]:
    """级数在小下标处的约定值（A 给出的是原始系数 t·A_{n-1}）"""
    values = {
        "A": {0: Polynomial.one()},
        "BC": {0: Polynomial.one()},
        "D": {0: Polynomial.one(), 1: _T},
        "affA": {0: Polynomial.zero(), 1: Polynomial.one()},
        "affC": {0: Polynomial.one()},
        "affB": {0: Polynomial.constant(2), 1: _T * 2},
        "affD": {0: Polynomial.constant(2), 1: Polynomial.zero(), 2: _T * 4},
    }
    if name not in values:
        raise InputError(f"未知的生成函数: {name}")
    return dict(values[name])


def series_values(name: str, order: int) -> Dict[int, Polynomial]:
    """n!·[z^n]，n = 0..order（不去掉 A 的因子 t）"""
    series = closed_form(name, order)
    return {k: series.coefficient(k) * math.factorial(k) for k in range(order + 1)}
