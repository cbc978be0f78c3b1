# 精确一元多项式、γ-向量与Sturm实根判定

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy as sp

from .errors import ConsistencyError, DomainError, InputError, SymmetryError

Coefficient = Union[int, Fraction]

_T = sp.Symbol("t")


def _normalize(value) -> Coefficient:
    """把系数规整为 int 或 Fraction（分母为1时降为 int）"""
    if isinstance(value, bool):
        raise InputError(f"多项式系数不能是布尔值: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise InputError(f"多项式系数必须是精确数 (int/Fraction): {value!r}")


@dataclass(frozen=True)
class Polynomial:
    """
    t 的稠密一元多项式，系数为精确整数或有理数

    coefficients[k] 是 t^k 的系数；构造时去掉末尾的零，
    因此零多项式的系数元组为空。
    """
    coefficients: Tuple[Coefficient, ...] = ()

    def __post_init__(self):
        coeffs = [_normalize(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    # ==================== 构造 ====================

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Coefficient) -> "Polynomial":
        return cls((value,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Coefficient = 1) -> "Polynomial":
        if exponent < 0:
            raise InputError(f"指数不能为负: {exponent}")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def coerce(cls, value: Union["Polynomial", Coefficient]) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls.constant(value)

    # ==================== 基本属性 ====================

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> Union[int, float]:
        """次数；零多项式约定为 -inf"""
        if self.is_zero:
            return -math.inf
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> Coefficient:
        return self.coefficients[-1] if self.coefficients else 0

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coefficients)

    def coefficient(self, k: int) -> Coefficient:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def total(self) -> Coefficient:
        """系数之和，即 p(1)"""
        return sum(self.coefficients)

    # ==================== 运算 ====================

    def __add__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        other = Polynomial.coerce(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        if not isinstance(other, (Polynomial, int, Fraction)):
            return NotImplemented
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial(tuple(c * other for c in self.coefficients))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        result: List[Coefficient] = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                result[i + j] += a * b
        return Polynomial(tuple(result))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise InputError(f"指数不能为负: {exponent}")
        result = Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x):
        """Horner 求值"""
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def shift(self, k: int) -> "Polynomial":
        """乘以 t^k"""
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coefficients)

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coefficients) if k > 0))

    def reversed(self, m: int) -> "Polynomial":
        """t^m p(1/t)，要求 m >= degree"""
        if m < self.degree:
            raise InputError(f"中心 m={m} 小于次数 {self.degree}")
        return Polynomial(tuple(self.coefficient(m - k) for k in range(m + 1)))

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """
        有理系数带余除法

        Args:
            divisor: 非零除式

        Returns:
            (商, 余式)
        """
        if divisor.is_zero:
            raise DomainError("除以零多项式")
        remainder = [Fraction(c) for c in self.coefficients]
        lead = Fraction(divisor.leading_coefficient)
        dd = len(divisor.coefficients) - 1
        if len(remainder) - 1 < dd:
            return Polynomial.zero(), self
        quotient = [Fraction(0)] * (len(remainder) - dd)
        for k in range(len(remainder) - 1, dd - 1, -1):
            factor = remainder[k] / lead
            if factor == 0:
                continue
            quotient[k - dd] = factor
            for j, c in enumerate(divisor.coefficients):
                remainder[k - dd + j] -= factor * c
        return Polynomial(tuple(quotient)), Polynomial(tuple(remainder[:dd]))

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """整除，余式非零时报 ConsistencyError"""
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise ConsistencyError(f"{self} 不能被 {divisor} 整除，余式 {remainder}")
        return quotient

    def to_integral(self) -> "Polynomial":
        """断言系数全为整数"""
        if not self.is_integral:
            raise ConsistencyError(f"多项式含非整数系数: {self}")
        return self

    # ==================== sympy 转换 ====================

    def to_sympy(self) -> sp.Poly:
        coeffs = [sp.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sp.Integer(c)
                  for c in reversed(self.coefficients)] or [sp.Integer(0)]
        return sp.Poly(coeffs, _T, domain=sp.QQ)

    @classmethod
    def from_sympy(cls, poly: sp.Poly) -> "Polynomial":
        coeffs = []
        for c in reversed(poly.all_coeffs()):
            r = sp.Rational(c)
            coeffs.append(Fraction(int(r.p), int(r.q)))
        return cls(tuple(coeffs))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """QQ 上的首一最大公因式"""
        return Polynomial.from_sympy(self.to_sympy().gcd(other.to_sympy()))

    # ==================== 文本 ====================

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: List[str] = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            negative = c < 0
            magnitude = -c if negative else c
            if isinstance(magnitude, Fraction):
                number = f"({magnitude})"
            else:
                number = str(magnitude)
            if k == 0:
                body = number
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if magnitude == 1 else f"{number}{power}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


@dataclass(frozen=True)
class GammaVector:
    """对称多项式在基 t^i(1+t)^{m-2i} 下的坐标"""
    center: int
    entries: Tuple[int, ...]

    def reconstruct(self) -> Polynomial:
        """按 Σ γ_i t^i (1+t)^{m-2i} 还原多项式"""
        return polynomial_sum(gamma_basis(i, self.center) * gamma
                              for i, gamma in enumerate(self.entries) if gamma)


def gamma_basis(i: int, m: int) -> Polynomial:
    """t^i (1+t)^{m-2i}"""
    e = m - 2 * i
    if e < 0:
        raise InputError(f"γ基下标越界: i={i}, m={m}")
    return Polynomial(tuple([0] * i + [math.comb(e, k) for k in range(e + 1)]))


# ==================== 对称性与单峰性 ====================

def is_symmetric(p: Polynomial, m: int) -> bool:
    """
    判断 p 是否关于中心 m 对称，即 t^m p(1/t) = p

    Args:
        p: 多项式
        m: 对称中心（必须不小于次数）

    Returns:
        是否对称
    """
    if m < p.degree:
        raise InputError(f"对称中心 m={m} 小于次数 {p.degree}")
    return all(p.coefficient(k) == p.coefficient(m - k) for k in range(m + 1))


def gamma_extract(p: Polynomial, m: int) -> GammaVector:
    """
    提取 γ-向量

    逐次消去最低次项：基 t^i(1+t)^{m-2i} 的最低项是 t^i，系数为1，
    所以变换是单位三角的。
    """
    if not is_symmetric(p, m):
        raise SymmetryError(f"{p} 关于中心 {m} 不对称")
    remaining = p
    entries: List[int] = []
    for i in range(m // 2 + 1):
        gamma = remaining.coefficient(i)
        entries.append(gamma)
        if gamma:
            remaining = remaining - gamma_basis(i, m) * gamma
    if not remaining.is_zero:
        raise ConsistencyError(f"γ-展开后余项非零: {remaining}")
    return GammaVector(center=m, entries=tuple(entries))


def is_nonnegative(g: GammaVector) -> bool:
    return all(x >= 0 for x in g.entries)


def is_unimodal(p: Polynomial) -> bool:
    """系数序列先（弱）增后（弱）减"""
    coeffs = p.coefficients
    k = 0
    while k + 1 < len(coeffs) and coeffs[k] <= coeffs[k + 1]:
        k += 1
    while k + 1 < len(coeffs) and coeffs[k] >= coeffs[k + 1]:
        k += 1
    return k + 1 >= len(coeffs)


# ==================== Sturm 序列 ====================

def _sign(x) -> int:
    return bool(x > 0) - bool(x < 0)


def _sign_changes(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _distinct_real_roots(poly: sp.Poly) -> int:
    """对无平方部分用 Sturm 序列计数不同实根，在 ±∞ 处用首项系数符号"""
    squarefree = poly.sqf_part()
    if squarefree.degree() <= 0:
        return 0
    sequence = sp.sturm(squarefree)
    at_plus = [_sign(q.LC()) for q in sequence]
    at_minus = [_sign(q.LC()) * (-1) ** q.degree() for q in sequence]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def count_real_roots(p: Polynomial) -> int:
    """
    不同实根个数（精确 Sturm 序列）

    Args:
        p: 非零多项式

    Returns:
        不同实根的个数
    """
    if p.is_zero:
        raise DomainError("零多项式没有定义实根个数")
    return _distinct_real_roots(p.to_sympy())


def count_real_roots_with_multiplicity(p: Polynomial) -> int:
    """计重数的实根个数：对 gcd(p, p') 递归"""
    if p.is_zero:
        raise DomainError("零多项式没有定义实根个数")
    current = p
    total = 0
    while current.degree > 0:
        total += count_real_roots(current)
        current = current.gcd(current.derivative())
    return total


def is_real_rooted(p: Polynomial) -> bool:
    """全部根为实数（计重数的实根个数等于次数）"""
    return count_real_roots_with_multiplicity(p) == p.degree


def polynomial_sum(items: Iterable[Polynomial]) -> Polynomial:
    total = Polynomial.zero()
    for item in items:
        total = total + item
    return total
