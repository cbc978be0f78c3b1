# 旗多项式（以颜色子集为下标的多重线性多项式）

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from .errors import ConsistencyError, InputError
from .poly import Polynomial


def mask_of(subset: Iterable[int]) -> int:
    """颜色集合 -> 位掩码（第 j 位对应颜色 j）"""
    mask = 0
    for j in subset:
        if j < 0:
            raise InputError(f"颜色不能为负: {j}")
        mask |= 1 << j
    return mask


def colors_of(mask: int) -> Tuple[int, ...]:
    """位掩码 -> 升序颜色元组"""
    colors = []
    j = 0
    while mask:
        if mask & 1:
            colors.append(j)
        mask >>= 1
        j += 1
    return tuple(colors)


def subset_order_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """子集排序键：先按基数，再按字典序"""
    colors = colors_of(mask)
    return len(colors), colors


def iter_subsets(n: int) -> Iterator[int]:
    """按基数再字典序遍历 [0,n] 的全部子集"""
    universe = range(n + 1)
    for size in range(n + 2):
        for combo in combinations(universe, size):
            yield mask_of(combo)


def full_mask(n: int) -> int:
    return (1 << (n + 1)) - 1


@dataclass
class FlagPolynomial:
    """
    颜色集 [0,n] 上的旗多项式

    coefficients 把子集掩码映射到精确整数系数，缺省为0；
    不保存零系数。
    """
    n: int
    coefficients: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"颜色参数 n 不能为负: {self.n}")
        limit = full_mask(self.n)
        cleaned: Dict[int, int] = {}
        for mask, value in self.coefficients.items():
            if mask & ~limit:
                raise InputError(f"子集 {colors_of(mask)} 超出颜色集 [0,{self.n}]")
            if value:
                cleaned[mask] = value
        self.coefficients = cleaned

    # ==================== 构造 ====================

    @classmethod
    def zero(cls, n: int) -> "FlagPolynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "FlagPolynomial":
        return cls(n, {0: 1})

    @classmethod
    def monomial(cls, n: int, subset: Iterable[int], coefficient: int = 1) -> "FlagPolynomial":
        return cls(n, {mask_of(subset): coefficient})

    @classmethod
    def variable(cls, n: int, color: int) -> "FlagPolynomial":
        return cls(n, {1 << color: 1})

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Tuple[Iterable[int], int]]) -> "FlagPolynomial":
        """由 (子集, 系数) 序列构造，重复子集累加"""
        coefficients: Dict[int, int] = {}
        for subset, value in terms:
            mask = mask_of(subset)
            coefficients[mask] = coefficients.get(mask, 0) + value
        return cls(n, coefficients)

    # ==================== 访问 ====================

    def coefficient(self, subset: Union[int, Iterable[int]]) -> int:
        mask = subset if isinstance(subset, int) else mask_of(subset)
        return self.coefficients.get(mask, 0)

    def terms(self) -> List[Tuple[Tuple[int, ...], int]]:
        """按固定子集顺序列出非零项"""
        return [(colors_of(mask), self.coefficients[mask])
                for mask in sorted(self.coefficients, key=subset_order_key)]

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def total(self) -> int:
        """全部变量取1时的值"""
        return sum(self.coefficients.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, FlagPolynomial):
            return NotImplemented
        return self.n == other.n and self.coefficients == other.coefficients

    # ==================== 运算 ====================

    def _check_same_n(self, other: "FlagPolynomial"):
        if self.n != other.n:
            raise InputError(f"颜色集不一致: n={self.n} 与 n={other.n}")

    def __add__(self, other: "FlagPolynomial") -> "FlagPolynomial":
        if not isinstance(other, FlagPolynomial):
            return NotImplemented
        self._check_same_n(other)
        result = dict(self.coefficients)
        for mask, value in other.coefficients.items():
            result[mask] = result.get(mask, 0) + value
        return FlagPolynomial(self.n, result)

    def __neg__(self) -> "FlagPolynomial":
        return FlagPolynomial(self.n, {m: -v for m, v in self.coefficients.items()})

    def __sub__(self, other: "FlagPolynomial") -> "FlagPolynomial":
        if not isinstance(other, FlagPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "FlagPolynomial":
        """
        乘法

        与整数相乘为数乘；两个旗多项式相乘时，每对单项式的支撑必须不相交，
        以保证结果仍是多重线性的。
        """
        if isinstance(other, int) and not isinstance(other, bool):
            return FlagPolynomial(self.n, {m: v * other for m, v in self.coefficients.items()})
        if not isinstance(other, FlagPolynomial):
            return NotImplemented
        self._check_same_n(other)
        result: Dict[int, int] = {}
        for a, x in self.coefficients.items():
            for b, y in other.coefficients.items():
                if a & b:
                    raise ConsistencyError(
                        f"单项式 {colors_of(a)} 与 {colors_of(b)} 支撑相交，乘积不是多重线性的"
                    )
                result[a | b] = result.get(a | b, 0) + x * y
        return FlagPolynomial(self.n, result)

    __rmul__ = __mul__

    def relabel(self, mapping: Mapping[int, int], n: int = None) -> "FlagPolynomial":
        """
        变量重命名 t_j -> t_{mapping[j]}

        Args:
            mapping: 颜色映射（必须对出现的颜色有定义且单射）
            n: 目标颜色参数（默认不变）

        Returns:
            重命名后的旗多项式
        """
        target = self.n if n is None else n
        result: Dict[int, int] = {}
        for mask, value in self.coefficients.items():
            image = 0
            for j in colors_of(mask):
                if j not in mapping:
                    raise InputError(f"重命名缺少颜色 {j}")
                bit = 1 << mapping[j]
                if image & bit:
                    raise InputError(f"重命名不是单射: 颜色 {mapping[j]} 重复")
                image |= bit
            result[image] = result.get(image, 0) + value
        return FlagPolynomial(target, result)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: List[str] = []
        for colors, value in self.terms():
            magnitude = abs(value)
            body = "".join(f"t_{j}" for j in colors)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}{body}"
            if not parts:
                parts.append(f"-{text}" if value < 0 else text)
            else:
                parts.append(f"- {text}" if value < 0 else f"+ {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"FlagPolynomial(n={self.n}, {self})"


# ==================== f <-> h 变换 ====================

def _dense(p: FlagPolynomial) -> List[int]:
    values = [0] * (full_mask(p.n) + 1)
    for mask, value in p.coefficients.items():
        values[mask] = value
    return values


def _sparse(n: int, values: List[int]) -> FlagPolynomial:
    return FlagPolynomial(n, {mask: v for mask, v in enumerate(values) if v})


def f_to_h(f: FlagPolynomial) -> FlagPolynomial:
    """
    旗 f-向量 -> 旗 h-向量

    h_J = Σ_{I⊆J} (-1)^{|J∖I|} f_I，逐位做 Möbius 变换。
    """
    values = _dense(f)
    for bit in range(f.n + 1):
        step = 1 << bit
        for mask in range(len(values)):
            if mask & step:
                values[mask] -= values[mask ^ step]
    return _sparse(f.n, values)


def h_to_f(h: FlagPolynomial) -> FlagPolynomial:
    """旗 h-向量 -> 旗 f-向量：f_J = Σ_{I⊆J} h_I"""
    values = _dense(h)
    for bit in range(h.n + 1):
        step = 1 << bit
        for mask in range(len(values)):
            if mask & step:
                values[mask] += values[mask ^ step]
    return _sparse(h.n, values)


# ==================== 特化 ====================

AssignmentValue = Union[str, int, Polynomial]


def _assignment_polynomial(value: AssignmentValue) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, str):
        if value.strip() == "t":
            return Polynomial.t()
        if value.strip() == "1":
            return Polynomial.one()
        raise InputError(f"无法识别的特化值: {value!r}")
    if isinstance(value, int) and not isinstance(value, bool):
        return Polynomial.constant(value)
    raise InputError(f"无法识别的特化值: {value!r}")


def specialize(p: FlagPolynomial, assignment: Mapping[int, AssignmentValue]) -> Polynomial:
    """
    把每个 t_j 代换为 assignment[j]（"t"、1 或任意一元多项式）

    Args:
        p: 旗多项式
        assignment: 必须覆盖 [0,n] 的全部颜色

    Returns:
        一元多项式
    """
    missing = [j for j in range(p.n + 1) if j not in assignment]
    if missing:
        raise InputError(f"特化缺少颜色: {missing}")
    images = {j: _assignment_polynomial(assignment[j]) for j in range(p.n + 1)}

    total = Polynomial.zero()
    for mask, value in p.coefficients.items():
        term = Polynomial.constant(value)
        for j in colors_of(mask):
            term = term * images[j]
        total = total + term
    return total


def all_t(n: int) -> Dict[int, str]:
    """全部颜色代换为 t"""
    return {j: "t" for j in range(n + 1)}


def univariate(p: FlagPolynomial) -> Polynomial:
    """全 t 特化的快捷方式：按子集大小累加系数"""
    coeffs = [0] * (p.n + 2)
    for mask, value in p.coefficients.items():
        coeffs[bin(mask).count("1")] += value
    return Polynomial(tuple(coeffs))


def dehn_sommerville_check(h: FlagPolynomial) -> bool:
    """广义 Dehn-Sommerville 对称性 h_J = h_{J^c}"""
    full = full_mask(h.n)
    return all(h.coefficient(mask) == h.coefficient(full ^ mask) for mask in range(full + 1))
