# 恒等式、展开式与生成函数的精确验证

import time
from contextlib import contextmanager
from dataclasses import dataclass
from itertools import permutations
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from config.settings import get_settings
from parsers.data_loader import load_table1, load_worked_examples
from utils.logger import get_logger

from .diagram import affine_eulerian_formula, eulerian_formula, group_order
from .errors import DomainError, InputError, UnsupportedError
from .families import Family
from .flag import (
    FlagPolynomial,
    colors_of,
    dehn_sommerville_check,
    full_mask,
    iter_subsets,
    specialize,
    univariate,
)
from .groups import (
    brute_flag_eulerian,
    coxeter_rank,
    peak_stats,
    phi_half_weight,
    reverse_word,
    valley_count,
    window_length,
)
from .poly import (
    Polynomial,
    gamma_basis,
    gamma_extract,
    is_nonnegative,
    is_real_rooted,
    is_symmetric,
    is_unimodal,
)
from .series import GENUINE_MIN_INDEX, closed_form, convention_values, extract, series_values
from .torus import build, euler_characteristic, partition_certificate, total_cell_count

logger = get_logger(__name__)

Residual = Union[Polynomial, FlagPolynomial]


@dataclass
class CheckResult:
    """单项验证结果；失败时 residual 为 左边-右边"""
    name: str
    params: Dict[str, Any]
    ok: bool
    residual: Optional[Residual] = None
    elapsed_ms: float = 0.0
    informational: bool = False
    detail: str = ""


def _finish(name: str, params: Dict[str, Any], lhs: Residual, rhs: Residual, started: float,
            informational: bool = False, detail: str = "") -> CheckResult:
    residual = lhs - rhs
    ok = residual.is_zero
    elapsed = (time.perf_counter() - started) * 1000
    if not ok and not informational:
        logger.warning(f"{name} {params} 不成立，残差 {residual}")
    return CheckResult(name=name, params=params, ok=ok, residual=None if ok else residual,
                       elapsed_ms=round(elapsed, 3), informational=informational, detail=detail)


def _verdict(name: str, params: Dict[str, Any], failures: List[str], started: float,
             residual: Optional[Residual] = None) -> CheckResult:
    elapsed = (time.perf_counter() - started) * 1000
    if failures:
        logger.warning(f"{name} {params} 失败: {'; '.join(failures)}")
    return CheckResult(name=name, params=params, ok=not failures, residual=residual,
                       elapsed_ms=round(elapsed, 3), detail="; ".join(failures))


def _require(condition: bool, message: str):
    if not condition:
        raise DomainError(message)


def _permutations(n: int) -> Iterator[Tuple[int, ...]]:
    return permutations(range(1, n + 1))


# ==================== 枚举进程数 ====================

_jobs_override: Optional[int] = None


@contextmanager
def enumeration_jobs(jobs: Optional[int]):
    """在上下文内覆盖各项检查的枚举进程数；None 表示沿用当前值"""
    global _jobs_override
    previous = _jobs_override
    if jobs is not None:
        _jobs_override = jobs
    try:
        yield
    finally:
        _jobs_override = previous


def current_jobs() -> int:
    """当前枚举进程数：上下文覆盖值优先，否则读取配置"""
    return _jobs_override or get_settings().jobs


# ==================== 多项式来源 ====================

SERIES_NAMES = {
    (Family.A, False): "A",
    (Family.B, False): "BC",
    (Family.C, False): "BC",
    (Family.D, False): "D",
    (Family.A, True): "affA",
    (Family.B, True): "affB",
    (Family.C, True): "affC",
    (Family.D, True): "affD",
}

SERIES_FAMILIES = {
    "A": (Family.A, False),
    "BC": (Family.B, False),
    "D": (Family.D, False),
    "affA": (Family.A, True),
    "affB": (Family.B, True),
    "affC": (Family.C, True),
    "affD": (Family.D, True),
}

METHODS = ("auto", "enumerate", "diagram", "egf")


def enumerable(family, n: int) -> bool:
    """窗口长度 n 是否在枚举上限内"""
    return n <= get_settings().enum_limit(Family.parse(family))


def _resolve_rank(family: Family, rank: Optional[int]) -> int:
    if family.fixed_rank:
        if rank is not None and rank != family.fixed_rank:
            raise DomainError(f"{family.value} 的秩固定为 {family.fixed_rank}，收到 {rank}")
        return family.fixed_rank
    if rank is None:
        raise InputError(f"{family.value} 型需要指定秩")
    return rank


def flag_eulerian_polynomial(family, rank: Optional[int], affine: bool, method: str = "auto",
                             jobs: int = 1) -> FlagPolynomial:
    """
    多元（仿射）欧拉多项式

    Args:
        family: 族
        rank: Coxeter秩（A_r 对应 S_{r+1}）
        affine: 是否用仿射下降
        method: auto / enumerate / diagram
        jobs: 枚举进程数

    Returns:
        旗多项式
    """
    family = Family.parse(family)
    rank = _resolve_rank(family, rank)
    if method not in METHODS:
        raise InputError(f"未知的计算方法: {method}")
    if method == "egf":
        raise UnsupportedError("生成函数方法只给出一元多项式")
    if method == "auto":
        use_enumeration = family.is_classical and enumerable(family, window_length(family, rank))
        method = "enumerate" if use_enumeration else "diagram"
    if method == "enumerate":
        if not family.is_classical:
            raise UnsupportedError(f"{family.value} 型没有枚举模型")
        return brute_flag_eulerian(family, window_length(family, rank), affine, jobs)
    return affine_eulerian_formula(family, rank) if affine else eulerian_formula(family, rank)


def eulerian_polynomial(family, rank: Optional[int], affine: bool, method: str = "auto",
                        jobs: int = 1) -> Polynomial:
    """一元（仿射）欧拉多项式；egf 方法只支持经典族"""
    family = Family.parse(family)
    rank = _resolve_rank(family, rank)
    if method == "egf":
        if not family.is_classical:
            raise UnsupportedError(f"{family.value} 型没有生成函数")
        return extract(SERIES_NAMES[(family, affine)], window_length(family, rank))
    return univariate(flag_eulerian_polynomial(family, rank, affine, method, jobs))


def _ordinary(family, n: int) -> Polynomial:
    """窗口长度 n 的普通欧拉多项式"""
    return eulerian_polynomial(family, coxeter_rank(family, n), False, jobs=current_jobs())


def _affine(family, n: int) -> Polynomial:
    """窗口长度 n 的仿射欧拉多项式"""
    return eulerian_polynomial(family, coxeter_rank(family, n), True, jobs=current_jobs())


def _brute_flag(family, n: int, affine: bool) -> FlagPolynomial:
    return brute_flag_eulerian(family, n, affine, current_jobs())


# ==================== 多元展开式 ====================

def _power(n: int, colors: Tuple[int, ...], present: bool) -> FlagPolynomial:
    """(t_{c1}...t_{ck})^{χ}"""
    return FlagPolynomial.monomial(n, colors) if present else FlagPolynomial.one(n)


def _product(n: int, factors: List[FlagPolynomial]) -> FlagPolynomial:
    result = FlagPolynomial.one(n)
    for factor in factors:
        result = result * factor
    return result


def _c_factors(u: Tuple[int, ...]) -> List[FlagPolynomial]:
    """c_i(u) = t_i^{χ(u_{i-1}<u_i)} + t_{i+1}^{χ(u_i>u_{i+1})}，t_{n+1} 记作颜色 0"""
    n = len(u)
    s = (0,) + u + (0,)

    def color(i: int) -> int:
        return 0 if i == n + 1 else i

    return [_power(n, (color(i),), s[i - 1] < s[i]) + _power(n, (color(i + 1),), s[i] > s[i + 1])
            for i in range(1, n + 1)]


def _b_factors(u: Tuple[int, ...]) -> List[FlagPolynomial]:
    n = len(u)
    s = (0,) + u + (0,)
    factors = _c_factors(u)[: n - 2]
    factors.append(_power(n, (n - 1,), s[n - 2] < s[n - 1]) + _power(n, (0, n), s[n - 1] > s[n]))
    rise = s[n - 1] < s[n]
    factors.append(_power(n, (n,), rise) + _power(n, (0,), rise))
    return factors


def _d_factors(u: Tuple[int, ...]) -> List[FlagPolynomial]:
    n = len(u)
    factors = _b_factors(u)
    drop = u[0] > u[1]
    factors[0] = _power(n, (1,), drop) + _power(n, (2,), drop)
    factors[1] = _power(n, (1, 2), u[0] < u[1]) + _power(n, (3,), u[1] > u[2])
    return factors


def check_flag_formula_A(n: int) -> CheckResult:
    """
    Ã A_{n-1}(t_0..t_{n-1}) = Σ_j t_j A_{n-2}(t_{j+1},...,t_{j-2})（下标模 n）

    n 为对称群次数。
    """
    started = time.perf_counter()
    _require(n >= 2, f"A 型循环展开要求 n >= 2，收到 {n}")
    lhs = _brute_flag(Family.A, n, affine=True)
    base = _brute_flag(Family.A, n - 1, affine=False)
    rhs = FlagPolynomial.zero(n - 1)
    for j in range(n):
        mapping = {k: (j + k) % n for k in range(n - 1)}
        rhs = rhs + FlagPolynomial.variable(n - 1, j) * base.relabel(mapping, n=n - 1)
    return _finish("flag_formula_A", {"n": n}, lhs, rhs, started)


def check_flag_formula_C(n: int) -> CheckResult:
    """Ã C_n = Σ_{u∈S_n} Π c_i(u)"""
    started = time.perf_counter()
    _require(n >= 1, f"C 型展开要求 n >= 1，收到 {n}")
    lhs = _brute_flag(Family.C, n, affine=True)
    rhs = FlagPolynomial.zero(n)
    for u in _permutations(n):
        rhs = rhs + _product(n, _c_factors(u))
    return _finish("flag_formula_C", {"n": n}, lhs, rhs, started)


def check_flag_formula_B(n: int) -> CheckResult:
    """Ã B_n = Σ_{u∈S_n} Π b_i(u)"""
    started = time.perf_counter()
    _require(n >= 2, f"B 型展开要求 n >= 2，收到 {n}")
    lhs = _brute_flag(Family.B, n, affine=True)
    rhs = FlagPolynomial.zero(n)
    for u in _permutations(n):
        rhs = rhs + _product(n, _b_factors(u))
    return _finish("flag_formula_B", {"n": n}, lhs, rhs, started)


def check_flag_formula_D(n: int) -> CheckResult:
    """2·Ã D_n = Σ_{u∈S_n} Π d_i(u)"""
    started = time.perf_counter()
    _require(n >= 4, f"D 型展开要求 n >= 4，收到 {n}")
    lhs = _brute_flag(Family.D, n, affine=True) * 2
    rhs = FlagPolynomial.zero(n)
    for u in _permutations(n):
        rhs = rhs + _product(n, _d_factors(u))
    return _finish("flag_formula_D", {"n": n}, lhs, rhs, started)


# ==================== γ-展开 ====================

# which -> 最小 n
GAMMA_EXPANSIONS = {
    "affC": 1,
    "C": 1,
    "A": 1,
    "affB": 2,
    "affD": 4,
    "D": 3,
}


def _peak_sum(weights: Dict[int, int], center: int) -> Polynomial:
    """Σ_k weights[k]·(4t)^k (1+t)^{center-2k}"""
    total = Polynomial.zero()
    for k in sorted(weights):
        if weights[k]:
            total = total + gamma_basis(k, center) * (weights[k] * 4 ** k)
    return total


def check_gamma_expansion(which: str, n: int) -> CheckResult:
    """
    峰统计展开，φ 用整数半权（两边同乘 2 的幂）

    affC: 2·Ã C_n = Σ (4t)^xpe (1+t)^{n+1-2xpe}
    C:    C_n = Σ (4t)^lpe (1+t)^{n-2lpe}
    A:    2^{n-1} A_{n-1} = Σ (4t)^pk (1+t)^{n-1-2pk}（S_n）
    affB: 2·Ã B_n = Σ 2φ(u)·(4t)^xpe ...
    affD: 4·Ã D_n = Σ 2φ(u)·2φ(rev u)·(4t)^xpe ...
    D:    2·D_n = Σ 2φ(rev u)·(4t)^lpe ...；n = 3 只记录不断言
    """
    started = time.perf_counter()
    if which not in GAMMA_EXPANSIONS:
        raise InputError(f"未知的γ-展开: {which}")
    _require(n >= GAMMA_EXPANSIONS[which], f"{which} 的γ-展开要求 n >= {GAMMA_EXPANSIONS[which]}，收到 {n}")

    weights: Dict[int, int] = {}
    for u in _permutations(n):
        pk, lpe, xpe = peak_stats(u)
        if which == "affC":
            key, weight = xpe, 1
        elif which == "C":
            key, weight = lpe, 1
        elif which == "A":
            key, weight = pk, 1
        elif which == "affB":
            key, weight = xpe, phi_half_weight(u)
        elif which == "affD":
            key, weight = xpe, phi_half_weight(u) * phi_half_weight(reverse_word(u))
        else:
            key, weight = lpe, phi_half_weight(reverse_word(u))
        weights[key] = weights.get(key, 0) + weight

    if which == "affC":
        lhs, center = _affine(Family.C, n) * 2, n + 1
    elif which == "C":
        lhs, center = _ordinary(Family.C, n), n
    elif which == "A":
        lhs, center = _ordinary(Family.A, n) * 2 ** (n - 1), n - 1
    elif which == "affB":
        lhs, center = _affine(Family.B, n) * 2, n + 1
    elif which == "affD":
        lhs, center = _affine(Family.D, n) * 4, n + 1
    else:
        lhs, center = _ordinary(Family.D, n) * 2, n

    informational = which == "D" and n == 3
    return _finish("gamma_expansion", {"which": which, "n": n}, lhs, _peak_sum(weights, center),
                   started, informational=informational)


def check_valley_lemma(n: int) -> CheckResult:
    """每个 u 恰有 xpe(u)-1 个谷，且 xpe(u)-1 = pk(v)，v_i = n+1-u_i"""
    started = time.perf_counter()
    _require(n >= 1, f"要求 n >= 1，收到 {n}")
    failures = []
    for u in _permutations(n):
        xpe = peak_stats(u)[2]
        v = tuple(n + 1 - x for x in u)
        if valley_count(u) != xpe - 1 or peak_stats(v)[0] != xpe - 1:
            failures.append(f"u={u}")
    return _verdict("valley_lemma", {"n": n}, failures[:5], started)


def check_phi_pairing(n: int) -> CheckResult:
    """
    交换 u_{n-1}, u_n 给出 {φ=1} 与 {φ=0} 间的双射，
    且保持截尾词 u_1..u_{n-1} 的 lpe；φ ≠ 1 时 xpe(u) = lpe(截尾) + 1
    """
    started = time.perf_counter()
    _require(n >= 3, f"φ 配对要求 n >= 3，收到 {n}")
    failures = []
    ones = zeros = 0
    for u in _permutations(n):
        weight = phi_half_weight(u)
        trimmed_lpe = peak_stats(u[:-1])[1]
        if weight == 2:
            ones += 1
            partner = u[:-2] + (u[-1], u[-2])
            if phi_half_weight(partner) != 0 or peak_stats(partner[:-1])[1] != trimmed_lpe:
                failures.append(f"u={u}")
        elif weight == 0:
            zeros += 1
        if weight != 2 and peak_stats(u)[2] != trimmed_lpe + 1:
            failures.append(f"xpe u={u}")
    if ones != zeros:
        failures.append(f"|φ=1| = {ones} != |φ=0| = {zeros}")
    return _verdict("phi_pairing", {"n": n}, failures[:5], started)


# ==================== 恒等式 ====================

IDENTITY_MIN_RANK = {"CBC": 2, "BDD": 3, "BDA": 2}


def check_identity(which: str, n: int) -> CheckResult:
    """
    CBC: 2Ã C_n = Ã B_n + 2nt·C_{n-1}
    BDD: Ã B_n = Ã D_n + 2nt·D_{n-1}
    BDA: B_n = D_n + n·2^{n-1}·t·A_{n-2}（A_{n-2} 为 S_{n-1} 的欧拉多项式）
    """
    started = time.perf_counter()
    if which not in IDENTITY_MIN_RANK:
        raise InputError(f"未知的恒等式: {which}")
    _require(n >= IDENTITY_MIN_RANK[which], f"{which} 要求 n >= {IDENTITY_MIN_RANK[which]}，收到 {n}")
    t = Polynomial.t()
    if which == "CBC":
        lhs = _affine(Family.C, n) * 2
        rhs = _affine(Family.B, n) + t * _ordinary(Family.C, n - 1) * (2 * n)
    elif which == "BDD":
        lhs = _affine(Family.B, n)
        rhs = _affine(Family.D, n) + t * _ordinary(Family.D, n - 1) * (2 * n)
    else:
        lhs = _ordinary(Family.B, n)
        rhs = _ordinary(Family.D, n) + t * _ordinary(Family.A, n - 1) * (n * 2 ** (n - 1))
    return _finish("identity", {"which": which, "n": n}, lhs, rhs, started)


def check_cyclic(which: str, n: int) -> CheckResult:
    """
    A: Ã A_n = (n+1)t·A_{n-1}（Coxeter秩 n，即 S_{n+1} 对 S_n）
    C: Ã C_n = 2^n t·A_{n-1}
    """
    started = time.perf_counter()
    _require(n >= 1, f"要求 n >= 1，收到 {n}")
    t = Polynomial.t()
    if which == "A":
        lhs = _affine(Family.A, n + 1)
        rhs = t * _ordinary(Family.A, n) * (n + 1)
    elif which == "C":
        lhs = _affine(Family.C, n)
        rhs = t * _ordinary(Family.A, n) * 2 ** n
    else:
        raise InputError(f"未知的循环恒等式: {which}")
    return _finish("cyclic", {"which": which, "n": n}, lhs, rhs, started)


# ==================== 生成函数 ====================

def _reference(name: str, n: int) -> Polynomial:
    """生成函数第 n 项的独立参照值：可枚举时用枚举，否则用图公式"""
    family, affine = SERIES_FAMILIES[name]
    return (_affine if affine else _ordinary)(family, n)


def check_egf(name: str, n_max: int) -> CheckResult:
    """对 n ≤ n_max 逐项比较 n!·[z^n] 与枚举/图公式"""
    started = time.perf_counter()
    if name not in SERIES_FAMILIES:
        raise InputError(f"未知的生成函数: {name}")
    minimum = GENUINE_MIN_INDEX[name]
    closed_form(name, n_max)
    for n in range(minimum, n_max + 1):
        lhs, rhs = extract(name, n), _reference(name, n)
        if lhs != rhs:
            return _finish("egf", {"name": name, "n_max": n_max}, lhs, rhs, started, detail=f"n={n}")
    empty = Polynomial.zero()
    return _finish("egf", {"name": name, "n_max": n_max}, empty, empty, started)


def check_series_conventions(name: str) -> CheckResult:
    """真正群多项式之前的小下标系数等于约定值"""
    started = time.perf_counter()
    if name not in SERIES_FAMILIES:
        raise InputError(f"未知的生成函数: {name}")
    conventions = convention_values(name)
    values = series_values(name, max(conventions))
    failures = [f"n={k}: {values[k]} != {expected}"
                for k, expected in sorted(conventions.items()) if values[k] != expected]
    return _verdict("series_conventions", {"name": name}, failures, started)


# 级数层面的恒等式：左边 - 右边
def _series_identity(which: str, order: int):
    A = closed_form("A", order)
    BC = closed_form("BC", order)
    D = closed_form("D", order)
    t = Polynomial.t()
    if which == "BDA":
        return BC - D - A.scale(2).shift(1)
    if which == "CBC":
        return closed_form("affC", order) * 2 - closed_form("affB", order) - (BC * (t * 2)).shift(1)
    if which == "BDD":
        return closed_form("affB", order) - closed_form("affD", order) - (D * (t * 2)).shift(1)
    if which == "cycA":
        return closed_form("affA", order) - A.shift(1)
    if which == "cycC":
        return closed_form("affC", order) - A.scale(2)
    raise InputError(f"未知的级数恒等式: {which}")


SERIES_IDENTITIES = ("BDA", "CBC", "BDD", "cycA", "cycC")


def check_series_identities(which: str, order: int) -> CheckResult:
    """
    B = D + z·A(t,2z)，2Ã C = Ã B + 2tz·C，Ã B = Ã D + 2tz·D，
    Ã A = z·A，Ã C = A(t,2z)，逐项比较到 z^order
    """
    started = time.perf_counter()
    difference = _series_identity(which, order)
    for k, coefficient in enumerate(difference.coefficients):
        if not coefficient.is_zero:
            return _finish("series_identity", {"which": which, "order": order}, coefficient,
                           Polynomial.zero(), started, detail=f"z^{k}")
    empty = Polynomial.zero()
    return _finish("series_identity", {"which": which, "order": order}, empty, empty, started)


# ==================== 实根与γ非负 ====================

REALROOTED_NAMES = ("affB", "affD", "D", "A")


def check_realrooted(which: str, n_max: int, order: Optional[int] = None) -> CheckResult:
    """
    对 n ≤ n_max 用 Sturm 序列判定实根性，列出失败的 n

    Args:
        which: 生成函数名
        n_max: 最大下标
        order: 级数截断阶，默认等于 n_max；必须不小于 n_max
    """
    started = time.perf_counter()
    if which not in SERIES_FAMILIES:
        raise InputError(f"未知的生成函数: {which}")
    order = n_max if order is None else order
    _require(n_max <= order, f"截断阶 {order} 小于 n_max {n_max}")
    closed_form(which, order)
    failures = [f"n={n}" for n in range(GENUINE_MIN_INDEX[which], n_max + 1)
                if not is_real_rooted(extract(which, n))]
    return _verdict("realrooted", {"which": which, "n_max": n_max, "order": order}, failures, started)


def _symmetry_center(name: str, n: int) -> int:
    if name in ("affA", "A"):
        # S_n：仿射为秩 n-1 的中心 n，普通为 n-1
        return n if name == "affA" else n - 1
    return n + 1 if name.startswith("aff") else n


def _gamma_failures(p: Polynomial, center: int) -> List[str]:
    if not is_symmetric(p, center):
        return [f"关于中心 {center} 不对称"]
    failures = []
    gamma = gamma_extract(p, center)
    if not is_nonnegative(gamma):
        failures.append(f"γ = {gamma.entries} 含负项")
    if not is_unimodal(p):
        failures.append("系数不单峰")
    return failures


def check_gamma_nonnegative(name: str, n: int) -> CheckResult:
    """生成函数提取的多项式：对称、γ 非负、单峰"""
    started = time.perf_counter()
    p = extract(name, n)
    return _verdict("gamma_nonnegative", {"name": name, "n": n},
                    _gamma_failures(p, _symmetry_center(name, n)), started)


def check_exceptional_gamma(family) -> CheckResult:
    """例外型：图公式给出的 Ã W 对称、γ 非负、单峰"""
    started = time.perf_counter()
    family = Family.parse(family)
    p = univariate(affine_eulerian_formula(family))
    return _verdict("exceptional_gamma", {"family": family.value},
                    _gamma_failures(p, family.fixed_rank + 1), started)


# ==================== 两条计算路径与环面 ====================

def check_two_path(family, n: int) -> CheckResult:
    """图公式 = 枚举（多元，Coxeter秩 n）"""
    started = time.perf_counter()
    family = Family.parse(family)
    lhs = affine_eulerian_formula(family, n)
    rhs = _brute_flag(family, window_length(family, n), affine=True)
    return _finish("two_path", {"family": family.value, "n": n}, lhs, rhs, started)


def check_table1_row(family, rank: int) -> CheckResult:
    """对照表的一行：图公式的一元特化与期望值比较"""
    started = time.perf_counter()
    family = Family.parse(family)
    rows = [row for row in load_table1() if Family.parse(row.family) is family and row.rank == rank]
    if not rows:
        raise InputError(f"对照表中没有 {family.value}{rank}")
    lhs = univariate(affine_eulerian_formula(family, rank))
    return _finish("table1", {"family": family.value, "rank": rank}, lhs, rows[0].expected, started)


def check_egf_table1_row(family, rank: int) -> CheckResult:
    """B、D 行：生成函数提取值与对照表比较"""
    started = time.perf_counter()
    family = Family.parse(family)
    if family not in (Family.B, Family.D):
        raise UnsupportedError(f"{family.value} 型的对照表行没有生成函数")
    rows = [row for row in load_table1() if Family.parse(row.family) is family and row.rank == rank]
    if not rows:
        raise InputError(f"对照表中没有 {family.value}{rank}")
    lhs = extract(SERIES_NAMES[(family, True)], rank)
    return _finish("egf_table1", {"family": family.value, "rank": rank}, lhs, rows[0].expected, started)


def check_torus(family, n: Optional[int] = None) -> CheckResult:
    """χ = 0、h_J = h_{J^c}，经典族另验 flag_h = 枚举"""
    started = time.perf_counter()
    family = Family.parse(family)
    model = build(family, n)
    failures = []
    chi = euler_characteristic(model)
    if chi != 0:
        failures.append(f"χ = {chi}")
    if not dehn_sommerville_check(model.flag_h):
        failures.append("h_J != h_{J^c}")
    residual = None
    if family.is_classical:
        brute = _brute_flag(family, window_length(family, model.rank), affine=True)
        if model.flag_h != brute:
            residual = model.flag_h - brute
            failures.append("flag_h 与枚举不一致")
    return _verdict("torus", {"family": family.value, "n": model.rank}, failures, started, residual)


def check_partition(family, n: int) -> CheckResult:
    """划分的计数验证"""
    started = time.perf_counter()
    family = Family.parse(family)
    ok = partition_certificate(family, n, jobs=current_jobs())
    return _verdict("partition", {"family": family.value, "n": n},
                    [] if ok else ["计数不一致"], started)


def check_flag_f_enumeration(family, n: int) -> CheckResult:
    """f_J = |{w : D̃(w) ⊆ J}|"""
    started = time.perf_counter()
    family = Family.parse(family)
    model = build(family, n)
    counts = _brute_flag(family, window_length(family, n), affine=True).coefficients
    expected = {}
    for mask in iter_subsets(n):
        expected[mask] = sum(value for descent, value in counts.items() if not descent & ~mask)
    rhs = FlagPolynomial(n, expected)
    return _finish("flag_f_enumeration", {"family": family.value, "n": n}, model.flag_f, rhs, started)


def check_total_cells(family, n: Optional[int] = None) -> CheckResult:
    """
    Σ_J f_J = Σ_w 2^{(n+1) - d̃(w)}，且 f_{[0,n]} = |W|

    经典族按枚举的下降集计数，例外型用图公式的一元系数 a_k 计算 Σ_k a_k·2^{n+1-k}。
    """
    started = time.perf_counter()
    family = Family.parse(family)
    model = build(family, n)
    rank = model.rank
    if family.is_classical:
        counts = _brute_flag(family, window_length(family, rank), affine=True).coefficients
        expected = sum(value * 2 ** (rank + 1 - len(colors_of(mask))) for mask, value in counts.items())
    else:
        weights = univariate(affine_eulerian_formula(family)).coefficients
        expected = sum(a * 2 ** (rank + 1 - k) for k, a in enumerate(weights))
    top = model.flag_f.coefficient(full_mask(rank))
    order = group_order(family, rank)
    detail = "" if top == order else f"f_[0,n] = {top} != |W| = {order}"
    total = total_cell_count(model)
    result = _finish("total_cells", {"family": family.value, "n": rank},
                     Polynomial.constant(total), Polynomial.constant(expected), started, detail=detail)
    if detail:
        logger.warning(f"total_cells {family.value}{rank}: {detail}")
        result.ok = False
    return result


def check_worked_example(family, rank: int, reduced: bool = True) -> CheckResult:
    """环面模型与数据文件中手算的旗 f/h-向量比较"""
    started = time.perf_counter()
    family = Family.parse(family)
    matches = [example for example in load_worked_examples()
               if Family.parse(example.family) is family and example.rank == rank and example.reduced == reduced]
    if not matches:
        raise InputError(f"没有 {family.value}{rank}（reduced={reduced}）的手算数据")
    example = matches[0]
    model = build(family, rank, reduced=reduced)
    params = {"family": family.value, "n": rank, "reduced": reduced}
    if model.flag_f != example.flag_f:
        return _finish("worked_example", params, model.flag_f, example.flag_f, started, detail="flag_f")
    detail = "" if model.flag_h == example.flag_h else "flag_h"
    return _finish("worked_example", params, model.flag_h, example.flag_h, started, detail=detail)


def check_specializations(n: int) -> CheckResult:
    """
    C_n = Ã C_n(1,t,...,t)，2^n A_{n-1} = Ã C_n(1,t,...,t,1)，
    B_n = Ã B_n(1,t,...,t)（n ≥ 2），D_n = Ã D_n(1,t,...,t)（n ≥ 3）
    """
    started = time.perf_counter()
    _require(n >= 1, f"要求 n >= 1，收到 {n}")
    failures = []

    def t_except(fixed: Tuple[int, ...]) -> Dict[int, Any]:
        return {j: 1 if j in fixed else "t" for j in range(n + 1)}

    c_flag = _brute_flag(Family.C, n, affine=True)
    if specialize(c_flag, t_except((0,))) != _ordinary(Family.C, n):
        failures.append("C_n")
    if n >= 2 and specialize(c_flag, t_except((0, n))) != _ordinary(Family.A, n) * 2 ** n:
        failures.append("2^n A_{n-1}")
    if n >= 2 and specialize(_brute_flag(Family.B, n, affine=True), t_except((0,))) != _ordinary(Family.B, n):
        failures.append("B_n")
    if n >= 3 and specialize(_brute_flag(Family.D, n, affine=True), t_except((0,))) != _ordinary(Family.D, n):
        failures.append("D_n")
    return _verdict("specializations", {"n": n}, failures, started)


def check_b2_c2() -> CheckResult:
    """Ã B_2 与 Ã C_2：一元相等，多元在交换颜色 1、2 后相等"""
    started = time.perf_counter()
    b2 = _brute_flag(Family.B, 2, affine=True)
    c2 = _brute_flag(Family.C, 2, affine=True)
    failures = []
    if univariate(b2) != univariate(c2):
        failures.append("一元多项式不同")
    residual = b2 - c2.relabel({0: 0, 1: 2, 2: 1})
    if not residual.is_zero:
        failures.append("交换颜色 1、2 后多元多项式不同")
    return _verdict("b2_c2", {}, failures, started, None if residual.is_zero else residual)
