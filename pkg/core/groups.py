# 经典Weyl群的带符号置换模型与下降统计

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import FrozenSet, Iterator, Sequence, Tuple

from utils.logger import get_logger

from .errors import DomainError, InputError, UnsupportedError
from .families import Family
from .flag import FlagPolynomial, colors_of, mask_of, univariate
from .poly import Polynomial

logger = get_logger(__name__)

# 秩的下限：A 按对称群次数 n 计（S_n，即 A_{n-1}），B/C/D 按 n 计
ORDINARY_MIN_RANK = {Family.A: 1, Family.B: 1, Family.C: 1, Family.D: 2}
AFFINE_MIN_RANK = {Family.A: 2, Family.B: 2, Family.C: 1, Family.D: 3}


def _classical(family) -> Family:
    family = Family.parse(family)
    if not family.is_classical:
        raise UnsupportedError(f"{family.value} 型没有带符号置换模型，请使用图公式")
    return family


def window_length(family, rank: int) -> int:
    """Coxeter秩 -> 窗口长度（A_r 是 S_{r+1}）"""
    return rank + 1 if _classical(family) is Family.A else rank


def coxeter_rank(family, n: int) -> int:
    """
    窗口长度 -> Coxeter秩，也是旗多项式的颜色参数

    A 型的 S_n 对应颜色 [0,n-1]；B/C/D 对应 [0,n]。
    """
    return n - 1 if _classical(family) is Family.A else n


def check_rank(family, n: int, affine: bool) -> Family:
    """校验秩不低于族的下限"""
    family = _classical(family)
    minimum = (AFFINE_MIN_RANK if affine else ORDINARY_MIN_RANK)[family]
    if n < minimum:
        kind = "仿射" if affine else "普通"
        raise DomainError(f"{family.value} 型{kind}下降统计要求 n >= {minimum}，收到 n={n}")
    return family


@dataclass(frozen=True)
class GroupElement:
    """一行记法的带符号置换窗口 w_1..w_n"""
    family: Family
    window: Tuple[int, ...]

    def __post_init__(self):
        family = _classical(self.family)
        object.__setattr__(self, "family", family)
        window = tuple(self.window)
        object.__setattr__(self, "window", window)

        n = len(window)
        if n == 0:
            raise InputError("窗口不能为空")
        if sorted(abs(v) for v in window) != list(range(1, n + 1)):
            raise InputError(f"|w_i| 不是 [{n}] 的排列: {window}")
        negatives = sum(1 for v in window if v < 0)
        if family is Family.A and negatives:
            raise InputError(f"A 型窗口必须全为正: {window}")
        if family is Family.D and negatives % 2:
            raise InputError(f"D 型窗口必须有偶数个负项: {window}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.window)


@dataclass(frozen=True)
class DescentSet:
    """下降集（颜色下标集合及其位掩码）"""
    indices: FrozenSet[int]

    @classmethod
    def from_mask(cls, mask: int) -> "DescentSet":
        return cls(frozenset(colors_of(mask)))

    @property
    def mask(self) -> int:
        return mask_of(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.indices

    def sorted(self) -> Tuple[int, ...]:
        return tuple(sorted(self.indices))


# ==================== 枚举 ====================

def _windows(family: Family, n: int, first: int = 0) -> Iterator[Tuple[int, ...]]:
    """
    按固定顺序产生窗口：先按底层排列字典序，再把符号向量当二进制计数器

    first 非零时只产生 |w_1| = first 的部分，供并行分块使用。
    """
    if first:
        rest = [v for v in range(1, n + 1) if v != first]
        perms = ((first,) + tail for tail in permutations(rest))
    else:
        perms = permutations(range(1, n + 1))

    if family is Family.A:
        yield from perms
        return

    sign_masks = [s for s in range(1 << n)
                  if family is not Family.D or bin(s).count("1") % 2 == 0]
    for perm in perms:
        for signs in sign_masks:
            yield tuple(-v if (signs >> i) & 1 else v for i, v in enumerate(perm))


def enumerate_elements(family, n: int) -> Iterator[GroupElement]:
    """
    逐个产生群元素，每个恰好一次

    Args:
        family: A（n 为对称群次数）、B、C 或 D
        n: 秩参数，至少为1

    Returns:
        GroupElement 迭代器
    """
    family = _classical(family)
    if n < 1:
        raise DomainError(f"枚举要求 n >= 1，收到 n={n}")
    for window in _windows(family, n):
        yield GroupElement(family, window)


def group_size(family, n: int) -> int:
    """带符号置换模型的元素个数"""
    family = _classical(family)
    if family is Family.A:
        return math.factorial(n)
    if family is Family.D:
        return 2 ** (n - 1) * math.factorial(n)
    return 2 ** n * math.factorial(n)


# ==================== 下降集 ====================

def _ordinary_mask(family: Family, w: Sequence[int]) -> int:
    n = len(w)
    mask = 0
    if family is Family.A:
        for i in range(1, n):
            if w[i - 1] > w[i]:
                mask |= 1 << i
    elif family is Family.D:
        for i in range(2, n + 1):
            if w[i - 2] > w[i - 1]:
                mask |= 1 << i
        if w[0] + w[1] < 0:
            mask |= 2
    else:
        previous = 0
        for i in range(1, n + 1):
            if previous > w[i - 1]:
                mask |= 1 << i
            previous = w[i - 1]
    return mask


def _affine_mask(family: Family, w: Sequence[int]) -> int:
    mask = _ordinary_mask(family, w)
    if family is Family.A:
        zero = w[-1] > w[0]
    elif family is Family.C:
        zero = w[-1] > 0
    else:
        zero = w[-2] + w[-1] > 0
    return mask | 1 if zero else mask


def descent_set(w: GroupElement) -> DescentSet:
    """普通下降集"""
    check_rank(w.family, w.n, affine=False)
    return DescentSet.from_mask(_ordinary_mask(w.family, w.window))


def affine_descent_set(w: GroupElement) -> DescentSet:
    """仿射下降集（在普通下降集上加入 0 号单纯根的判定）"""
    check_rank(w.family, w.n, affine=True)
    return DescentSet.from_mask(_affine_mask(w.family, w.window))


# ==================== 峰统计 ====================

def _bordered(u: Sequence[int]) -> Tuple[int, ...]:
    if not u:
        raise InputError("排列不能为空")
    if len(set(u)) != len(u) or any(v <= 0 for v in u):
        raise InputError(f"需要互不相同的正整数: {tuple(u)}")
    return (0,) + tuple(u) + (0,)


def _is_peak(s: Sequence[int], i: int) -> bool:
    return s[i - 1] < s[i] > s[i + 1]


def peak_stats(u: Sequence[int]) -> Tuple[int, int, int]:
    """
    峰统计 (pk, lpe, xpe)，约定 u_0 = u_{n+1} = 0

    pk 统计 i ∈ [2,n-1]，lpe 统计 i ∈ [1,n-1]，xpe 统计 i ∈ [1,n]。
    """
    s = _bordered(u)
    n = len(u)
    peaks = [i for i in range(1, n + 1) if _is_peak(s, i)]
    pk = sum(1 for i in peaks if 2 <= i <= n - 1)
    lpe = sum(1 for i in peaks if i <= n - 1)
    return pk, lpe, len(peaks)


def valley_count(u: Sequence[int]) -> int:
    """0 边界词中的谷数"""
    s = _bordered(u)
    return sum(1 for i in range(1, len(u) + 1) if s[i - 1] > s[i] < s[i + 1])


def reverse_word(u: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(u))


def phi_half_weight(u: Sequence[int]) -> int:
    """2·φ(u)，取值 0、1、2"""
    n = len(u)
    if n < 2:
        raise DomainError(f"φ 要求 n >= 2，收到 n={n}")
    s = _bordered(u)
    a, b, c = s[n - 2], s[n - 1], s[n]
    if a > b > c:
        return 2
    if a > c > b:
        return 0
    return 1


def phi(u: Sequence[int]) -> Fraction:
    return Fraction(phi_half_weight(u), 2)


# ==================== 暴力求和 ====================

def _count_block(family: Family, n: int, affine: bool, first: int) -> Counter:
    descent = _affine_mask if affine else _ordinary_mask
    return Counter(descent(family, w) for w in _windows(family, n, first))


@lru_cache(maxsize=64)
def _descent_counts(family: Family, n: int, affine: bool, jobs: int) -> Tuple[Tuple[int, int], ...]:
    logger.debug(f"枚举 {family.value}{n} ({'仿射' if affine else '普通'})，共 {group_size(family, n)} 个元素")
    counts: Counter = Counter()
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, n)) as pool:
            futures = [pool.submit(_count_block, family, n, affine, first)
                       for first in range(1, n + 1)]
            for future in futures:
                counts.update(future.result())
    else:
        counts = _count_block(family, n, affine, 0)
    return tuple(sorted(counts.items()))


def brute_flag_eulerian(family, n: int, affine: bool, jobs: int = 1) -> FlagPolynomial:
    """
    枚举全部群元素求 Σ_w Π_{j∈D(w)} t_j

    Args:
        family: 经典族
        n: 秩参数（A 为对称群次数）
        affine: True 用仿射下降集，False 用普通下降集
        jobs: 进程数；大于1时按 |w_1| 分块并行

    Returns:
        旗多项式，系数总和等于群的阶
    """
    family = check_rank(family, n, affine)
    counts = _descent_counts(family, n, affine, max(1, jobs))
    return FlagPolynomial(coxeter_rank(family, n), dict(counts))


def brute_eulerian(family, n: int, affine: bool, jobs: int = 1) -> Polynomial:
    """按下降数计数的一元欧拉多项式"""
    return univariate(brute_flag_eulerian(family, n, affine, jobs))
