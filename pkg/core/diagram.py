# 扩展Dynkin图、子图分类与仿射欧拉多项式的闭公式

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from parsers.data_loader import load_exceptional_diagrams
from utils.logger import get_logger

from .errors import ClassificationError, DomainError
from .families import Family
from .flag import FlagPolynomial, colors_of, full_mask

logger = get_logger(__name__)

# 无穷键标签（Coxeter矩阵中的 ∞）
INFINITY = -1

# 4<a,b>^2 / (|a|^2 |b|^2) -> m
_RATIO_TO_BOND = {0: 2, 1: 3, 2: 4, 3: 6, 4: INFINITY}

# 扩展图的秩下限（Coxeter秩）
DIAGRAM_MIN_RANK = {Family.A: 1, Family.B: 2, Family.C: 1, Family.D: 3}


@dataclass(frozen=True)
class CoxeterDiagram:
    """
    Coxeter图

    nodes 为 [0,n]（0 号为仿射结点）；bonds 只保存 m != 2 的结点对 (i<j)。
    """
    nodes: Tuple[int, ...]
    bonds: Dict[Tuple[int, int], int] = field(default_factory=dict, compare=True, hash=False)

    def __post_init__(self):
        normalized: Dict[Tuple[int, int], int] = {}
        for (i, j), m in self.bonds.items():
            if i == j:
                raise DomainError(f"键不能连接结点自身: {i}")
            if i not in self.nodes or j not in self.nodes:
                raise DomainError(f"键 ({i},{j}) 的端点不在结点集内")
            if m != 2:
                normalized[(min(i, j), max(i, j))] = m
        object.__setattr__(self, "bonds", normalized)

    @property
    def rank(self) -> int:
        return len(self.nodes) - 1

    def bond(self, i: int, j: int) -> int:
        return self.bonds.get((min(i, j), max(i, j)), 2)

    def neighbors(self, i: int, within: Optional[Iterable[int]] = None) -> List[int]:
        pool = self.nodes if within is None else within
        return [j for j in pool if j != i and self.bond(i, j) != 2]

    def components(self, subset: Iterable[int]) -> List[Tuple[int, ...]]:
        """诱导子图的连通分支（每个分支内升序，分支按最小结点排序）"""
        remaining = set(subset)
        result = []
        while remaining:
            start = min(remaining)
            stack, seen = [start], {start}
            while stack:
                node = stack.pop()
                for other in self.neighbors(node, remaining):
                    if other not in seen:
                        seen.add(other)
                        stack.append(other)
            remaining -= seen
            result.append(tuple(sorted(seen)))
        return result


@dataclass(frozen=True)
class IrreducibleType:
    """有限不可约Coxeter群的类型；B 与 C 在图上不可区分，统一记为 B"""
    family: str
    rank: int
    m: int = 0

    def order(self) -> int:
        k = self.rank
        if self.family == "A":
            return math.factorial(k + 1)
        if self.family == "B":
            return 2 ** k * math.factorial(k)
        if self.family == "D":
            return 2 ** (k - 1) * math.factorial(k)
        if self.family == "I":
            return 2 * self.m
        return _EXCEPTIONAL_ORDERS[self.name]

    @property
    def name(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name


_EXCEPTIONAL_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
    "H3": 120,
    "H4": 14400,
}


# ==================== 扩展图构造 ====================

def _unit(dim: int, i: int) -> np.ndarray:
    v = np.zeros(dim, dtype=np.int64)
    v[i - 1] = 1
    return v


def simple_roots(family, n: int) -> List[np.ndarray]:
    """
    扩展单纯根 [α_0, α_1, ..., α_n] 的坐标（ε_i 为标准基）

    α_0 为最低根（最高根的相反数）。
    """
    family = Family.parse(family)
    e = _unit
    if family is Family.A:
        dim = n + 1
        roots = [e(dim, 1) - e(dim, dim)]
        roots += [e(dim, i + 1) - e(dim, i) for i in range(1, n + 1)]
        return roots
    dim = n
    if family is Family.C:
        first = 2 * e(dim, 1)
        lowest = -2 * e(dim, n)
    elif family is Family.B:
        first = e(dim, 1)
        lowest = -e(dim, n - 1) - e(dim, n)
    else:
        first = e(dim, 1) + e(dim, 2)
        lowest = -e(dim, n - 1) - e(dim, n)
    return [lowest, first] + [e(dim, i) - e(dim, i - 1) for i in range(2, n + 1)]


def _diagram_from_roots(roots: Sequence[np.ndarray]) -> CoxeterDiagram:
    gram = np.array([[int(np.dot(a, b)) for b in roots] for a in roots], dtype=object)
    bonds = {}
    for i, j in combinations(range(len(roots)), 2):
        numerator = 4 * gram[i, j] ** 2
        denominator = gram[i, i] * gram[j, j]
        ratio, remainder = divmod(numerator, denominator)
        if remainder or ratio not in _RATIO_TO_BOND:
            raise ClassificationError(f"单纯根 α_{i}, α_{j} 的夹角不是晶体学角度")
        bonds[(i, j)] = _RATIO_TO_BOND[ratio]
    return CoxeterDiagram(nodes=tuple(range(len(roots))), bonds=bonds)


@lru_cache(maxsize=128)
def extended_diagram(family, n: Optional[int] = None) -> CoxeterDiagram:
    """
    扩展Dynkin图

    Args:
        family: A、B、C、D 或例外型
        n: Coxeter秩（例外型可省略）

    Returns:
        结点 [0,n] 上的 CoxeterDiagram
    """
    family = Family.parse(family)
    if family.is_classical:
        if n is None or n < DIAGRAM_MIN_RANK[family]:
            raise DomainError(f"{family.value} 型扩展图要求秩 >= {DIAGRAM_MIN_RANK[family]}，收到 {n}")
        return _diagram_from_roots(simple_roots(family, n))

    if n is not None and n != family.fixed_rank:
        raise DomainError(f"{family.value} 的秩固定为 {family.fixed_rank}，收到 {n}")
    data = load_exceptional_diagrams()[family.value]
    bonds = {(int(i), int(j)): int(m) for i, j, m in data["bonds"]}
    return CoxeterDiagram(nodes=tuple(range(int(data["rank"]) + 1)), bonds=bonds)


def finite_diagram(family, n: Optional[int] = None) -> CoxeterDiagram:
    """去掉仿射结点后的有限Dynkin图"""
    d = extended_diagram(family, n)
    rest = d.nodes[1:]
    bonds = {pair: m for pair, m in d.bonds.items() if 0 not in pair}
    return CoxeterDiagram(nodes=rest, bonds=bonds)


# ==================== 子图分类 ====================

def _path_order(d: CoxeterDiagram, component: Sequence[int]) -> List[int]:
    ends = [v for v in component if len(d.neighbors(v, component)) == 1]
    path = [min(ends)]
    while len(path) < len(component):
        step = [v for v in d.neighbors(path[-1], component) if v not in path]
        path.append(step[0])
    return path


def _arm_length(d: CoxeterDiagram, component: Sequence[int], center: int, start: int) -> int:
    length, previous, current = 1, center, start
    while True:
        step = [v for v in d.neighbors(current, component) if v != previous]
        if not step:
            return length
        previous, current = current, step[0]
        length += 1


def _classify_component(d: CoxeterDiagram, component: Tuple[int, ...]) -> IrreducibleType:
    k = len(component)
    if k == 1:
        return IrreducibleType("A", 1)

    edges = [(i, j, d.bond(i, j)) for i, j in combinations(component, 2) if d.bond(i, j) != 2]
    labels = [m for _, _, m in edges]
    if INFINITY in labels:
        raise ClassificationError(f"分支 {component} 含无穷键，不是有限型")
    if len(edges) != k - 1:
        raise ClassificationError(f"分支 {component} 含圈，不是有限型")

    if k == 2:
        m = labels[0]
        if m == 3:
            return IrreducibleType("A", 2)
        if m == 4:
            return IrreducibleType("B", 2)
        if m == 6:
            return IrreducibleType("G", 2)
        return IrreducibleType("I", 2, m=m)

    degrees = {v: len(d.neighbors(v, component)) for v in component}
    branches = [v for v, deg in degrees.items() if deg >= 3]
    if branches:
        center = branches[0]
        if len(branches) > 1 or degrees[center] > 3 or set(labels) != {3}:
            raise ClassificationError(f"分支 {component} 不是有限型图")
        arms = tuple(sorted(_arm_length(d, component, center, v)
                            for v in d.neighbors(center, component)))
        if arms[:2] == (1, 1):
            return IrreducibleType("D", k)
        if arms in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
            return IrreducibleType("E", k)
        raise ClassificationError(f"分支 {component} 的臂长 {arms} 不对应有限型")

    path = _path_order(d, component)
    sequence = [d.bond(a, b) for a, b in zip(path, path[1:])]
    special = [(pos, m) for pos, m in enumerate(sequence) if m != 3]
    if not special:
        return IrreducibleType("A", k)
    if len(special) == 1:
        pos, m = special[0]
        at_end = pos in (0, len(sequence) - 1)
        if m == 4 and at_end:
            return IrreducibleType("B", k)
        if m == 4 and k == 4:
            return IrreducibleType("F", 4)
        if m == 5 and at_end and k in (3, 4):
            return IrreducibleType("H", k)
    raise ClassificationError(f"分支 {component} 的键序列 {sequence} 不对应有限型")


def classify_subdiagram(d: CoxeterDiagram, subset: Iterable[int]) -> List[IrreducibleType]:
    """
    把诱导子图分解为不可约有限型

    Args:
        d: Coxeter图
        subset: 真子集 J

    Returns:
        各连通分支的类型（按分支最小结点排序）
    """
    nodes = set(subset)
    if not nodes <= set(d.nodes):
        raise ClassificationError(f"子集 {sorted(nodes)} 不在结点集内")
    if nodes == set(d.nodes):
        raise ClassificationError("子集必须是真子集")
    return [_classify_component(d, component) for component in d.components(nodes)]


def subgroup_order(d: CoxeterDiagram, subset: Iterable[int]) -> int:
    """子图生成的子群 W_J 的阶，|W_∅| = 1"""
    return math.prod(t.order() for t in classify_subdiagram(d, subset))


def group_order(family, n: Optional[int] = None) -> int:
    """有限Weyl群的阶（A 按 Coxeter 秩计）"""
    d = extended_diagram(family, n)
    return subgroup_order(d, d.nodes[1:])


# ==================== 闭公式 ====================

def _expand_products(rank: int, weights: Dict[int, int], universe: int) -> FlagPolynomial:
    """
    Σ_J weights[J] Π_{j∈J}(1-t_j) Π_{j∈universe∖J} t_j

    Π(1-t_j) 展开为 Σ_{I⊆J} (-1)^{|I|} t_I。
    """
    coefficients: Dict[int, int] = {}
    for mask, weight in weights.items():
        complement = universe ^ mask
        sub = mask
        while True:
            sign = -1 if bin(sub).count("1") % 2 else 1
            key = sub | complement
            coefficients[key] = coefficients.get(key, 0) + sign * weight
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return FlagPolynomial(rank, coefficients)


def affine_eulerian_formula(family, n: Optional[int] = None) -> FlagPolynomial:
    """
    Σ_{J⊊[0,n]} |W|/|W_J| Π_{j∈J}(1-t_j) Π_{j∉J} t_j

    Args:
        family: 族
        n: Coxeter秩（例外型可省略）

    Returns:
        多元仿射欧拉多项式
    """
    d = extended_diagram(family, n)
    full = full_mask(d.rank)
    order = subgroup_order(d, d.nodes[1:])
    weights = {mask: order // subgroup_order(d, colors_of(mask)) for mask in range(full)}
    logger.debug(f"{family} 秩 {d.rank} 的闭公式展开了 {len(weights)} 个真子集")
    return _expand_products(d.rank, weights, full)


def eulerian_formula(family, n: Optional[int] = None) -> FlagPolynomial:
    """
    有限Coxeter复形的旗 h-多项式 W(t_1,...,t_n)

    与仿射情形同一公式，J 取遍 [1,n] 的全部子集（含 J = [1,n]）。
    颜色 0 不出现。
    """
    d = finite_diagram(family, n)
    universe = full_mask(d.rank + 1) ^ 1
    order = subgroup_order_finite(d, d.nodes)
    weights = {}
    for mask in range(0, universe + 1, 2):
        weights[mask] = order // subgroup_order_finite(d, colors_of(mask))
    return _expand_products(d.rank + 1, weights, universe)


def subgroup_order_finite(d: CoxeterDiagram, subset: Iterable[int]) -> int:
    """有限图上的 |W_J|，允许 J 为全部结点"""
    return math.prod(_classify_component(d, component).order()
                     for component in d.components(subset))
