# 约化Steinberg环面的组合模型

from dataclasses import dataclass
from typing import Optional

from utils.logger import get_logger

from .diagram import extended_diagram, group_order, subgroup_order
from .errors import UnsupportedError
from .families import Family
from .flag import FlagPolynomial, colors_of, f_to_h, full_mask, iter_subsets
from .groups import brute_flag_eulerian, window_length

logger = get_logger(__name__)


@dataclass
class TorusModel:
    """以旗 f-向量刻画的环面；reduced 为 False 时保留空面"""
    family: Family
    rank: int
    flag_f: FlagPolynomial
    flag_h: FlagPolynomial
    reduced: bool = True

    @property
    def label(self) -> str:
        return self.family.value if self.family.fixed_rank else f"{self.family.value}{self.rank}"


def build(family, n: Optional[int] = None, reduced: bool = True) -> TorusModel:
    """
    构造环面模型：f_J = |W|/|W_{J^c}|（J 非空），f_∅ = 0

    Args:
        family: 族
        n: Coxeter秩（例外型可省略）
        reduced: False 时 f_∅ = 1（未约化环面）

    Returns:
        TorusModel
    """
    family = Family.parse(family)
    d = extended_diagram(family, n)
    full = full_mask(d.rank)
    order = group_order(family, d.rank)

    coefficients = {0: 0 if reduced else 1}
    for mask in iter_subsets(d.rank):
        if mask:
            coefficients[mask] = order // subgroup_order(d, colors_of(full ^ mask))
    flag_f = FlagPolynomial(d.rank, coefficients)
    return TorusModel(family=family, rank=d.rank, flag_f=flag_f, flag_h=f_to_h(flag_f), reduced=reduced)


def euler_characteristic(model: TorusModel) -> int:
    """Σ_{J≠∅} (-1)^{|J|-1} f_J"""
    return sum((-1) ** (len(colors_of(mask)) - 1) * value
               for mask, value in model.flag_f.coefficients.items() if mask)


def total_cell_count(model: TorusModel) -> int:
    """全部胞腔数 Σ_J f_J"""
    return model.flag_f.total()


def partition_certificate(family, n: int, jobs: int = 1) -> bool:
    """
    划分的计数验证：对每个真子集 J，|{w : D̃(w) ∩ J = ∅}| = |W|/|W_J|

    Args:
        family: 经典族
        n: Coxeter秩
        jobs: 枚举进程数

    Returns:
        是否全部相等
    """
    family = Family.parse(family)
    if not family.is_classical:
        raise UnsupportedError(f"{family.value} 型不能枚举，划分验证只支持经典族")

    d = extended_diagram(family, n)
    counts = brute_flag_eulerian(family, window_length(family, n), affine=True, jobs=jobs).coefficients
    order = group_order(family, n)
    full = full_mask(n)

    for mask in iter_subsets(n):
        if mask == full:
            continue
        avoiding = sum(value for descent, value in counts.items() if not descent & mask)
        expected = order // subgroup_order(d, colors_of(mask))
        if avoiding != expected:
            logger.warning(f"{family.value}{n} 子集 {colors_of(mask)}: 枚举 {avoiding} != |W|/|W_J| {expected}")
            return False
    return True
