# 验证套件的组装

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from config.settings import get_settings
from core import verify
from core.errors import InputError
from core.families import CLASSICAL_FAMILIES, EXCEPTIONAL_RANKS, Family
from core.groups import coxeter_rank
from parsers.data_loader import load_table1, load_worked_examples

SUITES = ("identities", "flags", "gamma", "egf", "torus", "roots", "all")

# 未指定 --max-rank 时各套件的默认上限；torus 默认跑到各族的枚举上限
DEFAULT_MAX_RANK = {
    "identities": 7,
    "flags": 7,
    "gamma": 7,
    "egf": 8,
}

# 依赖图公式的检查，子集数随秩指数增长
RANK_CEILING = {
    "identities": 10,
    "egf": 10,
}

# γ 非负扫描默认覆盖到 n = 10（借助生成函数提取）
GAMMA_SWEEP = 10

# 两条路径、环面等多元检查的最小 Coxeter秩
MULTIVARIATE_MIN_RANK = {Family.A: 1, Family.B: 2, Family.C: 1, Family.D: 3}


@dataclass
class CheckSpec:
    """一项待执行的检查"""
    name: str
    func: Callable[..., verify.CheckResult]
    kwargs: Dict[str, Any] = field(default_factory=dict)
    informational: bool = False
    jobs: Optional[int] = None  # 检查内部枚举的进程数，None 时读取配置

    @property
    def label(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.kwargs.items())
        return f"{self.name}({args})"


def _enumerable_rank(family: Family, max_rank: Optional[int]) -> int:
    """不超过 max_rank 且窗口长度在枚举上限内的最大 Coxeter秩；max_rank 为 None 时只受枚举上限约束"""
    ceiling = coxeter_rank(family, get_settings().enum_limit(family))
    return ceiling if max_rank is None else min(max_rank, ceiling)


def _ranks(start: int, stop: int) -> range:
    return range(start, stop + 1)


def _identities(max_rank: int, order: int) -> List[CheckSpec]:
    specs = []
    for which, minimum in verify.IDENTITY_MIN_RANK.items():
        specs += [CheckSpec("identity", verify.check_identity, {"which": which, "n": n})
                  for n in _ranks(minimum, max_rank)]
    for which in ("A", "C"):
        specs += [CheckSpec("cyclic", verify.check_cyclic, {"which": which, "n": n})
                  for n in _ranks(1, max_rank + 1)]
    specs += [CheckSpec("series_identity", verify.check_series_identities, {"which": which, "order": order})
              for which in verify.SERIES_IDENTITIES]
    specs += [CheckSpec("specializations", verify.check_specializations, {"n": n})
              for n in _ranks(1, _enumerable_rank(Family.C, max_rank))]
    specs.append(CheckSpec("b2_c2", verify.check_b2_c2))
    return specs


def _flags(max_rank: int) -> List[CheckSpec]:
    # A 的展开按对称群次数计：Coxeter秩 r 对应 S_{r+1}
    specs = [CheckSpec("flag_formula_A", verify.check_flag_formula_A, {"n": n})
             for n in _ranks(2, _enumerable_rank(Family.A, max_rank) + 1)]
    specs += [CheckSpec("flag_formula_C", verify.check_flag_formula_C, {"n": n})
              for n in _ranks(1, _enumerable_rank(Family.C, max_rank))]
    specs += [CheckSpec("flag_formula_B", verify.check_flag_formula_B, {"n": n})
              for n in _ranks(2, _enumerable_rank(Family.B, max_rank))]
    specs += [CheckSpec("flag_formula_D", verify.check_flag_formula_D, {"n": n})
              for n in _ranks(4, _enumerable_rank(Family.D, max_rank))]
    for family in (Family.A, Family.B, Family.C, Family.D):
        specs += [CheckSpec("two_path", verify.check_two_path, {"family": family.value, "n": n})
                  for n in _ranks(MULTIVARIATE_MIN_RANK[family], _enumerable_rank(family, max_rank))]
    specs += [CheckSpec("table1", verify.check_table1_row, {"family": row.family, "rank": row.rank})
              for row in load_table1()]
    specs += [CheckSpec("valley_lemma", verify.check_valley_lemma, {"n": n})
              for n in _ranks(1, _enumerable_rank(Family.C, max_rank))]
    specs += [CheckSpec("phi_pairing", verify.check_phi_pairing, {"n": n})
              for n in _ranks(3, _enumerable_rank(Family.C, max_rank))]
    return specs


def _gamma(max_rank: int, sweep: int) -> List[CheckSpec]:
    specs = []
    for which, minimum in verify.GAMMA_EXPANSIONS.items():
        for n in _ranks(minimum, _enumerable_rank(Family.C, max_rank)):
            informational = which == "D" and n == 3
            specs.append(CheckSpec("gamma_expansion", verify.check_gamma_expansion,
                                   {"which": which, "n": n}, informational=informational))
    for name in verify.SERIES_FAMILIES:
        specs += [CheckSpec("gamma_nonnegative", verify.check_gamma_nonnegative, {"name": name, "n": n})
                  for n in _ranks(verify.GENUINE_MIN_INDEX[name], sweep)]
    specs += [CheckSpec("exceptional_gamma", verify.check_exceptional_gamma, {"family": family.value})
              for family in EXCEPTIONAL_RANKS]
    return specs


def _egf(max_rank: int, order: int) -> List[CheckSpec]:
    specs = [CheckSpec("egf", verify.check_egf, {"name": name, "n_max": max_rank})
             for name in verify.SERIES_FAMILIES]
    specs += [CheckSpec("series_conventions", verify.check_series_conventions, {"name": name})
              for name in verify.SERIES_FAMILIES]
    specs += [CheckSpec("egf_table1", verify.check_egf_table1_row, {"family": row.family, "rank": row.rank})
              for row in load_table1() if row.family in ("B", "D")]
    specs += [CheckSpec("series_identity", verify.check_series_identities, {"which": which, "order": order})
              for which in verify.SERIES_IDENTITIES]
    return specs


def _torus(max_rank: Optional[int]) -> List[CheckSpec]:
    specs = []
    for family in sorted(CLASSICAL_FAMILIES, key=lambda f: f.value):
        for n in _ranks(MULTIVARIATE_MIN_RANK[family], _enumerable_rank(family, max_rank)):
            params = {"family": family.value, "n": n}
            specs.append(CheckSpec("torus", verify.check_torus, params))
            specs.append(CheckSpec("partition", verify.check_partition, params))
            specs.append(CheckSpec("flag_f_enumeration", verify.check_flag_f_enumeration, params))
            specs.append(CheckSpec("total_cells", verify.check_total_cells, params))
    for family in EXCEPTIONAL_RANKS:
        specs.append(CheckSpec("torus", verify.check_torus, {"family": family.value}))
        specs.append(CheckSpec("total_cells", verify.check_total_cells, {"family": family.value}))
    specs += [CheckSpec("worked_example", verify.check_worked_example,
                        {"family": example.family, "rank": example.rank, "reduced": example.reduced})
              for example in load_worked_examples()]
    return specs


def _roots(max_rank: int, order: Optional[int]) -> List[CheckSpec]:
    # 未显式给出截断阶时按 n_max 展开
    extra = {} if order is None else {"order": order}
    return [CheckSpec("realrooted", verify.check_realrooted, {"which": which, "n_max": max_rank, **extra})
            for which in verify.REALROOTED_NAMES]


def build_suite(name: str, max_rank: Optional[int] = None, order: Optional[int] = None,
                jobs: Optional[int] = None) -> List[CheckSpec]:
    """
    组装验证套件

    Args:
        name: identities / flags / gamma / egf / torus / roots / all
        max_rank: 秩上限；缺省时用各套件的默认值（roots 取配置的 roots_max_rank，torus 取枚举上限）
        order: 级数截断阶，缺省时级数恒等式取配置的 series_order，roots 按 n_max 展开
        jobs: 每项检查内部枚举的进程数，缺省时读取配置

    Returns:
        按固定顺序排列的 CheckSpec 列表
    """
    if name not in SUITES:
        raise InputError(f"未知的验证套件: {name}，可选 {list(SUITES)}")
    if max_rank is not None and max_rank < 1:
        raise InputError(f"--max-rank 必须为正整数，收到 {max_rank}")
    if order is not None and order < 1:
        raise InputError(f"--order 必须为正整数，收到 {order}")
    settings = get_settings()
    series_order = order if order is not None else settings.series_order

    def rank_for(suite: str) -> int:
        if max_rank is not None:
            return min(max_rank, RANK_CEILING.get(suite, max_rank))
        if suite == "roots":
            # 显式截断阶同时限制默认的 n_max
            return settings.roots_max_rank if order is None else min(settings.roots_max_rank, order)
        return DEFAULT_MAX_RANK[suite]

    if name == "all":
        specs = []
        for suite in SUITES[:-1]:
            specs += build_suite(suite, max_rank, order, jobs)
        return specs
    if name == "identities":
        specs = _identities(rank_for(name), series_order)
    elif name == "flags":
        specs = _flags(rank_for(name))
    elif name == "gamma":
        sweep = max_rank if max_rank is not None else GAMMA_SWEEP
        specs = _gamma(rank_for(name), sweep)
    elif name == "egf":
        specs = _egf(rank_for(name), series_order)
    elif name == "torus":
        specs = _torus(max_rank)
    else:
        specs = _roots(rank_for(name), order)
    for spec in specs:
        spec.jobs = jobs
    return specs
