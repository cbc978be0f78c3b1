# 数据文件加载器

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Union

import yaml

from core.errors import InputError
from core.flag import FlagPolynomial
from core.poly import Polynomial

from .polynomial_parser import parse_flag_polynomial, parse_polynomial

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@dataclass(frozen=True)
class Table1Row:
    """对照表的一行"""
    family: str
    rank: int
    expected: Polynomial

    @property
    def label(self) -> str:
        # 例外型的族名已含秩
        return self.family if self.family[-1].isdigit() else f"{self.family}{self.rank}"


@dataclass(frozen=True)
class WorkedExample:
    """小秩环面的手算旗向量"""
    family: str
    rank: int
    reduced: bool
    flag_f: FlagPolynomial
    flag_h: FlagPolynomial


def load_data(source: Union[str, Path]) -> Dict[str, Any]:
    """
    加载 YAML/JSON 数据

    Args:
        source: 文件路径，或 YAML/JSON 字符串

    Returns:
        顶层字典
    """
    path = Path(source)
    if isinstance(source, Path) or (len(str(source)) < 500 and path.suffix in (".yaml", ".yml", ".json")):
        if not path.exists():
            raise InputError(f"数据文件不存在: {path}")
        source = path.read_text(encoding="utf-8")

    try:
        result = json.loads(source)
    except json.JSONDecodeError:
        try:
            result = yaml.safe_load(source)
        except yaml.YAMLError as e:
            raise InputError(f"无法解析数据文件: {e}") from e
    if not isinstance(result, dict):
        raise InputError("数据文件顶层必须是映射")
    return result


@lru_cache()
def load_exceptional_diagrams() -> Dict[str, Dict[str, Any]]:
    """例外型扩展Dynkin图: {名称: {rank, order, bonds}}"""
    return load_data(DATA_DIR / "exceptional_diagrams.yaml")


@lru_cache()
def load_table1() -> List[Table1Row]:
    """对照表的全部行，期望值解析为 Polynomial"""
    data = load_data(DATA_DIR / "table1.yaml")
    return [
        Table1Row(family=str(row["family"]), rank=int(row["rank"]),
                  expected=parse_polynomial(str(row["expected"])))
        for row in data.get("rows", [])
    ]


@lru_cache()
def load_worked_examples() -> List[WorkedExample]:
    """手算的环面旗 f/h-向量，文本解析为 FlagPolynomial"""
    data = load_data(DATA_DIR / "worked_examples.yaml")
    examples = []
    for row in data.get("examples", []):
        rank = int(row["rank"])
        examples.append(WorkedExample(
            family=str(row["family"]),
            rank=rank,
            reduced=bool(row.get("reduced", True)),
            flag_f=parse_flag_polynomial(str(row["flag_f"]), rank),
            flag_h=parse_flag_polynomial(str(row["flag_h"]), rank),
        ))
    return examples
