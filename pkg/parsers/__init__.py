# 解析器模块

from .polynomial_parser import parse_polynomial, parse_flag_polynomial
from .data_loader import (
    Table1Row,
    WorkedExample,
    load_data,
    load_exceptional_diagrams,
    load_table1,
    load_worked_examples,
)

__all__ = [
    'parse_polynomial', 'parse_flag_polynomial',
    'Table1Row', 'WorkedExample', 'load_data', 'load_exceptional_diagrams', 'load_table1',
    'load_worked_examples',
]
