# 仿射欧拉多项式核心模块

from .errors import (
    EulerianError,
    InputError,
    DomainError,
    SymmetryError,
    ClassificationError,
    ConsistencyError,
    UnsupportedError,
)
from .families import Family
from .poly import Polynomial, GammaVector
from .flag import FlagPolynomial

__all__ = [
    'EulerianError', 'InputError', 'DomainError', 'SymmetryError',
    'ClassificationError', 'ConsistencyError', 'UnsupportedError',
    'Family', 'Polynomial', 'GammaVector', 'FlagPolynomial',
]
