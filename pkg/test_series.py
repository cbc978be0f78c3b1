#!/usr/bin/env python3
"""
截断幂级数与指数生成函数的测试
"""

import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.errors import DomainError, InputError
from core.groups import brute_eulerian
from core.poly import Polynomial
from core.series import (
    GENUINE_MIN_INDEX,
    TruncatedSeries,
    closed_form,
    convention_values,
    exp_linear,
    extract,
    series_values,
)

t = Polynomial.t()


# ==================== 级数运算 ====================

def test_series_padding_and_truncation():
    s = TruncatedSeries(3, (Polynomial.one(), t))
    assert len(s.coefficients) == 4
    assert s.coefficient(3).is_zero
    assert s.truncate(1).order == 1
    with pytest.raises(DomainError):
        s.coefficient(4)
    with pytest.raises(InputError):
        TruncatedSeries(-1, ())


def test_geometric_series_division():
    order = 6
    one = TruncatedSeries.constant(1, order)
    geometric = one / (1 - TruncatedSeries.z(order))
    assert all(geometric.coefficient(k) == Polynomial.one() for k in range(order + 1))
    assert geometric * (1 - TruncatedSeries.z(order)) == one


def test_division_requires_invertible_constant_term():
    z = TruncatedSeries.z(4)
    with pytest.raises(DomainError):
        TruncatedSeries.constant(1, 4) / z


def test_exp_linear():
    e = exp_linear(Polynomial.one(), 5)
    assert e.coefficient(3) == Polynomial.constant(Fraction(1, 6))
    e2 = exp_linear(t * 2, 3)
    assert e2.coefficient(2) == Polynomial((0, 0, 2))


def test_shift_and_scale():
    z = TruncatedSeries.z(4)
    assert z.shift(2).coefficient(3) == Polynomial.one()
    assert exp_linear(Polynomial.one(), 4).scale(2) == exp_linear(Polynomial.constant(2), 4)


def test_mixed_orders_take_minimum():
    a = TruncatedSeries.constant(1, 5)
    b = TruncatedSeries.constant(1, 3)
    assert (a + b).order == 3
    assert (a * b).order == 3


# ==================== 提取 ====================

@pytest.mark.parametrize("name, n, coefficients", [
    ("A", 1, (1,)),
    ("A", 3, (1, 4, 1)),
    ("A", 4, (1, 11, 11, 1)),
    ("BC", 1, (1, 1)),
    ("BC", 2, (1, 6, 1)),
    ("D", 2, (1, 2, 1)),
    ("D", 3, (1, 11, 11, 1)),
    ("D", 4, (1, 44, 102, 44, 1)),
    ("affA", 2, (0, 2)),
    ("affA", 3, (0, 3, 3)),
    ("affC", 1, (0, 2)),
    ("affC", 2, (0, 4, 4)),
    ("affB", 2, (0, 4, 4)),
    ("affB", 3, (0, 10, 28, 10)),
    ("affD", 3, (0, 4, 16, 4)),
    ("affD", 4, (0, 16, 80, 80, 16)),
    ("affB", 7, (0, 242, 20612, 157294, 288824, 157294, 20612, 242)),
    ("affD", 7, (0, 228, 13192, 79580, 136560, 79580, 13192, 228)),
])
def test_extract(name, n, coefficients):
    assert extract(name, n) == Polynomial(coefficients)


@pytest.mark.parametrize("name, family, affine", [
    ("A", "A", False),
    ("BC", "B", False),
    ("D", "D", False),
    ("affA", "A", True),
    ("affB", "B", True),
    ("affC", "C", True),
    ("affD", "D", True),
])
def test_extract_matches_enumeration(name, family, affine):
    for n in range(max(GENUINE_MIN_INDEX[name], 3), 6):
        assert extract(name, n) == brute_eulerian(family, n, affine)


def test_extract_below_genuine_range():
    with pytest.raises(DomainError):
        extract("D", 1)
    with pytest.raises(DomainError):
        extract("affD", 2)
    with pytest.raises(InputError):
        extract("E8", 3)


def test_convention_values():
    assert convention_values("D")[1] == t
    assert convention_values("affD")[2] == t * 4
    assert convention_values("affB")[0] == Polynomial.constant(2)
    assert series_values("affD", 2)[2] == t * 4
    assert series_values("affB", 1)[1] == t * 2
    assert series_values("D", 1)[1] == t
    with pytest.raises(InputError):
        convention_values("X")


def test_closed_form_reuses_higher_order():
    high = closed_form("BC", 8)
    low = closed_form("BC", 4)
    assert low.order == 4
    assert low == high
    with pytest.raises(InputError):
        closed_form("BC", -1)
