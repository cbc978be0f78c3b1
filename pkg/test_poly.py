#!/usr/bin/env python3
"""
一元多项式、γ-向量与 Sturm 实根判定的测试
"""

import math
import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.errors import ConsistencyError, DomainError, InputError, SymmetryError
from core.poly import (
    GammaVector,
    Polynomial,
    count_real_roots,
    count_real_roots_with_multiplicity,
    gamma_basis,
    gamma_extract,
    is_nonnegative,
    is_real_rooted,
    is_symmetric,
    is_unimodal,
    polynomial_sum,
)

t = Polynomial.t()


# ==================== 基本运算 ====================

def test_normalization_strips_trailing_zeros():
    p = Polynomial((1, 2, 0, 0))
    assert p.coefficients == (1, 2)
    assert Polynomial((Fraction(4, 2),)).coefficients == (2,)
    assert isinstance(Polynomial((Fraction(4, 2),)).coefficients[0], int)


def test_zero_polynomial():
    zero = Polynomial.zero()
    assert zero.is_zero
    assert zero.degree == -math.inf
    assert str(zero) == "0"


def test_rejects_inexact_coefficients():
    with pytest.raises(InputError):
        Polynomial((1.5,))
    with pytest.raises(InputError):
        Polynomial((True,))


@pytest.mark.parametrize("coefficients, text", [
    ((0, 10, 28, 10), "10t + 28t^2 + 10t^3"),
    ((1, -1), "1 - t"),
    ((0, Fraction(1, 2)), "(1/2)t"),
    ((-2, 0, 1), "-2 + t^2"),
    ((0, 6, 6), "6t + 6t^2"),
])
def test_text_form(coefficients, text):
    assert str(Polynomial(coefficients)) == text


def test_arithmetic():
    one_plus_t = 1 + t
    assert one_plus_t ** 2 == Polynomial((1, 2, 1))
    assert (one_plus_t ** 3)(1) == 8
    assert one_plus_t * t - t == t * t
    assert 2 - t == Polynomial((2, -1))
    assert (one_plus_t * Fraction(1, 2)).coefficients == (Fraction(1, 2), Fraction(1, 2))
    assert t.shift(2) == Polynomial.monomial(3)
    assert Polynomial((1, 2, 3)).derivative() == Polynomial((2, 6))
    assert Polynomial((1, 2, 3)).total() == 6


def test_reversed():
    p = Polynomial((0, 1, 2))
    assert p.reversed(3) == Polynomial((0, 2, 1))
    with pytest.raises(InputError):
        p.reversed(1)


def test_division():
    quotient, remainder = (t * t - 1).divmod(t - 1)
    assert quotient == t + 1
    assert remainder.is_zero
    assert (t * t + 1).divmod(t - 1) == (t + 1, Polynomial.constant(2))
    with pytest.raises(ConsistencyError):
        (t * t + 1).exact_div(t - 1)
    with pytest.raises(DomainError):
        t.divmod(Polynomial.zero())


def test_to_integral():
    assert Polynomial((Fraction(6, 3), 4)).to_integral() == Polynomial((2, 4))
    with pytest.raises(ConsistencyError):
        Polynomial((Fraction(1, 3),)).to_integral()


def test_sympy_conversion():
    p = Polynomial((3, Fraction(-1, 2), 0, 7))
    assert Polynomial.from_sympy(p.to_sympy()) == p


def test_polynomial_sum():
    assert polynomial_sum([t, t, Polynomial.one()]) == Polynomial((1, 2))
    assert polynomial_sum([]).is_zero


# ==================== 对称性与γ-向量 ====================

@pytest.mark.parametrize("coefficients, m, expected", [
    ((0, 1, 1), 3, True),
    ((0, 1, 2), 3, False),
    ((1, 4, 1), 2, True),
    ((1, 4, 1), 4, False),
    ((0, 0, 1), 4, True),
])
def test_is_symmetric(coefficients, m, expected):
    assert is_symmetric(Polynomial(coefficients), m) is expected


def test_is_symmetric_requires_center_at_least_degree():
    with pytest.raises(InputError):
        is_symmetric(Polynomial((1, 2, 1)), 1)


def test_gamma_basis():
    assert gamma_basis(0, 2) == Polynomial((1, 2, 1))
    assert gamma_basis(1, 3) == Polynomial((0, 1, 1))
    with pytest.raises(InputError):
        gamma_basis(2, 3)


@pytest.mark.parametrize("coefficients, m, entries", [
    ((0, 10, 28, 10), 4, (0, 10, 8)),
    ((1, 11, 11, 1), 3, (1, 8)),
    ((1, 4, 1), 2, (1, 2)),
    ((0, 6, 6), 3, (0, 6)),
])
def test_gamma_extract(coefficients, m, entries):
    p = Polynomial(coefficients)
    gamma = gamma_extract(p, m)
    assert gamma == GammaVector(center=m, entries=entries)
    assert gamma.reconstruct() == p
    assert is_nonnegative(gamma)


def test_gamma_extract_rejects_asymmetric():
    with pytest.raises(SymmetryError):
        gamma_extract(Polynomial((0, 1, 2)), 3)


def test_gamma_negative_entry():
    # 1 + t^2 = (1+t)^2 - 2t
    gamma = gamma_extract(Polynomial((1, 0, 1)), 2)
    assert gamma.entries == (1, -2)
    assert not is_nonnegative(gamma)


@pytest.mark.parametrize("m", range(0, 21))
def test_gamma_round_trip_random(m):
    rng = random.Random(2024 + m)
    for _ in range(5):
        entries = tuple(rng.randint(-50, 50) for _ in range(m // 2 + 1))
        p = GammaVector(center=m, entries=entries).reconstruct()
        assert is_symmetric(p, m)
        assert gamma_extract(p, m).entries == entries


def test_gamma_round_trip_odd_center_has_no_middle_term():
    # 奇数中心时 i 最大为 (m-1)/2，基 t^i(1+t)^1 两项对称
    p = GammaVector(center=5, entries=(1, 2, 3)).reconstruct()
    assert p == (1 + t) ** 5 + t * (1 + t) ** 3 * 2 + t * t * (1 + t) * 3
    assert gamma_extract(p, 5).entries == (1, 2, 3)


@pytest.mark.parametrize("coefficients, expected", [
    ((1, 3, 2), True),
    ((2, 2, 2), True),
    ((1, 0, 1), False),
    ((0, 10, 28, 10), True),
    ((3, 1, 2), False),
    ((), True),
])
def test_is_unimodal(coefficients, expected):
    assert is_unimodal(Polynomial(coefficients)) is expected


# ==================== Sturm 序列 ====================

def test_count_real_roots():
    assert count_real_roots(Polynomial((1, 2, 1))) == 1
    assert count_real_roots_with_multiplicity(Polynomial((1, 2, 1))) == 2
    assert count_real_roots(Polynomial((1, 0, 1))) == 0
    assert count_real_roots(Polynomial((1, 4, 1))) == 2
    assert count_real_roots((t - 1) * (t - 2) * (t - 3)) == 3
    assert count_real_roots(Polynomial.constant(5)) == 0


def test_count_real_roots_zero_polynomial():
    with pytest.raises(DomainError):
        count_real_roots(Polynomial.zero())
    with pytest.raises(DomainError):
        is_real_rooted(Polynomial.zero())


@pytest.mark.parametrize("coefficients, expected", [
    ((0, 10, 28, 10), True),
    ((1, 11, 11, 1), True),
    ((1, 0, 1), False),
    ((1, 1, 1), False),
    ((0, 0, 1), True),
    ((7,), True),
])
def test_is_real_rooted(coefficients, expected):
    assert is_real_rooted(Polynomial(coefficients)) is expected


def test_real_rooted_random_products():
    rng = random.Random(11)
    for _ in range(15):
        p = Polynomial.one()
        for _ in range(rng.randint(1, 8)):
            p = p * (t + rng.randint(-5, 5))
        assert is_real_rooted(p)
        assert count_real_roots_with_multiplicity(p) == p.degree


# 无实根或无理实根的二次因子及其实根个数
QUADRATIC_FACTORS = [
    (t * t - 2, 2),
    (t * t - 3, 2),
    (t * t + 1, 0),
    (t * t + t + 1, 0),
]


def _grid_sign_changes(p: Polynomial) -> int:
    """在步长 1/16 的有理网格上数符号变化；网格点避开整数与 ±√2、±√3"""
    offset = Fraction(1, 1000)
    signs = []
    for k in range(-8 * 16, 8 * 16 + 1):
        value = p(Fraction(k, 16) + offset)
        if value:
            signs.append(value > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _random_squarefree(rng: random.Random, roots, quadratics) -> Polynomial:
    p = Polynomial.constant(rng.choice([1, -2, 3]))
    for r in roots:
        p = p * (t - r)
    for q, _ in quadratics:
        p = p * q
    return p


def test_count_real_roots_matches_grid_sign_changes():
    rng = random.Random(31)
    for _ in range(25):
        roots = rng.sample(range(-5, 6), rng.randint(0, 5))
        quadratics = rng.sample(QUADRATIC_FACTORS, rng.randint(0, 2))
        p = _random_squarefree(rng, roots, quadratics)
        if p.degree == 0:
            continue
        expected = len(roots) + sum(count for _, count in quadratics)
        assert count_real_roots(p) == expected
        assert _grid_sign_changes(p) == expected


def test_count_real_roots_of_coprime_product_is_union():
    rng = random.Random(47)
    for _ in range(25):
        roots = rng.sample(range(-5, 6), rng.randint(2, 8))
        split = rng.randint(1, len(roots) - 1)
        quadratics = rng.sample(QUADRATIC_FACTORS, 2)
        p = _random_squarefree(rng, roots[:split], quadratics[:1])
        q = _random_squarefree(rng, roots[split:], quadratics[1:])
        assert p.gcd(q) == Polynomial.one()
        total = len(roots) + sum(count for _, count in quadratics)
        assert count_real_roots(p * q) == count_real_roots(p) + count_real_roots(q) == total


def test_gcd_is_monic():
    p = (t - 1) ** 2 * (t + 2)
    assert p.gcd(p.derivative()) == t - 1
    assert (t * 2 - 4).gcd(t * t - 4) == t - 2
    assert count_real_roots_with_multiplicity(p) == 3


def test_repeated_complex_factor_is_not_real_rooted():
    p = (t * t + 1) ** 2 * (t + 3)
    assert count_real_roots_with_multiplicity(p) == 1
    assert not is_real_rooted(p)
