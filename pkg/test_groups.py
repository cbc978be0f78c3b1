#!/usr/bin/env python3
"""
带符号置换模型、下降集与峰统计的测试
"""

import os
import random
import sys
from collections import Counter
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.errors import DomainError, InputError, UnsupportedError
from core.families import Family
from core.flag import FlagPolynomial, full_mask
from core.groups import (
    DescentSet,
    GroupElement,
    affine_descent_set,
    brute_eulerian,
    brute_flag_eulerian,
    coxeter_rank,
    descent_set,
    enumerate_elements,
    group_size,
    peak_stats,
    phi,
    phi_half_weight,
    reverse_word,
    valley_count,
    window_length,
)
from core.poly import Polynomial


# ==================== 枚举 ====================

@pytest.mark.parametrize("family, n, size", [
    ("A", 3, 6),
    ("A", 5, 120),
    ("B", 3, 48),
    ("C", 2, 8),
    ("D", 3, 24),
    ("D", 4, 192),
])
def test_enumeration_size_and_uniqueness(family, n, size):
    windows = [w.window for w in enumerate_elements(family, n)]
    assert len(windows) == size == group_size(family, n)
    assert len(set(windows)) == size


def test_enumeration_order_is_fixed():
    windows = [w.window for w in enumerate_elements("B", 2)]
    assert windows[:4] == [(1, 2), (-1, 2), (1, -2), (-1, -2)]
    assert windows == [w.window for w in enumerate_elements("B", 2)]


def test_enumeration_errors():
    with pytest.raises(DomainError):
        list(enumerate_elements("A", 0))
    with pytest.raises(UnsupportedError):
        list(enumerate_elements("E6", 3))


def test_rank_conventions():
    assert window_length("A", 3) == 4
    assert window_length("B", 3) == 3
    assert coxeter_rank("A", 4) == 3
    assert coxeter_rank(Family.D, 4) == 4


@pytest.mark.parametrize("family, window", [
    ("A", (1, -2)),
    ("D", (-1, 2, 3)),
    ("B", (1, 1)),
    ("C", (1, 3)),
    ("B", ()),
])
def test_invalid_windows(family, window):
    with pytest.raises(InputError):
        GroupElement(family, window)


# ==================== 下降集 ====================

def test_descent_sets_type_a():
    w = GroupElement("A", (2, 1, 3))
    assert descent_set(w).sorted() == (1,)
    assert affine_descent_set(w).sorted() == (0, 1)


def test_descent_sets_type_b_and_c():
    w = GroupElement("B", (-1, 2))
    assert descent_set(w).sorted() == (1,)
    assert affine_descent_set(w).sorted() == (0, 1)
    assert affine_descent_set(GroupElement("C", (-1, 2))).sorted() == (0, 1)
    assert affine_descent_set(GroupElement("C", (1, -2))).sorted() == (2,)


def test_descent_sets_type_d():
    w = GroupElement("D", (-2, -1, 3))
    # w_1 + w_2 < 0 给出颜色 1；w_1 < w_2 不是下降
    assert descent_set(w).sorted() == (1,)
    assert affine_descent_set(w).sorted() == (0, 1)


def test_descent_set_value_object():
    d = DescentSet.from_mask(0b101)
    assert d.sorted() == (0, 2)
    assert len(d) == 2
    assert 2 in d and 1 not in d
    assert d.mask == 0b101


def test_affine_rank_minimum():
    with pytest.raises(DomainError):
        affine_descent_set(GroupElement("D", (1, 2)))
    with pytest.raises(DomainError):
        brute_flag_eulerian("A", 1, affine=True)


def test_type_a_cyclic_invariance():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(2, 8)
        window = list(range(1, n + 1))
        rng.shuffle(window)
        w = GroupElement("A", tuple(window))
        rotated = GroupElement("A", tuple(window[1:] + window[:1]))
        assert len(affine_descent_set(w)) == len(affine_descent_set(rotated))


def test_affine_descents_extend_ordinary():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(2, 6)
        window = list(range(1, n + 1))
        rng.shuffle(window)
        window = [v if rng.random() < 0.5 else -v for v in window]
        w = GroupElement("B", tuple(window))
        ordinary, affine = descent_set(w), affine_descent_set(w)
        assert affine.indices - {0} == ordinary.indices


@pytest.mark.parametrize("family, n", [
    ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4),
])
def test_affine_descent_sets_over_whole_group(family, n):
    # 仿射下降集非空、不是全集，且按多重集在取补下封闭
    rank = coxeter_rank(family, n)
    full = full_mask(rank)
    counts = Counter()
    for w in enumerate_elements(family, n):
        descents = affine_descent_set(w)
        assert 1 <= len(descents) <= rank, str(w)
        counts[descents.mask] += 1
    assert sum(counts.values()) == group_size(family, n)
    for mask, count in counts.items():
        assert counts[full ^ mask] == count


# ==================== 欧拉多项式 ====================

@pytest.mark.parametrize("family, n, coefficients", [
    ("A", 4, (1, 11, 11, 1)),
    ("A", 3, (1, 4, 1)),
    ("B", 2, (1, 6, 1)),
    ("B", 3, (1, 23, 23, 1)),
    ("C", 3, (1, 23, 23, 1)),
    ("D", 3, (1, 11, 11, 1)),
    ("D", 4, (1, 44, 102, 44, 1)),
])
def test_ordinary_eulerian(family, n, coefficients):
    assert brute_eulerian(family, n, affine=False) == Polynomial(coefficients)


@pytest.mark.parametrize("family, n, coefficients", [
    ("A", 3, (0, 3, 3)),
    ("C", 1, (0, 2)),
    ("C", 2, (0, 4, 4)),
    ("B", 3, (0, 10, 28, 10)),
    ("D", 4, (0, 16, 80, 80, 16)),
])
def test_affine_eulerian(family, n, coefficients):
    assert brute_eulerian(family, n, affine=True) == Polynomial(coefficients)


def test_flag_eulerian_c2_and_b2():
    c2 = brute_flag_eulerian("C", 2, affine=True)
    assert c2 == FlagPolynomial.from_terms(2, [((0,), 1), ((1,), 1), ((2,), 2),
                                               ((0, 1), 2), ((0, 2), 1), ((1, 2), 1)])
    b2 = brute_flag_eulerian("B", 2, affine=True)
    assert b2 == FlagPolynomial.from_terms(2, [((0,), 1), ((1,), 2), ((2,), 1),
                                               ((0, 1), 1), ((0, 2), 2), ((1, 2), 1)])


@pytest.mark.parametrize("family, n", [("A", 5), ("B", 4), ("D", 4)])
def test_coefficient_sum_is_group_order(family, n):
    for affine in (False, True):
        assert brute_flag_eulerian(family, n, affine).total() == group_size(family, n)


def test_flag_colors_follow_coxeter_rank():
    assert brute_flag_eulerian("A", 4, affine=True).n == 3
    assert brute_flag_eulerian("D", 4, affine=False).n == 4


def test_parallel_enumeration_matches_serial():
    serial = brute_flag_eulerian("B", 4, affine=True, jobs=1)
    parallel = brute_flag_eulerian("B", 4, affine=True, jobs=2)
    assert serial == parallel


# ==================== 峰统计 ====================

@pytest.mark.parametrize("u, stats", [
    ((2, 3, 1), (1, 1, 1)),
    ((3, 1, 2), (0, 1, 2)),
    ((1, 2, 3), (0, 0, 1)),
    ((1,), (0, 0, 1)),
    ((2, 1, 4, 3), (1, 2, 2)),
])
def test_peak_stats(u, stats):
    assert peak_stats(u) == stats


def test_peak_stats_rejects_bad_words():
    with pytest.raises(InputError):
        peak_stats(())
    with pytest.raises(InputError):
        peak_stats((1, 1))


def test_valleys():
    assert valley_count((3, 1, 2)) == 1
    assert valley_count((1, 2, 3)) == 0
    assert reverse_word((1, 3, 2)) == (2, 3, 1)


@pytest.mark.parametrize("u, weight", [
    ((3, 2, 1), 2),
    ((1, 3, 2), 1),
    ((3, 1, 2), 0),
    ((2, 1), 1),
    ((1, 2), 1),
])
def test_phi(u, weight):
    assert phi_half_weight(u) == weight
    assert phi(u) == Fraction(weight, 2)


def test_phi_requires_two_letters():
    with pytest.raises(DomainError):
        phi((1,))
