#!/usr/bin/env python3
"""
验证项测试：小秩下所有恒等式都应成立
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from core.errors import DomainError, InputError, UnsupportedError
from config.settings import get_settings
from core import verify
from core.flag import FlagPolynomial, f_to_h
from core.poly import Polynomial
from core.torus import TorusModel, build, total_cell_count
from core.verify import (
    SERIES_IDENTITIES,
    check_b2_c2,
    check_cyclic,
    check_egf,
    check_egf_table1_row,
    check_exceptional_gamma,
    check_flag_f_enumeration,
    check_flag_formula_A,
    check_flag_formula_B,
    check_flag_formula_C,
    check_flag_formula_D,
    check_gamma_expansion,
    check_gamma_nonnegative,
    check_identity,
    check_partition,
    check_phi_pairing,
    check_realrooted,
    check_series_conventions,
    check_series_identities,
    check_specializations,
    check_table1_row,
    check_torus,
    check_total_cells,
    check_two_path,
    check_valley_lemma,
    check_worked_example,
    current_jobs,
    enumeration_jobs,
    eulerian_polynomial,
    flag_eulerian_polynomial,
)


# ==================== 计算入口 ====================

def test_eulerian_polynomial_methods_agree():
    for method in ("enumerate", "diagram", "egf"):
        assert eulerian_polynomial("B", 3, True, method=method) == Polynomial((0, 10, 28, 10))
    assert eulerian_polynomial("A", 2, False) == Polynomial((1, 4, 1))
    assert eulerian_polynomial("G2", None, True) == Polynomial((0, 6, 6))


def test_flag_eulerian_polynomial_rejects_bad_combinations():
    with pytest.raises(UnsupportedError):
        flag_eulerian_polynomial("B", 3, True, method="egf")
    with pytest.raises(UnsupportedError):
        flag_eulerian_polynomial("E6", None, True, method="enumerate")
    with pytest.raises(InputError):
        flag_eulerian_polynomial("B", None, True)
    with pytest.raises(InputError):
        flag_eulerian_polynomial("B", 3, True, method="guess")
    with pytest.raises(DomainError):
        flag_eulerian_polynomial("G2", 3, True)
    with pytest.raises(UnsupportedError):
        eulerian_polynomial("F4", None, True, method="egf")


def test_flag_eulerian_polynomial_a1():
    assert flag_eulerian_polynomial("A", 1, True, method="diagram") == \
        FlagPolynomial.from_terms(1, [((0,), 1), ((1,), 1)])


# ==================== 恒等式 ====================

@pytest.mark.parametrize("which, n", [
    ("CBC", 2), ("CBC", 4),
    ("BDD", 3), ("BDD", 5),
    ("BDA", 2), ("BDA", 5),
])
def test_identities(which, n):
    result = check_identity(which, n)
    assert result.ok, result.residual
    assert result.residual is None
    assert result.params == {"which": which, "n": n}


def test_identity_rank_minimum():
    with pytest.raises(DomainError):
        check_identity("BDD", 2)
    with pytest.raises(InputError):
        check_identity("XYZ", 3)


@pytest.mark.parametrize("which, n", [("A", 1), ("A", 4), ("C", 1), ("C", 4)])
def test_cyclic(which, n):
    assert check_cyclic(which, n).ok


@pytest.mark.parametrize("which", SERIES_IDENTITIES)
def test_series_identities(which):
    assert check_series_identities(which, 10).ok


# ==================== 多元展开 ====================

@pytest.mark.parametrize("n", [2, 3, 4])
def test_flag_formula_a(n):
    assert check_flag_formula_A(n).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_flag_formula_c(n):
    assert check_flag_formula_C(n).ok


@pytest.mark.parametrize("n", [2, 3])
def test_flag_formula_b(n):
    assert check_flag_formula_B(n).ok


def test_flag_formula_d():
    assert check_flag_formula_D(4).ok
    with pytest.raises(DomainError):
        check_flag_formula_D(3)


@pytest.mark.parametrize("family, n", [("A", 2), ("B", 3), ("C", 2), ("D", 4)])
def test_two_path(family, n):
    assert check_two_path(family, n).ok


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_specializations(n):
    assert check_specializations(n).ok


def test_b2_c2():
    result = check_b2_c2()
    assert result.ok
    assert result.residual is None


# ==================== γ-展开 ====================

@pytest.mark.parametrize("which, n", [
    ("affC", 1), ("affC", 4),
    ("C", 3),
    ("A", 4),
    ("affB", 2), ("affB", 4),
    ("affD", 4),
    ("D", 4),
])
def test_gamma_expansions(which, n):
    result = check_gamma_expansion(which, n)
    assert result.ok, result.residual
    assert not result.informational


def test_gamma_expansion_d3_is_recorded_only():
    assert check_gamma_expansion("D", 3).informational


def test_gamma_expansion_errors():
    with pytest.raises(DomainError):
        check_gamma_expansion("affD", 3)
    with pytest.raises(InputError):
        check_gamma_expansion("E", 3)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_valley_lemma(n):
    assert check_valley_lemma(n).ok


@pytest.mark.parametrize("n", [3, 4, 5])
def test_phi_pairing(n):
    assert check_phi_pairing(n).ok


@pytest.mark.parametrize("name, n", [("affB", 6), ("affD", 6), ("affC", 5), ("D", 5), ("A", 6)])
def test_gamma_nonnegative(name, n):
    assert check_gamma_nonnegative(name, n).ok


@pytest.mark.parametrize("family", ["E6", "F4", "G2"])
def test_exceptional_gamma(family):
    assert check_exceptional_gamma(family).ok


# ==================== 生成函数与实根 ====================

@pytest.mark.parametrize("name", ["A", "BC", "D", "affA", "affB", "affC", "affD"])
def test_egf(name):
    assert check_egf(name, 5).ok


def test_egf_unknown_name():
    with pytest.raises(InputError):
        check_egf("E8", 3)


@pytest.mark.parametrize("which", ["affB", "affD", "D", "A"])
def test_realrooted(which):
    result = check_realrooted(which, 8)
    assert result.ok, result.detail


def test_realrooted_with_longer_order():
    result = check_realrooted("affB", 6, order=10)
    assert result.ok
    assert result.params == {"which": "affB", "n_max": 6, "order": 10}
    assert check_realrooted("D", 5).params["order"] == 5


def test_realrooted_requires_order_at_least_n_max():
    with pytest.raises(DomainError):
        check_realrooted("affD", 9, order=8)


@pytest.mark.parametrize("name", ["A", "BC", "D", "affA", "affB", "affC", "affD"])
def test_series_conventions(name):
    result = check_series_conventions(name)
    assert result.ok, result.detail


def test_series_conventions_unknown_name():
    with pytest.raises(InputError):
        check_series_conventions("G2")


# ==================== 对照表与环面 ====================

@pytest.mark.parametrize("family, rank", [("B", 3), ("D", 7), ("G2", 2), ("F4", 4)])
def test_table1_rows(family, rank):
    assert check_table1_row(family, rank).ok


def test_table1_missing_row():
    with pytest.raises(InputError):
        check_table1_row("B", 2)


@pytest.mark.parametrize("family, rank", [("B", 7), ("D", 4)])
def test_egf_table1_rows(family, rank):
    assert check_egf_table1_row(family, rank).ok


def test_egf_table1_requires_b_or_d():
    with pytest.raises(UnsupportedError):
        check_egf_table1_row("E6", 6)


@pytest.mark.parametrize("family, n", [("A", 2), ("B", 3), ("C", 2), ("D", 4), ("G2", None)])
def test_torus_checks(family, n):
    assert check_torus(family, n).ok
    assert check_total_cells(family, n).ok


@pytest.mark.parametrize("family, n", [("A", 3), ("C", 3)])
def test_flag_f_enumeration_and_partition(family, n):
    assert check_flag_f_enumeration(family, n).ok
    assert check_partition(family, n).ok


@pytest.mark.parametrize("family", ["G2", "F4", "E6"])
def test_total_cells_exceptional(family):
    result = check_total_cells(family)
    assert result.ok, result.detail


def test_total_cells_g2_value():
    # Σ_k a_k·2^{3-k}，Ã G_2 = 6t + 6t^2
    assert total_cell_count(build("G2")) == 6 * 4 + 6 * 2


def test_total_cells_rejects_consistently_scaled_model(monkeypatch):
    # f 与 h 同时放大一倍的模型
    original = build("G2")
    scaled = original.flag_f * 2
    monkeypatch.setattr(verify, "build", lambda family, n=None, reduced=True: TorusModel(
        family=original.family, rank=original.rank, flag_f=scaled, flag_h=f_to_h(scaled)))
    result = check_total_cells("G2")
    assert not result.ok
    assert "|W|" in result.detail


@pytest.mark.parametrize("family, rank, reduced", [("A", 2, True), ("A", 2, False), ("C", 2, True)])
def test_worked_examples(family, rank, reduced):
    result = check_worked_example(family, rank, reduced)
    assert result.ok, result.residual


def test_worked_example_missing():
    with pytest.raises(InputError):
        check_worked_example("B", 5)


# ==================== 枚举进程数 ====================

def test_enumeration_jobs_context():
    default = get_settings().jobs
    assert current_jobs() == default
    with enumeration_jobs(3):
        assert current_jobs() == 3
        with enumeration_jobs(None):
            assert current_jobs() == 3
        with enumeration_jobs(1):
            assert current_jobs() == 1
        assert current_jobs() == 3
    assert current_jobs() == default


def test_enumeration_jobs_restored_after_error():
    with pytest.raises(DomainError):
        with enumeration_jobs(2):
            check_realrooted("A", 5, order=4)
    assert current_jobs() == get_settings().jobs


def test_checks_pass_jobs_to_enumeration(monkeypatch):
    seen = []
    original = verify.brute_flag_eulerian

    def recording(family, n, affine, jobs=1):
        seen.append(jobs)
        return original(family, n, affine, 1)

    monkeypatch.setattr(verify, "brute_flag_eulerian", recording)
    with enumeration_jobs(4):
        assert check_flag_f_enumeration("A", 2).ok
    assert seen == [4]
