from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cmlens import Changemaker, InvalidInput
from cmlens import coin_game as cg
from cmlens.oracles import (count_plans_brute, t_sigma_brute, t_sigma_exact_brute,
                            t_sigma_row_brute, v_sigma_brute)
from cmlens.surgery import family_sigma

from helpers import random_changemakers


@pytest.mark.parametrize("sigma, m, expected", [((2, 1), 4, 5), ((2, 1), 0, 0), ((1, 1, 1), 3, 3)])
def test_t_sigma_examples(sigma, m, expected):
    assert cg.t_sigma(sigma, m) == expected


def test_t_sigma_family_value():
    assert cg.t_sigma(family_sigma(5), 295) == 625


def test_t_sigma_negative_budget():
    with pytest.raises(InvalidInput):
        cg.t_sigma((1,), -1)


def test_sweep_matches_plan_enumeration():
    for sig in random_changemakers(11, 25, 20):
        row = cg.t_sigma_sweep(sig, 8)
        assert row == [t_sigma_brute(sig.entries, m) for m in range(9)]


def test_exact_sweep_matches_brute():
    for sig in random_changemakers(12, 20, 15):
        row = cg.t_sigma_exact_sweep(sig, 7)
        assert row == [t_sigma_exact_brute(sig.entries, m) for m in range(8)]


def test_plan_helpers():
    assert cg.plan_cost((2, 1)) == 4
    assert cg.plan_value((2, 1), (2, 1)) == 5


@pytest.mark.parametrize("sigma, m, expected", [
    ((2, 1), 2, Fraction(3)), ((2, 1), 0, Fraction(0)),
    ((15, 7, 4, 3, 1, 1, 1, 1, 1), 134, Fraction(268) + Fraction(13, 14)),
])
def test_rational_relaxation(sigma, m, expected):
    assert cg.t_sigma_rational(sigma, m) == expected


@given(st.lists(st.integers(1, 8), min_size=1, max_size=5), st.integers(0, 30))
@settings(max_examples=80, deadline=None)
def test_rational_relaxation_dominates(vals, m):
    assert cg.t_sigma_rational(vals, m) >= cg.t_sigma(vals, m)


@pytest.mark.parametrize("m, expected", [(0, 1), (1, 2), (2, 3), (40, 2070), (100, 157452)])
def test_count_plans(m, expected):
    assert cg.count_plans(m) == expected


def test_count_plans_against_enumeration():
    assert [cg.count_plans(m) for m in range(25)] == [count_plans_brute(m) for m in range(25)]


@pytest.mark.parametrize("sigma, base", [((2, 1), (1, 1, 2, 3, 4)), ((1,), (1,)), ((1, 1, 1), (1, 2, 3))])
def test_v_sigma_table(sigma, base):
    assert cg.v_sigma_table(Changemaker(sigma)).base == base


@pytest.mark.parametrize("i, expected", [(0, 0), (5, 4), (6, 6), (10, 13)])
def test_v_sigma_examples(i, expected):
    table = cg.v_sigma_table(Changemaker((2, 1)))
    assert cg.v_sigma(table, i) == expected
    assert table[i] == expected


def test_v_sigma_against_brute():
    for sig in random_changemakers(13, 15, 12):
        table = cg.v_sigma_table(sig)
        for i in range(3 * sig.p + 1):
            assert table[i] == v_sigma_brute(sig.entries, i)


def test_v_sigma_direct_agrees():
    for sig in random_changemakers(14, 30, 60):
        table = cg.v_sigma_table(sig)
        idx = range(3 * sig.p + 1)
        assert cg.v_sigma_direct(sig, idx) == [table[i] for i in idx]


def test_staircase():
    assert cg.staircase([0, 2, 3, 4, 5], 5) == [1, 1, 2, 3, 4]
    with pytest.raises(InvalidInput):
        cg.staircase([0, 1], 3)


def test_verify_structure_examples():
    rep = cg.verify_structure(Changemaker((2, 1)), 2)
    assert rep.ok, rep.failures()
    assert rep.notes["V_(p-|s|)/2"] == 1
    assert rep.notes["even_equal_partition"] is False
    assert cg.t_sigma((11, 5, 3, 2, 1, 1), 92) == 161
    for k in range(1, 8):
        assert cg.t_sigma((1,) * k, k) == k


def test_verify_structure_random():
    for sig in random_changemakers(15, 40, 80):
        rep = cg.verify_structure(sig, 3)
        assert rep.ok, (sig, rep.failures())


def test_row_brute_oracle_matches_dp_wide():
    for sig in random_changemakers(16, 20, 60):
        assert t_sigma_row_brute(sig.entries, 30) == cg.t_sigma_sweep(sig, 30)
