from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from goldbach_lab.formulas import (
    DIVIDES,
    NOT_DIVIDES,
    asymptotic_only_by,
    asymptotic_only_by_exact,
    breakdown_report,
    formula_divisible,
    formula_table,
)
from goldbach_lab.pairs import divisible_pair_count
from goldbach_lab.sieve import sieve_bound

TABLE_998_FORMULA = (330, 198, 140, 88, 74, 56, 50, 42, 32, 30)


def test_formula_divides_examples():
    v = formula_divisible(990, 3)
    assert (v.case, v.value, v.exact) == (DIVIDES, 165, True)
    assert formula_divisible(990, 5).value == 99


def test_formula_not_divides_examples():
    v = formula_divisible(994, 5)
    assert (v.case, v.value) == (NOT_DIVIDES, 196)
    assert formula_divisible(998, 7).value == 140
    assert formula_divisible(998, 3).value == 330


def test_formula_clamps_to_zero_past_the_universe():
    # floor goes negative once (p-1)/2 exceeds P
    v = formula_divisible(10, 11)
    assert v.value == 0


def test_formula_rejects_bad_p():
    with pytest.raises(ValueError):
        formula_divisible(990, 15)


def test_formula_table_998():
    values = formula_table(998)
    assert [v.p for v in values] == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert tuple(v.value for v in values) == TABLE_998_FORMULA


def test_formula_table_extends_on_request():
    values = formula_table(998, through_prime=37)
    assert values[-1].p == 37
    assert values[-1].value == 24


def test_formula_table_small_n():
    assert formula_table(8) == []
    values = formula_table(12)
    assert [(v.p, v.value) for v in values] == [(3, 2)]
    assert divisible_pair_count(12, 3) == 2  # pairs (3,9) and (9,3)


def test_divides_case_is_always_exact():
    for n in range(6, 2000, 2):
        for p in (3, 5, 7, 11, 13):
            if n % p == 0:
                v = formula_divisible(n, p)
                assert v.exact
                assert v.value * 2 * p == n


def test_asymptotic_examples():
    assert asymptotic_only_by_exact(998, 5) == Fraction(994, 15)
    assert round(asymptotic_only_by(998, 5), 2) == 66.27
    assert asymptotic_only_by_exact(998, 3) == Fraction(994, 3)
    assert asymptotic_only_by_exact(998, 7) == Fraction(142, 5)
    assert asymptotic_only_by(998, 7) == 28.4


def test_asymptotic_rejects_dividing_prime():
    with pytest.raises(ValueError):
        asymptotic_only_by(990, 3)


def test_breakdown_report_joins_routes():
    report = breakdown_report(998)
    assert report.total == 464
    assert tuple(row[1] for row in report.rows) == TABLE_998_FORMULA
    for p, formula, divisible, only_by in report.rows:
        assert divisible == divisible_pair_count(998, p)
        assert only_by <= divisible


@given(st.integers(min_value=5, max_value=1000).map(lambda k: 2 * k), st.sampled_from([3, 5, 7, 11, 13]))
@settings(max_examples=80)
def test_formula_parity_and_deviation(n, p):
    if p > sieve_bound(n):
        return
    v = formula_divisible(n, p)
    if v.case == NOT_DIVIDES:
        assert v.value % 2 == 0
    assert abs(v.value - brute.divisible_count(n, p)) <= 2
