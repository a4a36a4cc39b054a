from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab import PrecisionMismatch, TruncatedSeries, series_exp, series_log


def exp_by_partial_sums(s: TruncatedSeries) -> TruncatedSeries:
    """Oracle: sum_{k<=N} s^k / k! via repeated series multiplication."""
    n = s.precision
    acc = TruncatedSeries.one(n)
    power = TruncatedSeries.one(n)
    fact = 1
    for k in range(1, n + 1):
        power = power * s
        fact *= k
        acc = acc + power.scale(Fraction(1, fact))
    return acc


def test_exp_zero():
    assert series_exp(TruncatedSeries.zero(4)) == TruncatedSeries.one(4)


def test_exp_t():
    got = series_exp(TruncatedSeries([0, 1, 0, 0], 3))
    assert got == TruncatedSeries([1, 1, Fraction(1, 2), Fraction(1, 6)], 3)


def test_exp_geometric_ghosts():
    # exp(sum 2^n t^n / n) = 1/(1-2t)
    s = TruncatedSeries([0] + [Fraction(2**n, n) for n in range(1, 4)], 3)
    got = series_exp(s)
    assert got == TruncatedSeries([1, 2, 4, 8], 3)
    assert got == exp_by_partial_sums(s)


def test_exp_requires_zero_constant():
    with pytest.raises(ValueError):
        series_exp(TruncatedSeries.one(3))


def test_log_one():
    assert series_log(TruncatedSeries.one(4)) == TruncatedSeries.zero(4)


def test_log_geometric():
    got = series_log(TruncatedSeries([1, 1, 1, 1], 3))
    assert got == TruncatedSeries([0, 1, Fraction(1, 2), Fraction(1, 3)], 3)


def test_log_product_of_linear_factors():
    # (1-t)(1-2t) = 1 - 3t + 2t^2; log = -sum (1 + 2^n) t^n / n
    s = TruncatedSeries([1, -3, 2, 0], 3)
    expect = TruncatedSeries(
        [0, -3, Fraction(-5, 2), -3], 3
    )
    assert series_log(s) == expect


def test_log_requires_constant_one():
    with pytest.raises(ValueError):
        series_log(TruncatedSeries([2, 0], 1))


def test_precision_mismatch():
    with pytest.raises(PrecisionMismatch):
        TruncatedSeries.one(3) * TruncatedSeries.one(4)


def test_inverse():
    s = TruncatedSeries([1, -2, 0, 0, 0], 4)
    assert s.inverse() == TruncatedSeries([1, 2, 4, 8, 16], 4)
    assert s * s.inverse() == TruncatedSeries.one(4)


small_fracs = st.fractions(
    min_value=-3, max_value=3, max_denominator=3
)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_fracs, min_size=8, max_size=8))
def test_exp_log_mutually_inverse(tail):
    s = TruncatedSeries([Fraction(0)] + tail, 8)
    assert series_log(series_exp(s)) == s
    w = TruncatedSeries([Fraction(1)] + tail, 8)
    assert series_exp(series_log(w)) == w


@settings(max_examples=40, deadline=None)
@given(st.lists(small_fracs, min_size=6, max_size=6))
def test_exp_matches_partial_sum_oracle(tail):
    s = TruncatedSeries([Fraction(0)] + tail, 6)
    assert series_exp(s) == exp_by_partial_sums(s)
