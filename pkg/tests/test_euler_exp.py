from fractions import Fraction

import pytest

from earlyexp.euler_exp import (
    compound_value,
    compute_e,
    e_precision_for,
    exp_derivative_bracket,
    exp_pow,
    exp_series,
    initial_bracket_certificate,
    remainder_bound,
    series_state,
)
from earlyexp.exact_core import DomainError, Interval, overlaps
from oracles import e_reference, exp_reference, frozen

EPS = Fraction(1, 10**10)


def test_initial_certificate():
    upper_ln2, lower_ln3 = initial_bracket_certificate()
    assert upper_ln2.hi < 1 < lower_ln3.lo


def test_compute_e():
    enc = compute_e(EPS)
    assert enc.bracket.width <= EPS
    assert enc.bracket.contains(frozen("e"))
    lo, hi = e_reference()
    assert enc.bracket.lo <= lo and hi <= enc.bracket.hi


def test_series_state_and_remainder():
    state = series_state(1, 3)
    assert state.partial_sum == Fraction(8, 3)
    assert state.remainder_bound == Fraction(3, 24)
    assert remainder_bound(-1, 3) == Fraction(1, 24)


@pytest.mark.parametrize("key,x", [("e", 1), ("exp1/3", Fraction(1, 3)), ("exp-2", -2), ("exp2", 2)])
def test_exp_series(key, x):
    enc = exp_series(x, EPS)
    assert enc.width <= EPS
    assert enc.contains(frozen(key))


@pytest.mark.parametrize("x", [Fraction(-3, 2), Fraction(1, 3), 2])
def test_exp_pow_agrees_with_series_and_reference(x):
    x = Fraction(x)
    enc = exp_pow(x, EPS)
    assert enc.width <= EPS
    assert overlaps(enc, exp_series(x, EPS))
    lo, hi = exp_reference(x)
    assert overlaps(enc, Interval(lo, hi))


def test_e_precision_is_power_of_two():
    p = e_precision_for(Fraction(5, 2), EPS)
    assert p.numerator == 1 and p.denominator & (p.denominator - 1) == 0


def test_compound_values():
    assert compound_value(1, 1) == 2
    assert compound_value(1, 2) == Fraction(9, 4)
    assert compound_value(-1, 2) == Fraction(1, 4)
    big = compound_value(1, 4096)
    assert big == (1 + Fraction(1, 4096)) ** 4096
    with pytest.raises(DomainError):
        compound_value(-4, 2)
    with pytest.raises(DomainError):
        compound_value(1, 0)


def test_exp_derivative_bracket():
    lower, value, upper = exp_derivative_bracket(1, 8, EPS)
    assert lower.lo <= frozen("e") <= upper.hi
    assert value.contains(frozen("e"))
    assert upper.hi - lower.lo < Fraction(1, 50)


def test_ten_term_remainder():
    from math import factorial

    assert remainder_bound(1, 10) == Fraction(3, factorial(11)) < Fraction(1, 10**7)
    assert exp_series(0, EPS) == Interval.point(1)
