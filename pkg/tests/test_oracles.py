from fractions import Fraction

import pytest

from oracles import FROZEN, e_reference, exp_reference, frozen, ln_reference

W = Fraction(1, 10**32)


@pytest.mark.parametrize("key,x", [("ln2", 2), ("ln3", 3), ("ln5", 5), ("ln10", 10), ("ln3/7", Fraction(3, 7))])
def test_ln_reference_matches_frozen(key, x):
    lo, hi = ln_reference(Fraction(x), W)
    assert lo <= frozen(key) + W and frozen(key) - W <= hi


def test_e_reference_matches_frozen():
    lo, hi = e_reference()
    assert lo - W <= frozen("e") <= hi + W


@pytest.mark.parametrize("key,x", [("exp1/3", Fraction(1, 3)), ("exp-2", Fraction(-2)), ("exp2", Fraction(2))])
def test_exp_reference_matches_frozen(key, x):
    lo, hi = exp_reference(x)
    assert lo - W <= frozen(key) <= hi + W


def test_frozen_table_is_complete():
    assert len(FROZEN) == 10
