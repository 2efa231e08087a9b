from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from earlyexp.exact_core import Interval, nth_root, overlaps, parse_rational, round_down, round_up, to_decimal
from earlyexp.inequalities import Verdict, check_amgm, check_quotient_monotone
from earlyexp.logarithm import ln_enclosure
from earlyexp.powers import pow_rat
from earlyexp.quadrature import riemann_sums

EPS = Fraction(1, 10**9)

positive = st.builds(Fraction, st.integers(1, 60), st.integers(1, 20))
exponent = st.builds(Fraction, st.integers(-15, 15), st.integers(1, 8))
nonneg = st.builds(Fraction, st.integers(0, 40), st.integers(1, 9))
rational = st.fractions(max_denominator=10**6)


@given(rational)
def test_parse_round_trip(x):
    assert parse_rational(str(x)) == x


@given(rational, st.integers(1, 80))
def test_dyadic_rounding_brackets(x, bits):
    assert round_down(x, bits) <= x <= round_up(x, bits)


@given(rational, rational, st.integers(0, 8))
def test_decimal_pair_contains_interval(a, b, digits):
    iv = Interval(min(a, b), max(a, b))
    lo, hi = to_decimal(iv, digits)
    assert Fraction(lo) <= iv.lo and iv.hi <= Fraction(hi)
    assert Fraction(hi) - Fraction(lo) < iv.width + Fraction(2, 10**digits)


@given(rational, rational, rational, rational)
def test_interval_product_contains_point_products(a, b, c, d):
    x, y = Interval(min(a, b), max(a, b)), Interval(min(c, d), max(c, d))
    prod = x * y
    for u in (x.lo, x.hi, x.mid):
        for v in (y.lo, y.hi, y.mid):
            assert prod.contains(u * v)


@given(positive, st.integers(1, 12))
def test_nth_root_encloses(x, n):
    enc = nth_root(x, n, EPS)
    assert enc.width <= EPS
    assert enc.lo**n <= x <= enc.hi**n


@given(positive, exponent, exponent)
def test_sum_law_overlaps(a, x, y):
    assert overlaps(pow_rat(a, x + y, EPS), pow_rat(a, x, EPS).mul_pos(pow_rat(a, y, EPS)))


@given(positive, positive, exponent)
def test_product_law_overlaps(a, b, x):
    assert overlaps(pow_rat(a * b, x, EPS), pow_rat(a, x, EPS).mul_pos(pow_rat(b, x, EPS)))


@given(st.lists(nonneg, min_size=1, max_size=8))
def test_amgm_never_falsified(values):
    assert check_amgm(values, EPS) is not Verdict.FALSIFIED


@given(positive, exponent, exponent)
def test_quotient_monotone_never_falsified(a, h, k):
    if h == 0 or k == 0 or h == k:
        return
    assert check_quotient_monotone(a, min(h, k), max(h, k), EPS) is not Verdict.FALSIFIED


@given(positive, positive)
def test_ln_of_product(a, b):
    eps = Fraction(1, 10**7)
    whole = ln_enclosure(a * b, eps).bracket
    parts = ln_enclosure(a, eps).bracket + ln_enclosure(b, eps).bracket
    assert overlaps(whole, parts)


@given(positive, st.integers(1, 300))
def test_riemann_gap_formula(x, n):
    enc = riemann_sums(x, n)
    if x != 1:
        lo, hi = min(x, Fraction(1)), max(x, Fraction(1))
        assert enc.gap == (hi - lo) * (1 / lo - 1 / hi) / n
    assert enc.lower_sum <= enc.upper_sum
