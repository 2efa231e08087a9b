"""e and e**x by three independent routes.

* ``compute_e``: bisection on ``ln a = 1`` over ``[2, 3]``, using that ln is
  strictly increasing; the starting bracket is certified by the quotients
  ``2(sqrt 2 - 1) < 1`` and ``6(1 - 3**(-1/6)) > 1``.
* ``exp_series``: Taylor partial sums with the Lagrange remainder bound,
  whose unknown factor ``max(1, e**x)`` is replaced by ``3**ceil(x)``.
* ``exp_pow``: the e enclosure raised to a rational power.

``compound_value`` gives the exact rationals ``(1 + x/n)**n``, which are
compared against the other routes rather than trusted as an enclosure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2

from .exact_core import (
    ConvergenceError,
    DomainError,
    Interval,
    RationalLike,
    as_rational,
    bits_for,
    eps_of,
)
from .inequalities import diff_quotient, diff_quotient_interval
from .logarithm import ln_enclosure
from .powers import pow_interval_base

__all__ = [
    "EulerEnclosure",
    "SeriesState",
    "initial_bracket_certificate",
    "compute_e",
    "series_state",
    "remainder_bound",
    "exp_series",
    "e_precision_for",
    "exp_pow",
    "compound_value",
    "exp_derivative_bracket",
]


@dataclass(frozen=True)
class EulerEnclosure:
    bracket: Interval
    iterations: int


@dataclass(frozen=True)
class SeriesState:
    x: Fraction
    partial_sum: Fraction
    terms_used: int
    remainder_bound: Fraction


def initial_bracket_certificate(prec=Fraction(1, 10**4)) -> tuple[Interval, Interval]:
    """Enclosures of ``2(sqrt 2 - 1)`` (>= ln 2) and ``6(1 - 3**(-1/6))`` (<= ln 3)."""
    upper_ln2 = diff_quotient(2, Fraction(1, 2), prec).quotient
    lower_ln3 = diff_quotient(3, Fraction(-1, 6), prec).quotient
    return upper_ln2, lower_ln3


def compute_e(prec, *, max_iterations: int = 400) -> EulerEnclosure:
    """Bracket ``[lo, hi]`` around e with width <= eps, ``ln lo < 1 < ln hi`` certified.

    Results are cached per eps; the cache is safe to share between threads.
    """
    return _compute_e(eps_of(prec), max_iterations)


@lru_cache(maxsize=64)
def _compute_e(eps: Fraction, max_iterations: int) -> EulerEnclosure:
    upper_ln2, lower_ln3 = initial_bracket_certificate()
    if not (upper_ln2.hi < 1 < lower_ln3.lo):
        raise RuntimeError("initial bracket [2, 3] for e could not be certified")
    lo, hi = Fraction(2), Fraction(3)
    iterations = 0
    while hi - lo > eps:
        if iterations >= max_iterations:
            raise ConvergenceError("bisection for e hit its iteration cap", Interval(lo, hi))
        mid = (lo + hi) / 2
        delta = eps / 8
        for _ in range(32):
            ln_mid = ln_enclosure(mid, delta).bracket
            if ln_mid.hi < 1:
                lo = mid
                break
            if ln_mid.lo > 1:
                hi = mid
                break
            delta /= 16
        else:
            raise ConvergenceError(f"could not decide the sign of ln({mid}) - 1", Interval(lo, hi))
        iterations += 1
    return EulerEnclosure(Interval(lo, hi), iterations)


def _majorant(x: Fraction) -> Fraction:
    # e**xi <= max(1, e**x) <= 3**ceil(x) because e < 3
    return Fraction(1) if x <= 0 else Fraction(3 ** math.ceil(x))


def remainder_bound(x: RationalLike, n: int) -> Fraction:
    """Bound on the Taylor remainder after the terms of degree 0..n."""
    x = as_rational(x)
    return _majorant(x) * abs(x) ** (n + 1) / math.factorial(n + 1)


def series_state(x: RationalLike, n: int) -> SeriesState:
    x = as_rational(x)
    total, term = Fraction(0), Fraction(1)
    for k in range(n + 1):
        if k:
            term = term * x / k
        total += term
    return SeriesState(x, total, n, remainder_bound(x, n))


def exp_series(x: RationalLike, prec) -> Interval:
    """``[S_n - R_n, S_n + R_n]`` with n grown until the width ``2 R_n <= eps``."""
    x = as_rational(x)
    eps = eps_of(prec)
    majorant = _majorant(x)
    total, term = Fraction(1), Fraction(1)
    n = 0
    while True:
        power_over_fact = abs(term) * abs(x) / (n + 1)  # |x|**(n+1)/(n+1)!
        bound = majorant * power_over_fact
        if 2 * bound <= eps:
            return Interval(total - bound, total + bound)
        n += 1
        term = term * x / n
        total += term


def e_precision_for(x: RationalLike, prec) -> Fraction:
    """Width requested from ``compute_e`` when computing ``e**x`` to eps.

    Always a power of two, so that nearby calls share cached brackets.
    """
    x, eps = as_rational(x), eps_of(prec)
    sensitivity = abs(x) * 3 ** math.ceil(max(x, 0)) + 1
    return Fraction(1, 2 ** bits_for(eps / (4 * sensitivity)))


def exp_pow(x: RationalLike, prec) -> Interval:
    """Enclose e**x as (e enclosure)**x."""
    x = as_rational(x)
    eps = eps_of(prec)
    if x == 0:
        return Interval.point(1)
    delta = e_precision_for(x, eps)
    for _ in range(16):
        e_bracket = compute_e(delta).bracket
        result = pow_interval_base(e_bracket, x, eps / 4)
        if result.width <= eps:
            return result
        delta /= 1 << 8
    raise ConvergenceError(f"exp_pow({x}) did not reach width {eps}", result)


def _from_coprime(num: int, den: int) -> Fraction:
    # skip the gcd: it is slow on multi-megabit integers and known to be 1
    try:
        return Fraction._from_coprime_ints(num, den)
    except AttributeError:
        return Fraction(num, den, _normalize=False)


def compound_value(x: RationalLike, n: int) -> Fraction:
    """Exact ``(1 + x/n)**n``."""
    x = as_rational(x)
    if not isinstance(n, int) or n < 1:
        raise DomainError("n must be a positive integer")
    base = 1 + x / n
    if base <= 0:
        raise DomainError(f"1 + x/n must be positive, got {base}")
    if n < 1024:
        return base**n
    num = int(gmpy2.mpz(base.numerator) ** n)
    den = int(gmpy2.mpz(base.denominator) ** n)
    return _from_coprime(num, den)


def exp_derivative_bracket(x0: RationalLike, k: int, prec) -> tuple[Interval, Interval, Interval]:
    """``(lower, e**x0, upper)`` at step h = 2**-k.

    ``lower`` and ``upper`` are ``e**x0`` times the difference quotients of
    the e enclosure at -h and +h; the derivative of e**x at x0 lies between
    ``lower.lo`` and ``upper.hi``.
    """
    x0 = as_rational(x0)
    eps = eps_of(prec)
    h = Fraction(1, 2**k)
    value = exp_pow(x0, eps)
    e_bracket = compute_e(e_precision_for(1, eps * h)).bracket
    lower = value * diff_quotient_interval(e_bracket, -h, eps)
    upper = value * diff_quotient_interval(e_bracket, h, eps)
    return lower, value, upper
