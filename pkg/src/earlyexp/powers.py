"""Enclosures of rational powers ``a**q`` and of ``x**q`` for x in an interval.

Real exponents are never passed in directly. An irrational power such as
``e**x`` is obtained by raising an enclosure of the irrational base to a
rational exponent, which is all the rest of the package needs.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact_core import (
    ConvergenceError,
    DomainError,
    Interval,
    RationalLike,
    as_rational,
    bits_for,
    eps_of,
    log2_floor,
    nth_root,
    round_down,
    round_up,
)

__all__ = ["pow_rat", "pow_interval_base", "pow_interval_int", "def1_lower_samples"]

# a**p is formed exactly when its numerator and denominator stay below this size
EXACT_POWER_BITS = 1 << 14


def _positive(a: RationalLike) -> Fraction:
    a = as_rational(a)
    if a <= 0:
        raise DomainError(f"base must be strictly positive, got {a}")
    return a


def pow_interval_int(base: Interval, p: int, bits: int) -> Interval:
    """Enclose ``x**p`` for all x in a positive interval, p >= 0.

    Binary exponentiation; after every multiplication the lower endpoint is
    rounded down and the upper endpoint up to ``bits`` significant bits.
    """
    if base.lo <= 0:
        raise DomainError("pow_interval_int needs a strictly positive interval")
    lo_acc, hi_acc = Fraction(1), Fraction(1)
    lo_sq, hi_sq = base.lo, base.hi
    while p:
        if p & 1:
            lo_acc = round_down(lo_acc * lo_sq, bits)
            hi_acc = round_up(hi_acc * hi_sq, bits)
        p >>= 1
        if p:
            lo_sq = round_down(lo_sq * lo_sq, bits)
            hi_sq = round_up(hi_sq * hi_sq, bits)
    return Interval(lo_acc, hi_acc)


def _pow_root_first(a: Fraction, p: int, n: int, eps: Fraction) -> Interval:
    # Route for huge |p|: enclose a**(1/n), then raise the enclosure to |p|.
    lg = abs(log2_floor(a)) + 1
    q_abs = Fraction(abs(p), n)
    value_bits = math.ceil(q_abs * lg) + 1  # 2**value_bits bounds max(a**q, a**-q)
    root_bits = lg // n + 1
    rel = eps / (4 * abs(p)) / 2**value_bits
    bits = bits_for(rel) + abs(p).bit_length() + 8
    for _ in range(16):
        root = nth_root(a, n, rel / 2**root_bits)
        power = pow_interval_int(root, abs(p), bits)
        if p < 0:
            inv = power.recip_pos()
            power = Interval(round_down(inv.lo, bits), round_up(inv.hi, bits))
        if power.width <= eps:
            return power
        rel /= 1 << 16
        bits += 16
    raise ConvergenceError(f"pow_rat({a}, {p}/{n}) did not reach width {eps}", power)


def pow_rat(a: RationalLike, q: RationalLike, prec) -> Interval:
    """Enclose ``a**q`` for rational a > 0 and rational q, width <= eps.

    ``q = p/n`` in lowest terms; normally ``a**p`` is formed exactly and its
    n-th root enclosed, giving a point interval whenever the result is
    rational.
    """
    a = _positive(a)
    q = as_rational(q)
    eps = eps_of(prec)
    if q == 0 or a == 1:
        return Interval.point(1)
    p, n = q.numerator, q.denominator
    size = abs(p) * max(a.numerator.bit_length(), a.denominator.bit_length())
    if size <= EXACT_POWER_BITS:
        return nth_root(a**p, n, eps)
    return _pow_root_first(a, p, n, eps)


def pow_interval_base(base, q: RationalLike, prec) -> Interval:
    """Enclose ``x**q`` for every x in ``base`` (an Interval with lo > 0).

    Uses monotonicity in the base: increasing for q > 0, decreasing for q < 0.
    """
    if not isinstance(base, Interval):
        base = Interval.point(_positive(base))
    if base.lo <= 0:
        raise DomainError("interval base must be strictly positive")
    q = as_rational(q)
    eps = eps_of(prec)
    if base.is_point:
        return pow_rat(base.lo, q, eps)
    if q >= 0:
        return Interval(pow_rat(base.lo, q, eps).lo, pow_rat(base.hi, q, eps).hi)
    return Interval(pow_rat(base.hi, q, eps).lo, pow_rat(base.lo, q, eps).hi)


def def1_lower_samples(a: RationalLike, x: RationalLike, count: int, prec=None) -> list[Fraction]:
    """Certified lower bounds for ``a**q_i`` with ``q_i = x - 2**-i`` rising to x.

    Each entry is a lower bound for ``a**x`` as well (a > 1), and the list is
    nondecreasing: a running maximum is taken, which stays a valid lower
    bound because ``a**q`` increases with q. Without ``prec`` the i-th sample
    is computed to width ``2**-(i + 16)``.
    """
    a = _positive(a)
    if a <= 1:
        raise DomainError("supremum samples need a base greater than 1")
    x = as_rational(x)
    out: list[Fraction] = []
    best = Fraction(0)
    for i in range(1, count + 1):
        q = x - Fraction(1, 2**i)
        eps = eps_of(prec) if prec is not None else Fraction(1, 2 ** (i + 16))
        best = max(best, pow_rat(a, q, eps).lo)
        out.append(best)
    return out
