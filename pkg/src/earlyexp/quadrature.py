"""ln x as the area under 1/t, enclosed by Riemann sums.

On a uniform partition of ``[1, x]`` (x > 1) the decreasing integrand makes
right-endpoint sums a lower bound and left-endpoint sums an upper bound.
The two differ by exactly ``(x - 1)(1 - 1/x) / N``, so N can be read off
directly from the requested width.

Small partitions are summed in exact rationals. Large ones are summed in
fixed point with numpy: each term ``c / D_i`` is floored to a dyadic with
28-bit limbs of integer long division, so ``sum(floor) <= S <= sum(floor) + N
ulp``. The upper sum is then recovered from the exact gap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact_core import DomainError, Interval, RationalLike, as_rational, bits_for, eps_of

__all__ = ["RiemannEnclosure", "gap_coefficient", "riemann_sums", "ln_integral"]

EXACT_TERMS = 2048
_LIMB = 28
_CHUNK = 1 << 21
_MAX_DENOM = 1 << 35  # keeps remainder << 28 inside int64


@dataclass(frozen=True)
class RiemannEnclosure:
    """Riemann sums of 1/t over ``[min(x, 1), max(x, 1)]`` with N pieces.

    ``exact`` is False when the sums were computed in fixed point; then
    ``lower_sum`` and ``upper_sum`` are outward-rounded bounds of the true
    right- and left-endpoint sums.
    """

    x: Fraction
    subintervals: int
    lower_sum: Fraction
    upper_sum: Fraction
    exact: bool = True

    @property
    def gap(self) -> Fraction:
        return self.upper_sum - self.lower_sum

    @property
    def interval(self) -> Interval:
        return Interval(self.lower_sum, self.upper_sum)


def gap_coefficient(x: RationalLike) -> Fraction:
    """``N * (upper - lower)`` for a uniform partition between 1 and x."""
    x = as_rational(x)
    a, b = min(x, Fraction(1)), max(x, Fraction(1))
    return (b - a) * (1 / a - 1 / b)


def _term_parameters(x: Fraction) -> tuple[int, int]:
    # right-endpoint term i of the partition is c / (d0 + i*c), i = 1..N
    p, q = x.numerator, x.denominator
    if x > 1:
        return p - q, q
    return q - p, p


def _exact_sums(x: Fraction, n: int) -> RiemannEnclosure:
    c, d = _term_parameters(x)
    d0 = n * d
    lower = sum((Fraction(c, d0 + i * c) for i in range(1, n + 1)), Fraction(0))
    upper = lower + Fraction(c, d0) - Fraction(c, d0 + n * c)
    return RiemannEnclosure(x, n, lower, upper, True)


def _fixed_point_floor_sum(c: int, d0: int, n: int, limbs: int) -> int:
    """``sum_i floor(c * 2**(28*limbs) / (d0 + i*c))`` for i = 1..n."""
    total = 0
    weights = [1 << (_LIMB * (limbs - j - 1)) for j in range(limbs)]
    for start in range(1, n + 1, _CHUNK):
        stop = min(n + 1, start + _CHUNK)
        denom = d0 + np.arange(start, stop, dtype=np.int64) * c
        rem = np.full(denom.shape, c, dtype=np.int64)
        for weight in weights:
            digit, rem = np.divmod(rem << _LIMB, denom)
            total += int(digit.sum()) * weight
    return total


def _fixed_point_sums(x: Fraction, n: int, frac_bits: int) -> RiemannEnclosure:
    c, d = _term_parameters(x)
    d0 = n * d
    limbs = -(-frac_bits // _LIMB)
    scale = 1 << (_LIMB * limbs)
    floor_sum = _fixed_point_floor_sum(c, d0, n, limbs)
    gap = Fraction(c, d0) - Fraction(c, d0 + n * c)
    lower = Fraction(floor_sum, scale)
    upper = Fraction(floor_sum + n, scale) + gap
    return RiemannEnclosure(x, n, lower, upper, False)


def riemann_sums(x: RationalLike, n: int, *, exact: bool | None = None) -> RiemannEnclosure:
    """Lower/upper Riemann sums of 1/t between 1 and x on n equal pieces.

    By default small n are summed exactly and large n in fixed point, with
    rounding kept to at most a quarter of the exact gap; doubling n
    therefore never widens the enclosure.
    """
    x = as_rational(x)
    if x <= 0:
        raise DomainError("Riemann sums of 1/t need x > 0")
    if n < 1:
        raise DomainError("need at least one subinterval")
    if x == 1:
        return RiemannEnclosure(x, n, Fraction(0), Fraction(0), True)
    if exact is None:
        exact = n <= EXACT_TERMS
    c, d = _term_parameters(x)
    if exact or n * d + n * c >= _MAX_DENOM:
        return _exact_sums(x, n)
    gap = gap_coefficient(x) / n
    frac_bits = bits_for(gap / (4 * n))
    return _fixed_point_sums(x, n, frac_bits)


def _direct(x: Fraction, eps: Fraction) -> Interval:
    # fixed-point rounding may add up to gap/4, so aim the gap at 4/5 of eps
    n = max(1, -(-gap_coefficient(x) * 5 // (4 * eps)))
    return riemann_sums(x, n).interval


def ln_integral(x: RationalLike, prec) -> Interval:
    """Enclose ``integral_1^x dt/t`` with width <= eps.

    For x < 1 the result is the negation of the enclosure for 1/x: the sums
    over ``[x, 1]`` and ``[1, 1/x]`` coincide term by term, since 1/t sums
    are invariant under rescaling the partition. Arguments of 4 or more are
    first reduced with ``ln x = ln(x / 2**k) + k ln 2``.
    """
    x = as_rational(x)
    eps = eps_of(prec)
    if x <= 0:
        raise DomainError("ln_integral needs x > 0")
    if x == 1:
        return Interval.point(0)
    if x < 1:
        return -ln_integral(1 / x, eps)
    if x < 4:
        return _direct(x, eps)
    k = (x.numerator // x.denominator).bit_length() - 1
    reduced = x / 2**k
    if reduced == 1:
        return ln_integral(2, eps / k) * k
    return _direct(reduced, eps / 2) + ln_integral(2, eps / (2 * k)) * k
