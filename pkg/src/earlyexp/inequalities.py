"""AM-GM and monotone difference quotients, checked on enclosures.

Every check returns a :class:`Verdict`. Enclosures of true values can
overlap legitimately, so only ``FALSIFIED`` signals a real contradiction
(and therefore a bug somewhere below).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_core import DomainError, Interval, RationalLike, as_rational, eps_of, nth_root
from .powers import pow_interval_base, pow_rat

__all__ = [
    "Verdict",
    "MeanPair",
    "QuotientBracket",
    "amgm",
    "check_amgm",
    "diff_quotient",
    "diff_quotient_interval",
    "check_quotient_monotone",
    "check_midpoint_convex",
    "compare_below",
]


class Verdict(str, enum.Enum):
    VERIFIED = "verified"
    INCONCLUSIVE = "inconclusive"
    FALSIFIED = "falsified"

    def __str__(self) -> str:
        return self.value


def compare_below(left: Interval, right: Interval, strict: bool = False) -> Verdict:
    """Verdict for the claim ``left <= right`` (``<`` when strict).

    Verified when the enclosures certify it, falsified when they certify the
    opposite strict order, inconclusive otherwise.
    """
    if strict:
        if left.hi < right.lo:
            return Verdict.VERIFIED
        if left.lo >= right.hi:
            return Verdict.FALSIFIED
        return Verdict.INCONCLUSIVE
    if left.hi <= right.lo:
        return Verdict.VERIFIED
    if left.lo > right.hi:
        return Verdict.FALSIFIED
    return Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class MeanPair:
    inputs: tuple[Fraction, ...]
    geometric: Interval
    arithmetic: Fraction


def amgm(values: Sequence[RationalLike], prec) -> MeanPair:
    """Geometric-mean enclosure next to the exact arithmetic mean.

    The product is formed exactly and a single n-th root is taken.
    """
    xs = tuple(as_rational(v) for v in values)
    if not xs:
        raise DomainError("AM-GM needs at least one value")
    if any(v < 0 for v in xs):
        raise DomainError("AM-GM inputs must be nonnegative")
    product = Fraction(1)
    for v in xs:
        product *= v
    return MeanPair(xs, nth_root(product, len(xs), prec), sum(xs) / len(xs))


def check_amgm(values: Sequence[RationalLike], prec) -> Verdict:
    """Check geometric <= arithmetic, strictly when the inputs differ.

    Equal inputs give a point geometric mean (exact root), so the equality
    case is verified outright. For unequal inputs one refinement is made,
    to half the observed gap between the arithmetic mean and the midpoint of
    the geometric enclosure.
    """
    pair = amgm(values, prec)
    arith = Interval.point(pair.arithmetic)
    if pair.geometric.lo > pair.arithmetic:
        return Verdict.FALSIFIED
    if len(set(pair.inputs)) == 1:
        return Verdict.VERIFIED if pair.geometric == arith else Verdict.INCONCLUSIVE
    if pair.geometric.hi < pair.arithmetic:
        return Verdict.VERIFIED
    gap = (pair.arithmetic - pair.geometric.mid) / 2
    eps = eps_of(prec)
    finer = min(eps, gap) if gap > 0 else eps / 2**20
    pair = amgm(values, finer)
    return compare_below(pair.geometric, arith, strict=True)


@dataclass(frozen=True)
class QuotientBracket:
    a: Fraction
    h: Fraction
    quotient: Interval


def diff_quotient(a: RationalLike, h: RationalLike, prec) -> QuotientBracket:
    """Enclose ``(a**h - 1) / h``; a**h is computed to eps*|h| so width <= eps."""
    a, h = as_rational(a), as_rational(h)
    if h == 0:
        raise DomainError("difference quotient needs h != 0")
    power = pow_rat(a, h, eps_of(prec) * abs(h))
    return QuotientBracket(a, h, (power - 1) / h)


def diff_quotient_interval(base: Interval, h: RationalLike, prec) -> Interval:
    """``(x**h - 1) / h`` over every x in a positive interval."""
    h = as_rational(h)
    if h == 0:
        raise DomainError("difference quotient needs h != 0")
    power = pow_interval_base(base, h, eps_of(prec) * abs(h))
    return (power - 1) / h


def check_quotient_monotone(a: RationalLike, h: RationalLike, k: RationalLike, prec) -> Verdict:
    """Check ``(a**h - 1)/h <= (a**k - 1)/k`` for nonzero h < k."""
    h, k = as_rational(h), as_rational(k)
    if h == 0 or k == 0 or h >= k:
        raise DomainError("need nonzero h < k")
    left = diff_quotient(a, h, prec).quotient
    right = diff_quotient(a, k, prec).quotient
    return compare_below(left, right)


def check_midpoint_convex(a: RationalLike, x1: RationalLike, x2: RationalLike, prec) -> Verdict:
    """Check ``a**((x1+x2)/2) <= (a**x1 + a**x2) / 2``."""
    x1, x2 = as_rational(x1), as_rational(x2)
    mid = pow_rat(a, (x1 + x2) / 2, prec)
    chord = (pow_rat(a, x1, prec) + pow_rat(a, x2, prec)) * Fraction(1, 2)
    return compare_below(mid, chord)
