"""Natural logarithm as the slope of ``a**x`` at 0, and logarithms to any base.

``ln a`` is squeezed between the difference quotients at ``-h`` and ``+h``.
Those quotients are monotone in h, so every stage of the halving sequence
``h = 2**-k`` gives a valid bracket and the brackets shrink towards ``ln a``.
``log_b x`` is found independently, by bisection on the exponent of ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_core import (
    ConvergenceError,
    DomainError,
    Interval,
    RationalLike,
    as_rational,
    bits_for,
    eps_of,
    intersect,
    log2_floor,
    root_bounds,
)
from .inequalities import Verdict, compare_below, diff_quotient
from .powers import pow_interval_base, pow_rat

__all__ = [
    "LnEnclosure",
    "ln_enclosure",
    "ln_interval",
    "log_enclosure",
    "quotient_strictly_increasing_in_base",
    "slope_bracket",
    "check_log_derivative",
]

MAX_HALVINGS = 64


@dataclass(frozen=True)
class LnEnclosure:
    a: Fraction
    bracket: Interval
    h_final: Fraction
    iterations: int


def _sqrt_interval(interval: Interval, bits: int) -> Interval:
    return Interval(root_bounds(interval.lo, 2, bits)[0], root_bounds(interval.hi, 2, bits)[1])


def ln_enclosure(a: RationalLike, prec, *, max_halvings: int = MAX_HALVINGS) -> LnEnclosure:
    """Enclose ln a between the quotients at -h and +h, halving h until width <= eps.

    ``a**(2**-k)`` and ``a**(-2**-k)`` are carried along by repeated interval
    square roots, so each halving costs two square roots. Each stage is
    intersected with the previous bracket, which keeps the sequence nested.
    If rounding in the square roots starts to dominate, the whole sequence
    restarts at higher working precision (earlier brackets are kept).
    """
    a = as_rational(a)
    if a <= 0:
        raise DomainError(f"ln needs a > 0, got {a}")
    eps = eps_of(prec)
    if a == 1:
        return LnEnclosure(a, Interval.point(0), Fraction(1), 0)

    magnitude = abs(log2_floor(a)) + 1
    bits = 2 * bits_for(eps) + 2 * magnitude.bit_length() + 16
    bracket: Interval | None = None
    iterations = 0
    for _ in range(8):
        up = Interval.point(a)
        down = Interval.point(1 / a)
        h = Fraction(1)
        for k in range(max_halvings + 1):
            if k:
                h /= 2
                up = _sqrt_interval(up, bits)
                down = _sqrt_interval(down, bits)
            iterations += 1
            # (a**-h - 1)/(-h) below, (a**h - 1)/h above
            stage = Interval((1 - down.hi) / h, (up.hi - 1) / h)
            bracket = stage if bracket is None else intersect(bracket, stage)
            if bracket is None:
                raise RuntimeError(f"ln brackets for {a} became disjoint; difference quotients are broken")
            if bracket.width <= eps:
                return LnEnclosure(a, bracket, h, iterations)
            if (up.width + down.width) / h > eps / 4:
                break
        else:
            raise ConvergenceError(f"ln({a}) not within {eps} after {max_halvings} halvings", bracket)
        bits += max(16, bits // 2)
    raise ConvergenceError(f"ln({a}) did not converge", bracket)


def ln_interval(arg: Interval, prec) -> Interval:
    """ln over an interval argument: hull of the endpoint enclosures (ln is increasing)."""
    if arg.lo <= 0:
        raise DomainError("ln of an interval that is not strictly positive")
    lo = ln_enclosure(arg.lo, prec).bracket
    hi = lo if arg.is_point else ln_enclosure(arg.hi, prec).bracket
    return Interval(lo.lo, hi.hi)


def _power_side(base: Interval, y: Fraction, x: Fraction, tol: Fraction, rounds: int = 5):
    """-1 if base**y <= x throughout, +1 if >= x throughout, 0 if exactly x, None if undecided."""
    for _ in range(rounds):
        power = pow_interval_base(base, y, tol)
        if power.is_point and power.lo == x:
            return 0
        if power.hi <= x:
            return -1
        if power.lo >= x:
            return 1
        tol /= 1 << 12
    return None


def log_enclosure(base, x: RationalLike, prec) -> Interval:
    """Enclose ``log_b x`` for every b in ``base`` by bisection on the exponent.

    ``base`` may be a rational or an Interval; it must lie entirely above or
    entirely below 1. The returned ``[y_lo, y_hi]`` satisfies
    ``b**y_lo <= x <= b**y_hi`` for every b in the base (order reversed for
    bases below 1). The starting bracket ``[-n, n]`` is certified with the
    Bernoulli bound ``b**n >= 1 + n(b - 1)``.

    The base interval must be narrow enough for the requested eps; otherwise
    some comparison stays undecided and ConvergenceError carries the best
    bracket found.
    """
    if not isinstance(base, Interval):
        base = Interval.point(as_rational(base))
    x = as_rational(x)
    eps = eps_of(prec)
    if base.lo <= 0:
        raise DomainError("logarithm base must be positive")
    if x <= 0:
        raise DomainError("logarithm argument must be positive")
    if base.lo <= 1 <= base.hi:
        raise DomainError("logarithm base must exclude 1")
    if base.hi < 1:
        return -log_enclosure(base.recip_pos(), x, eps)

    step = base.lo - 1
    n = 1
    while not (1 + n * step > x and 1 + n * step > 1 / x):
        n *= 2
    lo, hi = Fraction(-n), Fraction(n)
    # slope of b**y near the root is x ln b, and ln b >= 1 - 1/b
    tol = x * eps * (1 - 1 / base.lo) / 32
    while hi - lo > eps:
        w = hi - lo
        for y in (lo + w / 2, lo + 3 * w / 8, lo + 5 * w / 8):
            side = _power_side(base, y, x, tol)
            if side is not None:
                break
        else:
            raise ConvergenceError(
                f"log of {x} undecidable at width {w}: base interval too wide", Interval(lo, hi)
            )
        if side == 0:
            return Interval.point(y)
        if side < 0:
            lo = y
        else:
            hi = y
    return Interval(lo, hi)


def quotient_strictly_increasing_in_base(
    a: RationalLike, b: RationalLike, h: RationalLike, prec
) -> Verdict:
    """Check ``(a**h - 1)/h < (b**h - 1)/h`` for 0 < a < b and fixed h != 0."""
    a, b = as_rational(a), as_rational(b)
    if not 0 < a < b:
        raise DomainError("need 0 < a < b")
    left = diff_quotient(a, h, prec).quotient
    right = diff_quotient(b, h, prec).quotient
    return compare_below(left, right, strict=True)


def slope_bracket(a: RationalLike, x0: RationalLike, h: RationalLike, prec):
    """Derivative bracket for ``a**x`` at x0 with step h > 0.

    Returns ``(lower, secant, upper)``: ``a**x0`` times the quotient at -h,
    the forward secant slope ``(a**(x0+h) - a**x0)/h``, and ``a**x0`` times
    the quotient at +h. The derivative ``(ln a) a**x0`` lies in
    ``[lower.lo, upper.hi]``.
    """
    x0, h = as_rational(x0), as_rational(h)
    if h <= 0:
        raise DomainError("step must be positive")
    eps = eps_of(prec)
    at_x0 = pow_rat(a, x0, eps)
    lower = at_x0 * diff_quotient(a, -h, eps).quotient
    upper = at_x0 * diff_quotient(a, h, eps).quotient
    secant = (pow_rat(a, x0 + h, eps * h) - at_x0) / h
    return lower, secant, upper


def check_log_derivative(a: RationalLike, x: RationalLike, delta: RationalLike, prec) -> Verdict:
    """Check ``1/((x+d) ln a) <= (log_a(x+d) - log_a x)/d <= 1/(x ln a)`` for a > 1.

    Both logarithms come from exponent bisection, ln a from the quotient
    bracket, so the three quantities are computed independently.
    """
    a, x, delta = as_rational(a), as_rational(x), as_rational(delta)
    if a <= 1 or x <= 0 or delta <= 0:
        raise DomainError("need a > 1, x > 0, delta > 0")
    eps = eps_of(prec)
    forward = (log_enclosure(a, x + delta, eps * delta) - log_enclosure(a, x, eps * delta)) / delta
    ln_a = ln_enclosure(a, eps).bracket
    low = (ln_a * (x + delta)).recip_pos()
    high = (ln_a * x).recip_pos()
    verdicts = (compare_below(low, forward), compare_below(forward, high))
    if Verdict.FALSIFIED in verdicts:
        return Verdict.FALSIFIED
    if all(v is Verdict.VERIFIED for v in verdicts):
        return Verdict.VERIFIED
    return Verdict.INCONCLUSIVE
