"""Exact rational scalars, closed rational intervals and root enclosures.

Everything downstream is built from :class:`fractions.Fraction` values and
:class:`Interval` enclosures with rational endpoints. No floating point is
used anywhere; irrational quantities only ever appear as intervals whose
endpoints are exact rationals.

Endpoint simplification uses *relative* dyadic rounding: a value is replaced
by ``m / 2**s`` where ``m`` carries a fixed number of significant bits,
rounded toward -inf for lower endpoints and toward +inf for upper endpoints.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational",
    "RationalLike",
    "DomainError",
    "ConvergenceError",
    "Precision",
    "Interval",
    "as_rational",
    "parse_rational",
    "eps_of",
    "rat_arith",
    "int_pow",
    "iroot",
    "nth_root",
    "interval_ops",
    "intersect",
    "hull",
    "overlaps",
    "round_down",
    "round_up",
    "to_decimal",
]


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(RuntimeError):
    """An iteration cap was reached; ``best`` holds the last valid enclosure."""

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")
_FRACTION_RE = re.compile(r"^[+-]?\d+/\d+$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer, or a terminating decimal (``1e-6`` allowed)."""
    s = text.strip()
    if not (_DECIMAL_RE.match(s) or _FRACTION_RE.match(s)):
        raise DomainError(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise DomainError(f"zero denominator in {text!r}") from None


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class Precision:
    """Absolute width target for an enclosure."""

    eps: Fraction

    def __post_init__(self):
        eps = as_rational(self.eps)
        if eps <= 0:
            raise DomainError("precision must be strictly positive")
        object.__setattr__(self, "eps", eps)


def eps_of(prec) -> Fraction:
    """Accept a :class:`Precision` or anything rational-like; return eps."""
    if isinstance(prec, Precision):
        return prec.eps
    return Precision(as_rational(prec)).eps


def bits_for(eps: Fraction) -> int:
    """Smallest k >= 0 with 2**-k <= eps."""
    return max(0, eps.denominator.bit_length() - eps.numerator.bit_length() + 1)


def log2_floor(x: Fraction) -> int:
    """An integer within one of log2(x) for x > 0 (cheap, from bit lengths)."""
    return x.numerator.bit_length() - x.denominator.bit_length()


def rat_arith(x: RationalLike, y: RationalLike, op: str):
    """Exact arithmetic dispatch; ``cmp`` returns -1, 0 or 1."""
    x, y = as_rational(x), as_rational(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise DomainError("division by zero")
        return x / y
    if op == "cmp":
        return (x > y) - (x < y)
    raise ValueError(f"unknown op {op!r}")


def int_pow(x: RationalLike, n: int) -> Fraction:
    x = as_rational(x)
    if n < 0 and x == 0:
        raise DomainError("0 raised to a negative power")
    return x**n


def _dyadic(m: int, s: int) -> Fraction:
    """m / 2**s for any integer s."""
    if s >= 0:
        return Fraction(m, 1 << s)
    return Fraction(m << -s)


def _scaled_floor(x: Fraction, s: int) -> tuple[int, bool]:
    """floor(x * 2**s) and whether it is exact."""
    num, den = x.numerator, x.denominator
    if s >= 0:
        q, r = divmod(num << s, den)
    else:
        q, r = divmod(num, den << -s)
    return q, r == 0


def round_down(x: Fraction, bits: int) -> Fraction:
    """Largest dyadic <= x with about ``bits`` significant bits.

    Values that are already small (numerator and denominator within
    ``bits + 2`` bits) are returned unchanged.
    """
    if max(x.numerator.bit_length(), x.denominator.bit_length()) <= bits + 2:
        return x
    if x < 0:
        return -round_up(-x, bits)
    s = bits - log2_floor(x)
    m, _ = _scaled_floor(x, s)
    return _dyadic(m, s)


def round_up(x: Fraction, bits: int) -> Fraction:
    """Smallest dyadic >= x with about ``bits`` significant bits."""
    if max(x.numerator.bit_length(), x.denominator.bit_length()) <= bits + 2:
        return x
    if x < 0:
        return -round_down(-x, bits)
    s = bits - log2_floor(x)
    m, exact = _scaled_floor(x, s)
    return _dyadic(m if exact else m + 1, s)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        # identity check first: comparing a multi-megabit fraction with itself is slow
        if lo is not hi and lo > hi:
            raise DomainError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: RationalLike) -> Interval:
        x = as_rational(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        x = as_rational(x)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def __add__(self, other) -> Interval:
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other) -> Interval:
        if not isinstance(other, Interval):
            other = Interval.point(other)
        return self + (-other)

    def __rsub__(self, other) -> Interval:
        return Interval.point(other) - self

    def __mul__(self, other) -> Interval:
        if not isinstance(other, Interval):
            c = as_rational(other)
            return Interval(self.lo * c, self.hi * c) if c >= 0 else Interval(self.hi * c, self.lo * c)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other) -> Interval:
        if isinstance(other, Interval):
            return self * other.recip_pos() if other.lo > 0 else -(self * (-other).recip_pos())
        c = as_rational(other)
        if c == 0:
            raise DomainError("division by zero")
        return self * (1 / c)

    def mul_pos(self, other: Interval) -> Interval:
        if self.lo <= 0 or other.lo <= 0:
            raise DomainError("mul_pos needs strictly positive operands")
        return Interval(self.lo * other.lo, self.hi * other.hi)

    def recip_pos(self) -> Interval:
        if self.lo <= 0:
            raise DomainError("reciprocal of an interval that is not strictly positive")
        return Interval(1 / self.hi, 1 / self.lo)

    def round_out(self, bits: int) -> Interval:
        return Interval(round_down(self.lo, bits), round_up(self.hi, bits))

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {self.hi})"


def intersect(a: Interval, b: Interval) -> Interval | None:
    """Common subinterval, or ``None`` when the two are disjoint."""
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    return Interval(lo, hi) if lo <= hi else None


def overlaps(a: Interval, b: Interval) -> bool:
    return max(a.lo, b.lo) <= min(a.hi, b.hi)


def hull(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


def interval_ops(a: Interval, b: Interval | None, op: str):
    if op == "add":
        return a + b
    if op == "neg":
        return -a
    if op == "mul_pos":
        return a.mul_pos(b)
    if op == "recip_pos":
        return a.recip_pos()
    if op == "intersect":
        return intersect(a, b)
    if op == "hull":
        return hull(a, b)
    raise ValueError(f"unknown op {op!r}")


def iroot(v: int, n: int) -> int:
    """floor(v ** (1/n)) for an integer v >= 0, by bisection on ``mid**n <= v``."""
    if v < 0:
        raise DomainError("integer root of a negative number")
    if n == 1 or v < 2:
        return v
    if n == 2:
        # isqrt returns exactly the bisection answer, just faster
        return math.isqrt(v)
    lo, hi = 0, 1 << -(-v.bit_length() // n)
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if mid**n <= v:
            lo = mid
        else:
            hi = mid
    return lo


def _exact_root(x: Fraction, n: int) -> Fraction | None:
    num, den = x.numerator, x.denominator
    for v in (num, den):
        if v != 1 and v.bit_length() <= n:
            # 2**n > v, so only v = 1 can be a perfect n-th power
            return None
    p, q = iroot(num, n), iroot(den, n)
    if p**n == num and q**n == den:
        return Fraction(p, q)
    return None


def root_bounds(x: Fraction, m: int, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic ``lo <= x**(1/m) <= hi`` with ``bits`` significant bits, x > 0.

    ``lo == hi`` exactly when the root is itself the dyadic found.
    """
    num, den = x.numerator, x.denominator
    e = log2_floor(x) // m
    s = bits - e + 1
    y, _ = _scaled_floor(x, m * s)
    r = iroot(y, m)
    ms = m * s
    rm = r**m
    if ms >= 0:
        exact = rm * den == num << ms
    else:
        exact = (rm * den) << -ms == num
    lo = _dyadic(r, s)
    return lo, (lo if exact else _dyadic(r + 1, s))


def _bit_grid(bits: int, step: int = 8) -> int:
    return -(-bits // step) * step


def nth_root(x: RationalLike, n: int, prec, *, max_refinements: int = 64) -> Interval:
    """Enclose the real n-th root of ``x >= 0`` with width at most eps.

    The odd part of ``n`` is handled by one bisection on the exact predicate
    ``mid**m <= x``; every factor of two by a further square root stage.
    Perfect n-th powers of rationals come back as point intervals. Working
    precision only ever increases on a fixed grid, so results for a smaller
    eps are nested inside results for a larger one.
    """
    x = as_rational(x)
    eps = eps_of(prec)
    if not isinstance(n, int) or n < 1:
        raise DomainError("root degree must be a positive integer")
    if x < 0:
        raise DomainError("root of a negative number")
    if x == 0 or x == 1 or n == 1:
        return Interval.point(x)
    exact = _exact_root(x, n)
    if exact is not None:
        return Interval.point(exact)

    m, t = n, 0
    while m % 2 == 0:
        m //= 2
        t += 1
    magnitude = max(0, log2_floor(x) // n + 1)
    bits = _bit_grid(bits_for(eps) + magnitude + 4)
    for _ in range(max_refinements):
        lo, hi = (x, x) if m == 1 else root_bounds(x, m, bits)
        for _ in range(t):
            lo = root_bounds(lo, 2, bits)[0]
            hi = root_bounds(hi, 2, bits)[1]
        if hi - lo <= eps and lo > 0:
            return Interval(lo, hi)
        bits += 8
    raise ConvergenceError(f"nth_root({x}, {n}) did not reach width {eps}", Interval(lo, hi))


def _format_scaled(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def floor_scaled10(x: Fraction, digits: int) -> int:
    return (x.numerator * 10**digits) // x.denominator


def to_decimal(interval: Interval, digits: int) -> tuple[str, str]:
    """Outward-rounded decimal strings: lo toward -inf, hi toward +inf."""
    if digits < 0:
        raise DomainError("digits must be nonnegative")
    scale = 10**digits
    lo = (interval.lo.numerator * scale) // interval.lo.denominator
    hi = -((-interval.hi.numerator * scale) // interval.hi.denominator)
    return _format_scaled(lo, digits), _format_scaled(hi, digits)
