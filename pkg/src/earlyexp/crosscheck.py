"""Randomized and fixed cross-checks of every identity and inequality.

Trials are drawn from :class:`Lcg64`, a plain 64-bit linear congruential
generator, so a given seed reproduces the same trial set in any language:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64
    output = state >> 33
    randint(lo, hi) = lo + output mod (hi - lo + 1)

The initial state is the seed reduced mod 2**64.
"""

from __future__ import annotations

import time
from fractions import Fraction

from .euler_exp import compound_value, compute_e, exp_derivative_bracket, exp_pow, exp_series
from .exact_core import Interval, eps_of, overlaps
from .inequalities import (
    Verdict,
    check_amgm,
    check_midpoint_convex,
    check_quotient_monotone,
    compare_below,
    diff_quotient,
)
from .logarithm import (
    check_log_derivative,
    ln_enclosure,
    log_enclosure,
    quotient_strictly_increasing_in_base,
    slope_bracket,
)
from .powers import pow_interval_base, pow_rat
from .quadrature import ln_integral
from .report import CheckResult, RunReport

__all__ = ["Lcg64", "run_crosscheck"]

_MULTIPLIER = 6364136223846793005
_INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (_MULTIPLIER * self.state + _INCREMENT) & _MASK
        return self.state >> 33

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.next() % (hi - lo + 1)

    def positive_rational(self) -> Fraction:
        return Fraction(self.randint(1, 24), self.randint(1, 12))

    def exponent(self) -> Fraction:
        return Fraction(self.randint(-12, 12), self.randint(1, 6))

    def nonzero_exponent(self, sign: int) -> Fraction:
        return sign * Fraction(self.randint(1, 12), self.randint(1, 6))


def _overlap_verdict(a: Interval, b: Interval) -> Verdict:
    return Verdict.VERIFIED if overlaps(a, b) else Verdict.FALSIFIED


def _strict_order(small: Interval, big: Interval, refine) -> Verdict:
    verdict = compare_below(small, big, strict=True)
    if verdict is Verdict.INCONCLUSIVE:
        small, big = refine()
        verdict = compare_below(small, big, strict=True)
    return verdict


def power_law_checks(rng: Lcg64, trials: int, eps: Fraction) -> list[CheckResult]:
    """Sum, product and power laws, a**1, a**0, positivity and monotonicity."""
    names = [
        "a^(x+y) encloses a^x a^y",
        "(a^x)^y encloses a^(xy)",
        "a^x strictly monotone in x",
        "a^1 = a",
        "a^0 = 1",
        "a^x > 0",
        "a^x b^x encloses (ab)^x",
    ]
    results = [CheckResult(name) for name in names]
    add_law, power_law, monotone, one, zero, positive, product_law = results
    for _ in range(trials):
        a, b = rng.positive_rational(), rng.positive_rational()
        x, y = rng.exponent(), rng.exponent()
        ax, ay = pow_rat(a, x, eps), pow_rat(a, y, eps)
        add_law.add(_overlap_verdict(pow_rat(a, x + y, eps), ax.mul_pos(ay)))
        power_law.add(_overlap_verdict(pow_interval_base(ax, y, eps), pow_rat(a, x * y, eps)))
        product_law.add(_overlap_verdict(ax.mul_pos(pow_rat(b, x, eps)), pow_rat(a * b, x, eps)))
        one.add(Verdict.VERIFIED if pow_rat(a, 1, eps).contains(a) else Verdict.FALSIFIED)
        zero.add(Verdict.VERIFIED if pow_rat(a, 0, eps) == Interval.point(1) else Verdict.FALSIFIED)
        positive.add(Verdict.VERIFIED if ax.lo > 0 and ay.lo > 0 else Verdict.FALSIFIED)
        if a != 1 and x != y:
            lo_exp, hi_exp = min(x, y), max(x, y)
            fine = eps / 2**20

            def refine(lo_exp=lo_exp, hi_exp=hi_exp, a=a):
                pair = pow_rat(a, lo_exp, fine), pow_rat(a, hi_exp, fine)
                return pair if a > 1 else pair[::-1]

            pair = (pow_rat(a, lo_exp, eps), pow_rat(a, hi_exp, eps))
            if a < 1:
                pair = pair[::-1]
            monotone.add(_strict_order(*pair, refine))
    return results


def amgm_check(rng: Lcg64, trials: int, eps: Fraction) -> CheckResult:
    result = CheckResult("geometric mean <= arithmetic mean")
    unequal = certified = 0
    for i in range(trials):
        n = rng.randint(1, 8)
        if i % 10 == 0:
            v = Fraction(rng.randint(0, 20), rng.randint(1, 6))
            values = [v] * n
        else:
            values = [Fraction(rng.randint(0, 20), rng.randint(1, 6)) for _ in range(n)]
        verdict = check_amgm(values, eps)
        result.add(verdict)
        if len(set(values)) > 1:
            unequal += 1
            certified += verdict is Verdict.VERIFIED
    result.stats.update(unequal=unequal, strict_certified=certified)
    if unequal:
        result.notes.append(f"strict inequality certified for {certified}/{unequal} unequal vectors")
    return result


def quotient_checks(rng: Lcg64, trials: int, eps: Fraction) -> list[CheckResult]:
    monotone = CheckResult("difference quotient nondecreasing in h")
    symmetric = CheckResult("quotient at -h <= quotient at +h")
    convex = CheckResult("a^x midpoint convex")
    in_base = CheckResult("difference quotient strictly increasing in a")
    for i in range(trials):
        a = rng.positive_rational()
        regime = i % 3
        if regime == 0:
            h, k = rng.nonzero_exponent(1), rng.nonzero_exponent(1)
        elif regime == 1:
            h, k = rng.nonzero_exponent(-1), rng.nonzero_exponent(-1)
        else:
            h, k = rng.nonzero_exponent(-1), rng.nonzero_exponent(1)
        if h == k:
            k += Fraction(1, 7) if k < -Fraction(1, 7) or k > 0 else -Fraction(1, 7)
        if h > k:
            h, k = k, h
        monotone.add(check_quotient_monotone(a, h, k, eps))
        step = rng.nonzero_exponent(1)
        symmetric.add(check_quotient_monotone(a, -step, step, eps))
        x1, x2 = rng.exponent(), rng.exponent()
        if x1 != x2:
            convex.add(check_midpoint_convex(a, min(x1, x2), max(x1, x2), eps))
        b = rng.positive_rational()
        if a != b:
            in_base.add(quotient_strictly_increasing_in_base(min(a, b), max(a, b), h, eps))
    return [monotone, symmetric, convex, in_base]


LN_POINTS = (Fraction(1, 2), Fraction(2), Fraction(3), Fraction(10))
EXP_POINTS = tuple(Fraction(v) for v in (-2, -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, 2))


def ln_route_checks(eps: Fraction) -> list[CheckResult]:
    routes = CheckResult("ln: quotient bracket, integral and log base e agree")
    increasing = CheckResult("ln strictly increasing")
    log_slope = CheckResult("log_a slope within [1/((x+d) ln a), 1/(x ln a)]")
    ln_slope = CheckResult("ln slope within [1/(x+d), 1/x]")
    e_bracket = compute_e(eps / 2**16).bracket
    brackets = []
    for x in LN_POINTS:
        quotient = ln_enclosure(x, eps).bracket
        area = ln_integral(x, eps)
        inverse = log_enclosure(e_bracket, x, eps)
        for left, right in ((quotient, area), (quotient, inverse), (area, inverse)):
            routes.add(_overlap_verdict(left, right))
        brackets.append(quotient)
    order = sorted(zip(LN_POINTS, brackets))
    for (_, lower), (_, upper) in zip(order, order[1:]):
        increasing.add(compare_below(lower, upper, strict=True))
    delta = Fraction(1, 10)
    for a in (Fraction(2), Fraction(5)):
        for x in (Fraction(1), Fraction(2), Fraction(3)):
            log_slope.add(check_log_derivative(a, x, delta, eps))
    for x in (Fraction(1), Fraction(2), Fraction(3)):
        fine = eps * delta
        forward = (ln_enclosure(x + delta, fine).bracket - ln_enclosure(x, fine).bracket) / delta
        low, high = Interval.point(1 / (x + delta)), Interval.point(1 / x)
        verdicts = (compare_below(low, forward), compare_below(forward, high))
        if Verdict.FALSIFIED in verdicts:
            ln_slope.add(Verdict.FALSIFIED)
        elif all(v is Verdict.VERIFIED for v in verdicts):
            ln_slope.add(Verdict.VERIFIED)
        else:
            ln_slope.add(Verdict.INCONCLUSIVE)
    return [routes, increasing, log_slope, ln_slope]


def e_checks(eps: Fraction) -> list[CheckResult]:
    certificate = CheckResult("e bracket certified by ln straddling 1")
    unique = CheckResult("ln b != 1 for rationals b outside the e bracket")
    bracket = compute_e(eps).bracket
    one = Interval.point(1)
    for endpoint, is_lower in ((bracket.lo, True), (bracket.hi, False)):
        delta = eps / 8
        for _ in range(8):
            ln_end = ln_enclosure(endpoint, delta).bracket
            pair = (ln_end, one) if is_lower else (one, ln_end)
            verdict = compare_below(*pair, strict=True)
            if verdict is not Verdict.INCONCLUSIVE:
                break
            delta /= 16
        certificate.add(verdict)
    for b in (Fraction(12, 5), Fraction(13, 5), Fraction(29, 10)):
        if bracket.contains(b):
            continue
        ln_b = ln_enclosure(b, Fraction(1, 2**20)).bracket
        if ln_b.contains(1):
            unique.add(Verdict.INCONCLUSIVE)
        else:
            # ln b must sit on the same side of 1 as b sits of e
            ok = (ln_b.hi < 1) == (b < bracket.lo)
            unique.add(Verdict.VERIFIED if ok else Verdict.FALSIFIED)
    return [certificate, unique]


def exp_route_checks(eps: Fraction) -> list[CheckResult]:
    routes = CheckResult("e^x: series and power of e agree")
    compound = CheckResult("(1 + x/n)^n approaches e^x")
    for x in EXP_POINTS:
        series = exp_series(x, eps)
        routes.add(_overlap_verdict(series, exp_pow(x, eps)))
        reference = exp_series(x, Fraction(1, 2**60))
        errors = []
        for j in range(3, 13):
            value = Interval.point(compound_value(x, 2**j))
            diff = value - reference
            errors.append(Interval(min(abs(diff.lo), abs(diff.hi)), max(abs(diff.lo), abs(diff.hi))))
        shrinking = all(later.hi < earlier.lo for earlier, later in zip(errors, errors[1:]))
        if x == 0:
            shrinking = all(err.hi <= Fraction(1, 2**60) for err in errors)
        compound.add(Verdict.VERIFIED if shrinking else Verdict.INCONCLUSIVE)
    return [routes, compound]


def derivative_checks(eps: Fraction) -> list[CheckResult]:
    slope = CheckResult("a^x slope bracket contains (ln a) a^x0")
    nested = CheckResult("a^x slope brackets nested as h halves")
    exp_slope = CheckResult("e^x slope bracket contains e^x0")
    fine = eps / 2**16
    for a in (Fraction(1, 2), Fraction(2), Fraction(5)):
        ln_a = ln_enclosure(a, fine).bracket
        for x0 in (Fraction(-1), Fraction(0), Fraction(1)):
            target = ln_a * pow_rat(a, x0, fine)
            previous = None
            for k in range(1, 9):
                lower, secant, upper = slope_bracket(a, x0, Fraction(1, 2**k), fine)
                bracket = Interval(lower.lo, upper.hi)
                if bracket.contains(target):
                    slope.add(Verdict.VERIFIED)
                elif overlaps(bracket, target):
                    slope.add(Verdict.INCONCLUSIVE)
                else:
                    slope.add(Verdict.FALSIFIED)
                if previous is not None:
                    nested.add(Verdict.VERIFIED if previous.contains(bracket) else Verdict.INCONCLUSIVE)
                previous = bracket
    for x0 in (Fraction(-1), Fraction(0), Fraction(1)):
        for k in (0, 4, 8):
            lower, value, upper = exp_derivative_bracket(x0, k, fine)
            bracket = Interval(lower.lo, upper.hi)
            if bracket.contains(value):
                exp_slope.add(Verdict.VERIFIED)
            elif overlaps(bracket, value):
                exp_slope.add(Verdict.INCONCLUSIVE)
            else:
                exp_slope.add(Verdict.FALSIFIED)
    return [slope, nested, exp_slope]


def run_crosscheck(prec=Fraction(1, 10**6), trials: int = 500, seed: int = 0) -> RunReport:
    """Run every suite; deterministic for a fixed (prec, trials, seed)."""
    eps = eps_of(prec)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = RunReport(f"crosscheck --prec {eps} --trials {trials} --seed {seed}")
    rng = Lcg64(seed)
    suites = [
        ("power laws", lambda: power_law_checks(rng, trials, eps)),
        ("am-gm", lambda: [amgm_check(rng, trials, eps)]),
        ("difference quotients", lambda: quotient_checks(rng, trials, eps)),
        ("e", lambda: e_checks(eps)),
        ("ln routes", lambda: ln_route_checks(eps)),
        ("exp routes", lambda: exp_route_checks(eps)),
        ("derivatives", lambda: derivative_checks(eps)),
    ]
    for label, run in suites:
        start = time.perf_counter()
        report.checks.extend(run())
        report.timings[label] = time.perf_counter() - start
    report.lines.append(f"quotient at h=1/2 for a=2: {diff_quotient(2, Fraction(1, 2), eps).quotient}")
    return report
