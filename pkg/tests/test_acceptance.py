"""Acceptance criteria, one test and one printed PASS/FAIL line each."""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from earlyexp.cli import cmd_e, cmd_figures
from earlyexp.crosscheck import Lcg64, amgm_check, power_law_checks, quotient_checks
from earlyexp.euler_exp import _compute_e, compound_value, compute_e, exp_series, initial_bracket_certificate
from earlyexp.exact_core import Interval, intersect, overlaps, round_down, round_up
from earlyexp.figures import E, figures_from_json, figures_to_json
from earlyexp.logarithm import ln_enclosure, log_enclosure, slope_bracket
from earlyexp.powers import pow_rat
from earlyexp.quadrature import ln_integral


@pytest.fixture
def verdict_line(capsys):
    def emit(number: int, title: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}")
        assert ok, detail

    return emit


def test_criterion_1_e_twelve_digits(verdict_line):
    _compute_e.cache_clear()
    start = time.perf_counter()
    report = cmd_e(12)
    eps = Fraction(1, 10**12)
    bisection = compute_e(eps).bracket
    series = exp_series(1, eps)
    elapsed = time.perf_counter() - start
    lo, hi = report.enclosures[0][1:]
    ok = (
        "e = 2.718281828459" in report.lines
        and lo.startswith("2.718281828459")
        and hi.startswith("2.718281828459")
        and intersect(bisection, series) is not None
        and all(2 < iv.lo and iv.hi < 3 for iv in (bisection, series))
        and elapsed < 10
    )
    verdict_line(1, "e to 12 digits", ok, f"pair [{lo}, {hi}], routes intersect, {elapsed:.2f}s (< 10s)")


def test_criterion_2_explicit_bounds(verdict_line):
    start = time.perf_counter()
    upper_ln2, lower_ln3 = initial_bracket_certificate(Fraction(1, 10**4))
    elapsed = time.perf_counter() - start
    ok = upper_ln2.hi < 1 < lower_ln3.lo and upper_ln2.width <= Fraction(1, 10**4) and elapsed < 1
    verdict_line(
        2,
        "2(sqrt2-1) < 1 < 6(1-3^(-1/6))",
        ok,
        f"{float(upper_ln2.hi):.6f} < 1 < {float(lower_ln3.lo):.6f}, {elapsed:.3f}s (< 1s)",
    )


def test_criterion_3_ln2_three_routes(verdict_line):
    eps = Fraction(1, 10**8)
    start = time.perf_counter()
    quotient = ln_enclosure(2, eps).bracket
    area = ln_integral(2, eps)
    inverse = log_enclosure(compute_e(eps / 2**16).bracket, 2, eps)
    elapsed = time.perf_counter() - start
    routes = (quotient, area, inverse)
    pairwise = all(overlaps(a, b) for i, a in enumerate(routes) for b in routes[i + 1:])
    widths = all(r.width <= eps for r in routes)
    near = all(abs(r.mid - Fraction("0.69314718")) < Fraction(2, 10**8) for r in routes)
    ok = pairwise and widths and near and elapsed < 30
    verdict_line(
        3,
        "ln 2 by quotients, quadrature and log base e",
        ok,
        f"widths {[f'{float(r.width):.1e}' for r in routes]} (<= 1e-8), pairwise overlap={pairwise}, {elapsed:.2f}s (< 30s)",
    )


def test_criterion_4_quotient_sweep(verdict_line):
    start = time.perf_counter()
    monotone, symmetric, _, _ = quotient_checks(Lcg64(2024), 1000, Fraction(1, 10**6))
    elapsed = time.perf_counter() - start
    total = sum(monotone.counts.values())
    ok = total == 1000 and monotone.falsified == 0 and symmetric.falsified == 0 and elapsed < 60
    verdict_line(4, "difference quotient sweep, 1000 triples", ok, f"{monotone.line()}, {elapsed:.2f}s (< 60s)")


def test_criterion_5_amgm_sweep(verdict_line):
    start = time.perf_counter()
    result = amgm_check(Lcg64(2024), 1000, Fraction(1, 10**6))
    elapsed = time.perf_counter() - start
    unequal, certified = result.stats["unequal"], result.stats["strict_certified"]
    rate = certified / unequal
    ok = result.falsified == 0 and rate >= 0.95 and elapsed < 60
    verdict_line(
        5,
        "AM-GM sweep, 1000 vectors",
        ok,
        f"falsified={result.falsified}, strict {certified}/{unequal} = {rate:.1%} (>= 95%), {elapsed:.2f}s (< 60s)",
    )


def test_criterion_6_identity_suite(verdict_line):
    results = power_law_checks(Lcg64(2024), 500, Fraction(1, 10**6))
    falsified = sum(r.falsified for r in results)
    verified = min(sum(r.counts.values()) for r in results)
    ok = falsified == 0 and verified > 0
    detail = "; ".join(f"{r.name} v={r.counts['verified']} i={r.inconclusive}" for r in results)
    verdict_line(6, "power laws on 500 triples", ok, f"falsified={falsified}; {detail}")


def test_criterion_7_derivative_brackets(verdict_line):
    eps = Fraction(1, 2**40)
    nested = contains = True
    worst = Fraction(0)
    for a in (Fraction(1, 2), Fraction(2), Fraction(5)):
        ln_a = ln_enclosure(a, eps).bracket
        for x0 in (Fraction(-1), Fraction(0), Fraction(1)):
            target = ln_a * pow_rat(a, x0, eps)
            previous = None
            for k in range(1, 21):
                lower, _, upper = slope_bracket(a, x0, Fraction(1, 2**k), eps)
                bracket = Interval(lower.lo, upper.hi)
                contains &= bracket.contains(target)
                if previous is not None:
                    nested &= previous.contains(bracket)
                previous = bracket
            worst = max(worst, previous.width)
    ok = nested and contains and worst < Fraction(1, 10**4)
    verdict_line(
        7,
        "slope brackets k = 1..20",
        ok,
        f"nested={nested}, contain (ln a)a^x0={contains}, max k=20 width {float(worst):.2e} (< 1e-4)",
    )


def test_criterion_8_compound_limit(verdict_line):
    e_bracket = compute_e(Fraction(1, 10**12)).bracket
    errors = []
    for j in range(1, 7):
        value = compound_value(1, 10**j)
        enclosed = Interval(round_down(value, 128), round_up(value, 128))
        errors.append(e_bracket - enclosed)
    decreasing = all(later.hi < earlier.lo for earlier, later in zip(errors, errors[1:]))
    final = abs(compound_value(1, 10**6) - e_bracket.mid)
    ok = final < Fraction(2, 10**6) and decreasing and errors[-1].lo > 0
    verdict_line(
        8,
        "(1 + 1/n)^n -> e",
        ok,
        f"|c(10^6) - e| = {float(final):.3e} (< 2e-6), errors strictly decreasing over n = 10..10^6: {decreasing}",
    )


PLOTTED_TABLES = {
    "1/2": {-3: "8", -2: "4", -1: "2", 0: "1", 1: ".5", 2: ".25", 3: ".125"},
    "2": {-3: ".125", -2: ".25", -1: ".5", 0: "1", 1: "2", 2: "4", 3: "8"},
    "5": {-3: ".008", -2: ".04", -1: ".2", 0: "1", 1: "5", 2: "25"},
}


def test_criterion_9_figures(verdict_line, tmp_path):
    out = tmp_path / "figures.json"
    cmd_figures(out=str(out))
    text = out.read_text(encoding="utf-8")
    series = {str(s.base): s for s in figures_from_json(text)}
    lattice_ok = all(
        dict(series[base].lattice_points).get(n) == Fraction(value)
        for base, table in PLOTTED_TABLES.items()
        for n, value in table.items()
    )
    slope_e = series[E].slope
    round_trip = figures_to_json(figures_from_json(text)) == text
    ok = lattice_ok and slope_e.contains(1) and list(series) == ["1/2", "2", "5", "e"] and round_trip
    verdict_line(
        9,
        "figure data",
        ok,
        f"lattice matches plotted tables={lattice_ok}, json round-trip={round_trip}, base-e slope [{float(slope_e.lo):.10f}, {float(slope_e.hi):.10f}] contains 1",
    )
