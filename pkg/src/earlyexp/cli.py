"""Command-line front end: ``earlyexp {eval,e,figures,crosscheck}``.

Exit codes: 0 success, 1 a check was falsified, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from fractions import Fraction

from .crosscheck import run_crosscheck
from .euler_exp import compound_value, compute_e, exp_series
from .exact_core import (
    ConvergenceError,
    DomainError,
    Interval,
    eps_of,
    intersect,
    parse_rational,
    to_decimal,
)
from .figures import DEFAULT_BASES, DEFAULT_RANGE, DEFAULT_SAMPLES, build_figures, parse_base, write_figures
from .logarithm import ln_enclosure, log_enclosure
from .powers import pow_rat
from .quadrature import ln_integral
from .report import RunReport

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2

EVAL_ARITY = {"pow": 2, "ln": 1, "log": 2, "exp": 1, "integral-ln": 1, "compound": 2}
DEFAULT_PREC = Fraction(1, 10**6)


def _print_digits(eps: Fraction) -> int:
    digits = 0
    while Fraction(1, 10**digits) > eps:
        digits += 1
    return digits + 2


def _enclosure_lines(report: RunReport, label: str, interval: Interval, digits: int) -> None:
    if interval.is_point:
        report.lines.append(f"{label} = {interval.lo} (exact)")
        lo, hi = to_decimal(interval, digits)
        report.enclosures.append((label, lo, hi))
        return
    lo, hi = to_decimal(interval, digits)
    report.enclosures.append((label, lo, hi))
    report.lines.append(f"width = {interval.width}")


def cmd_eval(kind: str, args: list[str], prec=DEFAULT_PREC, digits: int | None = None) -> RunReport:
    if kind not in EVAL_ARITY:
        raise DomainError(f"unknown quantity {kind!r}")
    if len(args) != EVAL_ARITY[kind]:
        raise DomainError(f"eval {kind} takes {EVAL_ARITY[kind]} argument(s), got {len(args)}")
    if digits is not None and digits < 0:
        raise DomainError("digits must be nonnegative")
    eps = Fraction(1, 10**digits) if digits is not None else eps_of(prec)
    shown = digits if digits is not None else _print_digits(eps)
    args = [a.strip() for a in args]
    report = RunReport(f"eval {kind} {' '.join(args)} --prec {eps}")

    if kind == "compound":
        x, n_text = parse_rational(args[0]), parse_rational(args[1])
        if n_text.denominator != 1:
            raise DomainError("n must be an integer")
        value = compound_value(x, int(n_text))
        report.lines.append(
            f"(1 + x/n)^n is an exact rational: numerator {value.numerator.bit_length()} bits, "
            f"denominator {value.denominator.bit_length()} bits"
        )
        report.enclosures.append(("decimal", *to_decimal(Interval.point(value), shown)))
        return report

    if kind == "log" and args[0].strip() == "e":
        base = compute_e(eps / 2**16).bracket
        result = log_enclosure(base, parse_rational(args[1]), eps)
    else:
        values = [parse_rational(a) for a in args]
        if kind == "pow":
            result = pow_rat(values[0], values[1], eps)
        elif kind == "ln":
            result = ln_enclosure(values[0], eps).bracket
        elif kind == "log":
            result = log_enclosure(values[0], values[1], eps)
        elif kind == "exp":
            result = exp_series(values[0], eps)
        else:
            result = ln_integral(values[0], eps)
    _enclosure_lines(report, kind, result, shown)
    return report


def cmd_e(digits: int, *, max_rounds: int = 8) -> RunReport:
    """Certified decimal digits of e from the intersection of two routes."""
    if digits < 1:
        raise DomainError("digits must be at least 1")
    report = RunReport(f"e --digits {digits}")
    eps = Fraction(1, 10 ** (digits + 2))
    for _ in range(max_rounds):
        start = time.perf_counter()
        bisection = compute_e(eps).bracket
        report.timings["bisection"] = time.perf_counter() - start
        start = time.perf_counter()
        series = exp_series(1, eps)
        report.timings["series"] = time.perf_counter() - start
        both = intersect(bisection, series)
        if both is None:
            raise ConvergenceError("bisection and series enclosures of e are disjoint")
        # truncating both endpoints must give the same digits
        lo = to_decimal(both, digits)[0]
        hi_trunc = to_decimal(Interval.point(both.hi), digits)[0]
        if lo == hi_trunc:
            pair = to_decimal(both, digits + 2)
            report.lines.append(f"e = {lo}")
            report.enclosures.append(("enclosure", *pair))
            faster = min(("bisection", "series"), key=report.timings.__getitem__)
            report.lines.append(f"faster route: {faster}")
            return report
        eps /= 1000
    raise ConvergenceError(f"could not certify {digits} digits of e", both)


def cmd_figures(bases=DEFAULT_BASES, x_range=DEFAULT_RANGE, samples: int = DEFAULT_SAMPLES,
                fmt: str = "json", out: str = "figures.json", prec=Fraction(1, 10**8)) -> RunReport:
    report = RunReport(f"figures --format {fmt} --out {out}")
    series = build_figures(bases, x_range, samples, prec)
    path = write_figures(series, out, fmt)
    for s in series:
        lo, hi = to_decimal(s.slope, 8)
        report.enclosures.append((f"slope at (0, 1) for base {s.base}", lo, hi))
    report.lines.append(f"wrote {len(series)} series to {path}")
    return report


def cmd_crosscheck(prec=DEFAULT_PREC, trials: int = 500, seed: int = 0) -> RunReport:
    return run_crosscheck(prec, trials, seed)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="earlyexp", description="Certified a^x, ln, log, e and e^x with exact rationals.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="enclose one quantity")
    ev.add_argument("kind", choices=sorted(EVAL_ARITY))
    ev.add_argument("args", nargs="+", help="exact rationals: p/q, integers or terminating decimals")
    ev.add_argument("--prec", type=_rational_arg, default=DEFAULT_PREC, help="absolute width (default 1e-6)")
    ev.add_argument("--digits", type=int, help="print this many digits; implies --prec 10^-digits")

    e = sub.add_parser("e", help="certified digits of e")
    e.add_argument("--digits", type=int, default=12)
    e.add_argument("--timings", action="store_true")

    fig = sub.add_parser("figures", help="write curve, lattice and tangent data")
    fig.add_argument("--bases", nargs="+", default=[str(b) for b in DEFAULT_BASES])
    fig.add_argument("--range", nargs=2, type=_rational_arg, default=list(DEFAULT_RANGE), metavar=("LO", "HI"))
    fig.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    fig.add_argument("--format", choices=("json", "csv"), default="json")
    fig.add_argument("--out", default=None, help="output path (default figures.json or figures.csv)")
    fig.add_argument("--prec", type=_rational_arg, default=Fraction(1, 10**8))

    cc = sub.add_parser("crosscheck", help="run every identity and inequality check")
    cc.add_argument("--prec", type=_rational_arg, default=DEFAULT_PREC)
    cc.add_argument("--trials", type=int, default=500)
    cc.add_argument("--seed", type=int, default=0)
    cc.add_argument("--timings", action="store_true")
    return parser


_NEGATIVE_LITERAL = re.compile(r"^-(\d+/\d+|(\d+(\.\d*)?|\.\d+)[eE][+-]?\d+)$")


def _shield_negatives(argv: list[str]) -> list[str]:
    # argparse only treats -3 and -0.5 as values; a leading space keeps -1/2 and -1e-3 positional
    return [" " + a if _NEGATIVE_LITERAL.match(a) else a for a in argv]


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute a command line; return the exit code and the rendered report."""
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_shield_negatives(argv))
    show_timings = getattr(args, "timings", False)
    if args.command == "eval":
        report = cmd_eval(args.kind, args.args, args.prec, args.digits)
    elif args.command == "e":
        report = cmd_e(args.digits)
    elif args.command == "figures":
        bases = [parse_base(b) for b in args.bases]
        out = args.out or f"figures.{args.format}"
        report = cmd_figures(bases, tuple(args.range), args.samples, args.format, out, args.prec)
    else:
        if args.trials < 1:
            raise DomainError("--trials must be at least 1")
        report = cmd_crosscheck(args.prec, args.trials, args.seed)
    return report.exit_code, report.render(show_timings)


def main(argv: list[str] | None = None) -> int:
    try:
        code, text = run(argv)
    except (DomainError, ConvergenceError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
