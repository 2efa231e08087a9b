"""Exponentials and logarithms built from rational powers, with certified enclosures."""

from .euler_exp import compound_value, compute_e, exp_derivative_bracket, exp_pow, exp_series
from .exact_core import (
    ConvergenceError,
    DomainError,
    Interval,
    Precision,
    Rational,
    nth_root,
    parse_rational,
    to_decimal,
)
from .figures import FigureSeries, build_figures
from .inequalities import Verdict, amgm, check_amgm, check_quotient_monotone, diff_quotient
from .logarithm import ln_enclosure, log_enclosure, slope_bracket
from .powers import pow_rat
from .quadrature import ln_integral, riemann_sums
from .report import CheckResult, RunReport

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "ConvergenceError",
    "DomainError",
    "FigureSeries",
    "Interval",
    "Precision",
    "Rational",
    "RunReport",
    "Verdict",
    "amgm",
    "build_figures",
    "check_amgm",
    "check_quotient_monotone",
    "compound_value",
    "compute_e",
    "diff_quotient",
    "exp_derivative_bracket",
    "exp_pow",
    "exp_series",
    "ln_enclosure",
    "ln_integral",
    "log_enclosure",
    "nth_root",
    "parse_rational",
    "pow_rat",
    "riemann_sums",
    "slope_bracket",
    "to_decimal",
]
