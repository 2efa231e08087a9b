"""Figure data for y = a**x: integer lattice points, sampled curve, tangent at (0, 1).

Nothing is plotted here. Each series carries exact lattice rationals,
interval samples of the curve and the slope enclosure of the tangent line
through (0, 1), written out as JSON or CSV for any plotting tool.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Union

from .euler_exp import compute_e, exp_pow
from .exact_core import DomainError, Interval, as_rational, eps_of, to_decimal
from .logarithm import ln_enclosure, ln_interval
from .powers import pow_rat

__all__ = [
    "E",
    "Base",
    "FigureSeries",
    "DEFAULT_BASES",
    "DEFAULT_RANGE",
    "parse_base",
    "sample_points",
    "build_series",
    "build_figures",
    "figures_to_json",
    "figures_from_json",
    "write_csv",
]

E = "e"
Base = Union[Fraction, str]

DEFAULT_BASES: tuple[Base, ...] = (Fraction(1, 2), Fraction(2), Fraction(5), E)
DEFAULT_RANGE = (Fraction(-3), Fraction(3))
DEFAULT_SAMPLES = 50
DECIMAL_DIGITS = 8


@dataclass(frozen=True)
class FigureSeries:
    base: Base
    lattice_points: list[tuple[int, Fraction]]
    curve_samples: list[tuple[Fraction, Interval]]
    slope: Interval
    intercept: Fraction = field(default=Fraction(1))

    def __post_init__(self):
        if self.intercept != 1:
            raise DomainError("the tangent passes through (0, 1); intercept must be 1")

    @property
    def slope_mid(self) -> Fraction:
        return self.slope.mid


def parse_base(text: str | Fraction | int) -> Base:
    if isinstance(text, str) and text.strip() == E:
        return E
    value = as_rational(text)
    if value <= 0:
        raise DomainError(f"base must be positive, got {value}")
    return value


def sample_points(lo: Fraction, hi: Fraction, samples: int) -> list[Fraction]:
    """``samples`` equally spaced rationals from lo to hi inclusive."""
    if samples < 1:
        raise DomainError("need at least one sample")
    if samples == 1:
        return [lo]
    step = (hi - lo) / (samples - 1)
    return [lo + i * step for i in range(samples)]


def build_series(base: Base, x_range=DEFAULT_RANGE, samples: int = DEFAULT_SAMPLES, prec=Fraction(1, 10**8)) -> FigureSeries:
    eps = eps_of(prec)
    lo, hi = (as_rational(v) for v in x_range)
    if not lo < hi:
        raise DomainError("x range must be nonempty with lo < hi")
    xs = sample_points(lo, hi, samples)
    if base == E:
        lattice: list[tuple[int, Fraction]] = []
        curve = [(x, exp_pow(x, eps)) for x in xs]
        slope = ln_interval(compute_e(eps / 4).bracket, eps / 2)
    else:
        a = parse_base(base)
        lattice = [(n, a**n) for n in range(math.ceil(lo), math.floor(hi) + 1)]
        curve = [(x, pow_rat(a, x, eps)) for x in xs]
        slope = ln_enclosure(a, eps).bracket
    return FigureSeries(base, lattice, curve, slope)


def build_figures(bases=DEFAULT_BASES, x_range=DEFAULT_RANGE, samples: int = DEFAULT_SAMPLES, prec=Fraction(1, 10**8)) -> list[FigureSeries]:
    return [build_series(parse_base(b) if not isinstance(b, Fraction) else b, x_range, samples, prec) for b in bases]


def _interval_record(interval: Interval, prefix: str = "") -> dict[str, str]:
    lo_dec, hi_dec = to_decimal(interval, DECIMAL_DIGITS)
    return {
        f"{prefix}lo": str(interval.lo),
        f"{prefix}hi": str(interval.hi),
        f"{prefix}lo_dec": lo_dec,
        f"{prefix}hi_dec": hi_dec,
    }


def _series_record(series: FigureSeries) -> dict:
    slope = series.slope
    return {
        "base": str(series.base),
        "lattice": [[n, str(v)] for n, v in series.lattice_points],
        "curve": [{"x": str(x), **_interval_record(y)} for x, y in series.curve_samples],
        "tangent": {
            "slope_lo": str(slope.lo),
            "slope_hi": str(slope.hi),
            "slope_mid": str(slope.mid),
            "slope_width": str(slope.width),
            "slope_lo_dec": to_decimal(slope, DECIMAL_DIGITS)[0],
            "slope_hi_dec": to_decimal(slope, DECIMAL_DIGITS)[1],
            "intercept": str(series.intercept),
        },
    }


def figures_to_json(series: list[FigureSeries]) -> str:
    return json.dumps({"series": [_series_record(s) for s in series]}, indent=2) + "\n"


def figures_from_json(text: str) -> list[FigureSeries]:
    """Inverse of :func:`figures_to_json`; every rational comes back exactly."""
    out = []
    for record in json.loads(text)["series"]:
        tangent = record["tangent"]
        out.append(
            FigureSeries(
                base=parse_base(record["base"]),
                lattice_points=[(int(n), Fraction(v)) for n, v in record["lattice"]],
                curve_samples=[
                    (Fraction(c["x"]), Interval(Fraction(c["lo"]), Fraction(c["hi"]))) for c in record["curve"]
                ],
                slope=Interval(Fraction(tangent["slope_lo"]), Fraction(tangent["slope_hi"])),
                intercept=Fraction(tangent["intercept"]),
            )
        )
    return out


CSV_COLUMNS = ["base", "kind", "x", "lo", "hi", "lo_dec", "hi_dec"]


def write_csv(series: list[FigureSeries], stream) -> None:
    """One row per lattice point, curve sample and tangent slope."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for s in series:
        for n, v in s.lattice_points:
            dec = to_decimal(Interval.point(v), DECIMAL_DIGITS)
            writer.writerow([s.base, "lattice", n, v, v, *dec])
        for x, y in s.curve_samples:
            writer.writerow([s.base, "curve", x, y.lo, y.hi, *to_decimal(y, DECIMAL_DIGITS)])
        writer.writerow([s.base, "slope", 0, s.slope.lo, s.slope.hi, *to_decimal(s.slope, DECIMAL_DIGITS)])


def write_figures(series: list[FigureSeries], out: str | Path, fmt: str = "json") -> Path:
    path = Path(out)
    if fmt == "json":
        path.write_text(figures_to_json(series), encoding="utf-8")
    elif fmt == "csv":
        with path.open("w", encoding="utf-8", newline="") as fh:
            write_csv(series, fh)
    else:
        raise DomainError(f"unknown figure format {fmt!r}")
    return path
