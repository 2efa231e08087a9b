"""Reference values that do not share code with the package.

``ln_reference`` uses ``ln x = 2 atanh((x-1)/(x+1))`` with a geometric tail
bound; ``e_reference`` sums 1/k! with the tail bound ``1/(n! n)``. Both are
exact-rational enclosures. ``FROZEN`` holds 35-digit decimal values recorded
once from these references (and an independent multiprecision library); the
tests compare package output against the frozen strings.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

FROZEN = {
    "ln2": "0.69314718055994530941723212145817657",
    "ln3": "1.0986122886681096913952452369225257",
    "ln5": "1.6094379124341003746007593332261876",
    "ln10": "2.3025850929940456840179914546843642",
    "ln3/7": "-0.84729786038720361371010750652065402",
    "e": "2.7182818284590452353602874713526625",
    "exp1/3": "1.3956124250860895286281253196025868",
    "exp-2": "0.1353352832366126918939994949724844",
    "exp2": "7.3890560989306502272304274605750078",
    "sqrt2": "1.4142135623730950488016887242096981",
}


def frozen(key: str) -> Fraction:
    return Fraction(FROZEN[key])


def frozen_window(key: str, slack: Fraction = Fraction(1, 10**30)) -> tuple[Fraction, Fraction]:
    v = frozen(key)
    return v - slack, v + slack


def ln_reference(x: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    z = (x - 1) / (x + 1)
    total, power, k = Fraction(0), z, 0
    while True:
        total += power / (2 * k + 1)
        power *= z * z
        k += 1
        tail = abs(power) / ((2 * k + 1) * (1 - z * z))
        if 4 * tail <= width:
            return 2 * (total - tail), 2 * (total + tail)


def e_reference(n: int = 40) -> tuple[Fraction, Fraction]:
    s = sum(Fraction(1, factorial(k)) for k in range(n + 1))
    return s, s + Fraction(1, factorial(n) * n)


def exp_reference(x: Fraction, n: int = 80) -> tuple[Fraction, Fraction]:
    """Taylor sum with tail bounded by twice the first omitted term (|x| <= n/2)."""
    s, term = Fraction(0), Fraction(1)
    for k in range(n + 1):
        s += term
        term = term * x / (k + 1)
    tail = 2 * abs(term) * (3 ** max(0, int(x) + 1))
    return s - tail, s + tail
