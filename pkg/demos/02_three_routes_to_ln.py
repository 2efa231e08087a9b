# %% [markdown]
# Three unrelated computations of ln x that must agree:
# squeezing between difference quotients, Riemann sums of 1/t, and the
# exponent y with e**y = x.

# %%
from fractions import Fraction

from earlyexp import compute_e, ln_enclosure, ln_integral, log_enclosure, to_decimal
from earlyexp.quadrature import riemann_sums

eps = Fraction(1, 10**7)
e_bracket = compute_e(eps / 2**16).bracket

for x in (Fraction(1, 2), Fraction(2), Fraction(3), Fraction(10)):
    routes = {
        "quotients": ln_enclosure(x, eps).bracket,
        "quadrature": ln_integral(x, eps),
        "log base e": log_enclosure(e_bracket, x, eps),
    }
    print(f"ln {x}")
    for name, iv in routes.items():
        lo, hi = to_decimal(iv, 9)
        print(f"  {name:<11} [{lo}, {hi}]")

# %% [markdown]
# Riemann sums: the gap between upper and lower sums is known exactly, so the
# number of pieces needed for a target width is known up front.

# %%
for n in (10, 100, 1000):
    r = riemann_sums(2, n)
    print(f"N = {n:>4}: [{float(r.lower_sum):.6f}, {float(r.upper_sum):.6f}], gap = {r.gap}")
