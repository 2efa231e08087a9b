# %% [markdown]
# Plot (n, a**n) for a few bases, join the dots, and look at the tangent line
# through (0, 1). Its slope grows with a; the base where it equals 1 is e.

# %%
from fractions import Fraction

import numpy as np

from earlyexp import ln_enclosure, pow_rat
from earlyexp.figures import build_figures

series = build_figures(samples=13, prec=Fraction(1, 10**6))
for s in series:
    lattice = ", ".join(f"({n}, {v})" for n, v in s.lattice_points)
    print(f"base {s.base}: slope at (0, 1) in [{float(s.slope.lo):.7f}, {float(s.slope.hi):.7f}]")
    if lattice:
        print(f"  lattice {lattice}")

# %% [markdown]
# The curve between lattice points comes from rational exponents. Midpoints
# of the enclosures are good enough to hand to any plotting library.

# %%
two = series[1]
xs = np.array([float(x) for x, _ in two.curve_samples])
ys = np.array([float(y.mid) for _, y in two.curve_samples])
print(np.column_stack([xs, ys]).round(4))
print("tangent 1 + x ln 2 at the same x:", (1 + xs * float(two.slope_mid)).round(4))

# %% [markdown]
# The slope increases strictly with the base. Bisecting on it brackets e.

# %%
bases = [Fraction(k, 4) for k in range(9, 13)]
for a in bases:
    slope = ln_enclosure(a, Fraction(1, 10**8)).bracket
    side = "below 1" if slope.hi < 1 else "above 1"
    print(f"a = {a}: ln a in [{float(slope.lo):.8f}, {float(slope.hi):.8f}], {side}")
print("so 5/2 < e < 11/4")
# a rational power of a bracket endpoint, e.g. a lower bound for sqrt(e)
print("sqrt(5/2) >=", float(pow_rat(Fraction(5, 2), Fraction(1, 2), Fraction(1, 10**6)).lo))
