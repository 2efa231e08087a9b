# %% [markdown]
# e from bisection on ln a = 1, from the Taylor series, and as the limit of
# (1 + 1/n)**n, which converges slowly.

# %%
from fractions import Fraction

from earlyexp import compound_value, compute_e, exp_pow, exp_series, to_decimal
from earlyexp.cli import cmd_e

print(cmd_e(15).render())

# %%
eps = Fraction(1, 10**10)
print("bisection:", to_decimal(compute_e(eps).bracket, 11))
print("series:   ", to_decimal(exp_series(1, eps), 11))

# %% [markdown]
# The error of (1 + 1/n)**n shrinks roughly like e/(2n).

# %%
e_mid = compute_e(Fraction(1, 10**12)).bracket.mid
for j in range(1, 7):
    n = 10**j
    err = e_mid - compound_value(1, n)
    print(f"n = 10^{j}: error {float(err):.3e}, n * error = {float(n * err):.5f}")

# %% [markdown]
# e**x two ways: the series directly, and the e enclosure raised to x.

# %%
for x in (Fraction(-2), Fraction(1, 2), Fraction(2)):
    print(f"e^{x}: series {to_decimal(exp_series(x, eps), 9)}  power {to_decimal(exp_pow(x, eps), 9)}")
