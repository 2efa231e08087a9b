# %% [markdown]
# The two inequalities everything rests on, checked with certified verdicts:
# geometric mean <= arithmetic mean, and the difference quotient
# (a**h - 1)/h growing with h.

# %%
from collections import Counter
from fractions import Fraction

from earlyexp import amgm, check_amgm, check_quotient_monotone, diff_quotient
from earlyexp.crosscheck import Lcg64

pair = amgm([1, 2, 3, 4], Fraction(1, 10**9))
print(f"GM of 1..4 in [{float(pair.geometric.lo):.9f}, {float(pair.geometric.hi):.9f}], AM = {pair.arithmetic}")

rng = Lcg64(5)
tally = Counter()
for _ in range(200):
    values = [Fraction(rng.randint(0, 20), rng.randint(1, 6)) for _ in range(rng.randint(2, 6))]
    tally[str(check_amgm(values, Fraction(1, 10**6)))] += 1
print("AM-GM over 200 random vectors:", dict(tally))

# %%
a = Fraction(3)
hs = [Fraction(k, 4) for k in (-8, -4, -2, -1, 1, 2, 4, 8)]
for h in hs:
    q = diff_quotient(a, h, Fraction(1, 10**9)).quotient
    print(f"h = {str(h):>4}: (3^h - 1)/h in [{float(q.lo):.9f}, {float(q.hi):.9f}]")
print("pairwise:", {str(check_quotient_monotone(a, h, k, Fraction(1, 10**9))) for h, k in zip(hs, hs[1:])})
