"""Direct versus Euclidean Dedekind sums, and the reciprocity law."""

from fractions import Fraction
from math import gcd

from ldp12 import cone_lhs_closed_form, dedekind_sum, dedekind_sum_fast

for h, k in [(1, 3), (3, 8), (8, 3), (5, 13), (144, 233)]:
    print(f"s({h}, {k}) = {dedekind_sum(h, k)}  (fast: {dedekind_sum_fast(h, k)})")

h, k = 3, 8
lhs = dedekind_sum(h, k) + dedekind_sum(k, h)
rhs = Fraction(-1, 4) + (Fraction(h, k) + Fraction(1, h * k) + Fraction(k, h)) / 12
print(f"\nreciprocity at ({h}, {k}): {lhs} == {rhs}")

print("\ncone sums (V - 1)(V - 2)/V + 12 s(a, V) for V = 7:")
for a in range(1, 7):
    if gcd(a, 7) == 1:
        print(f"  a={a}: {cone_lhs_closed_form(7, a)}")
