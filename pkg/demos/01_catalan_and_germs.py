"""Rational q-Catalan numbers and how the germs rebuild them.

Run: python3 demos/01_catalan_and_germs.py
"""

import math

from qcatalan import cat_q, germ_table
from qcatalan.catalan import germ_reconstruction

a = 5
print(f"Cat({a},b)_q for small coprime b:")
for b in range(1, 10):
    if math.gcd(a, b) == 1:
        print(f"  b={b}: {cat_q(a, b)}")

table = germ_table(a)
print(f"\n{len(table)} germs for a={a}, one per coprime c <= {(a - 1) ** 2}:")
for c, g in table:
    print(f"  c={c:2d}: {g}")

print("\nThe germs determine every Cat(a,b)_q:")
for b in (17, 23, 31):
    rebuilt = germ_reconstruction(a, b)
    print(f"  b={b}: rebuilt == direct: {rebuilt == cat_q(a, b)}, value at q=1: {rebuilt.eval_at_one()}")
