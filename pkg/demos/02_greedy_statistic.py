"""Build a Johnson statistic greedily and check it against Cat(a,b)_q.

Run: python3 demos/02_greedy_statistic.py [a]
"""

import math
import sys

from qcatalan import cat_q
from qcatalan.johnson import eval_j, greedy_standard_partition, slice_points, verify_catalan_property
from qcatalan.lattice import Simplex, is_root_point, iter_points
from qcatalan.qpoly import LaurentPoly
from qcatalan.verify import build_johnson_via_greedy

a = int(sys.argv[1]) if len(sys.argv) > 1 else 5

print(f"greedy blocks of the c=3 slice for a={a}:")
print(greedy_standard_partition(slice_points(a, 3), a).render())

stat = build_johnson_via_greedy(a)
b = next(b for b in range(a + 1, 3 * a) if math.gcd(a, b) == 1)
roots = [p for p in iter_points(Simplex(a, b)) if is_root_point(p, a)]
direct = LaurentPoly.from_exponents(eval_j(stat, p) for p in roots)
print(f"\nsum of q^J over the {len(roots)} root points of {b}-dilated simplex:")
print(f"  {direct}")
print(f"  equals Cat({a},{b})_q: {direct == cat_q(a, b)}")

bs = [b for b in range(1, 3 * a * (a - 1) + 1) if math.gcd(a, b) == 1]
print(f"\nCatalan property for all {len(bs)} coprime b <= {3 * a * (a - 1)}: "
      f"{all(verify_catalan_property(stat, b) for b in bs)}")
