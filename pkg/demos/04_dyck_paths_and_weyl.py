"""Dyck-path cross-checks and the B2 / G2 simplex identities.

Run: python3 demos/04_dyck_paths_and_weyl.py
"""

from qcatalan import cat_q
from qcatalan.dyck import DyckPath, area, qt_catalan, sweep
from qcatalan.weyl import B2, G2, verify_weyl, weyl_cat_q

p = DyckPath(4, 7, "uurruurrrrr")
print(f"{p}: area {area(p)}, sweep {sweep(p)} with area {area(sweep(p))}")

f = qt_catalan(4, 7)
print(f"\nCat(4,7)_(q,t) has {f.eval_at_one()} terms at q=t=1")
print(f"symmetric in q and t: {f.swap_vars() == f}")
print(f"t -> 1/q, shifted, equals Cat(4,7)_q: {f.specialize_t_to_inverse_q().shift(9) == cat_q(4, 7)}")

for system, bs in ((B2, (1, 3, 5, 7, 9)), (G2, (1, 5, 7, 11))):
    print(f"\n{system.name}:")
    for b in bs:
        v = verify_weyl(system, b)
        print(f"  b={b:2d}: {v.status:8s} Cat = {weyl_cat_q(system, b)}")
