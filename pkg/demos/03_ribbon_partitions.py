"""Search for partitions of box slices into saturated chains (ribbons).

Run: python3 demos/03_ribbon_partitions.py
"""

from qcatalan.catalan import coprime_residues
from qcatalan.errors import SearchTimeout
from qcatalan.johnson import (
    a4_ribbon_partition,
    count_ribbon_partitions,
    iter_ribbon_partitions,
    ribbon_partition_search,
    slice_points,
)
from qcatalan.lattice import BoxSlice, enumerate_points

pts = enumerate_points(BoxSlice(5, 2, 2))
print(f"a=5, coordinate sum 2: {len(pts)} points")
for n, part in enumerate(iter_ribbon_partitions(pts, a=5), 1):
    print(f"\npartition {n}:")
    print(part.render())

# Full counts blow up on the middle slices; fall back to finding one.
print("\nribbon partitions per slice, a=5:")
for c in coprime_residues(5):
    pts = slice_points(5, c)
    try:
        found = str(count_ribbon_partitions(pts, budget=100_000, a=5))
    except SearchTimeout:
        found = "too many to count; one found" if ribbon_partition_search(pts, a=5) else "none"
    print(f"  c={c:2d}: {found}")

print("\na fixed ribbon partition of the a=4 box:")
print(a4_ribbon_partition().render())
