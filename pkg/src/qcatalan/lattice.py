"""Type-A weight lattice geometry in fundamental-weight coordinates.

A point of the rank ``a - 1`` weight lattice is a plain tuple of ``a - 1``
integers.  The rank ``a`` is always passed explicitly or carried by a region,
because the empty tuple (``a = 1``) and short tuples are otherwise ambiguous
in helper signatures.
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import DimensionMismatch, ResourceLimit
from .qpoly import LaurentPoly

__all__ = [
    "Point",
    "DEFAULT_POINT_BUDGET",
    "tilted_height",
    "tilted_leq",
    "is_cover",
    "tilted_basis",
    "to_tilted_coords",
    "from_tilted_coords",
    "coset_index",
    "is_root_point",
    "quo_rem_mod_a",
    "phi",
    "Simplex",
    "BoxSlice",
    "Box",
    "RotatedBox",
    "region_from_json",
    "count_points",
    "iter_points",
    "enumerate_points",
    "height_gen_poly",
    "height_histogram",
]

Point = tuple[int, ...]

DEFAULT_POINT_BUDGET = 10**8


def _check_dim(p: Sequence[int], a: int) -> None:
    if len(p) != a - 1:
        raise DimensionMismatch(f"expected {a - 1} coordinates for a={a}, got {len(p)}")


def tilted_height(p: Sequence[int]) -> int:
    """``x_1 + 2 x_2 + ... + (a-1) x_{a-1}``."""
    return sum(i * x for i, x in enumerate(p, 1))


def to_tilted_coords(p: Sequence[int]) -> tuple[int, ...]:
    """Suffix sums ``y_i = x_i + ... + x_{a-1}``."""
    out = []
    acc = 0
    for x in reversed(p):
        acc += x
        out.append(acc)
    return tuple(reversed(out))


def from_tilted_coords(y: Sequence[int]) -> Point:
    n = len(y)
    return tuple(y[i] - (y[i + 1] if i + 1 < n else 0) for i in range(n))


def tilted_leq(p: Sequence[int], r: Sequence[int]) -> bool:
    if len(p) != len(r):
        raise DimensionMismatch("points of different rank")
    sp = sr = 0
    for x, y in zip(reversed(p), reversed(r)):
        sp += x
        sr += y
        if sp > sr:
            return False
    return True


def tilted_basis(a: int) -> list[Point]:
    """``omega_1, omega_2 - omega_1, ..., omega_{a-1} - omega_{a-2}``."""
    n = a - 1
    basis = []
    for i in range(n):
        v = [0] * n
        v[i] = 1
        if i:
            v[i - 1] = -1
        basis.append(tuple(v))
    return basis


def is_cover(p: Sequence[int], r: Sequence[int]) -> bool:
    """True iff ``r - p`` is a tilted basis vector."""
    if len(p) != len(r):
        raise DimensionMismatch("points of different rank")
    diff = [y - x for x, y in zip(p, r)]
    nz = [(i, d) for i, d in enumerate(diff) if d]
    if len(nz) == 1:
        return nz[0] == (0, 1)
    if len(nz) == 2:
        (i, di), (j, dj) = nz
        return j == i + 1 and di == -1 and dj == 1
    return False


def coset_index(p: Sequence[int], a: int) -> int:
    return tilted_height(p) % a


def is_root_point(p: Sequence[int], a: int) -> bool:
    return tilted_height(p) % a == 0


def quo_rem_mod_a(p: Sequence[int], a: int) -> tuple[Point, Point]:
    """Coordinatewise Euclidean division: ``p == a*quo + rem`` with ``0 <= rem < a``."""
    pairs = [divmod(x, a) for x in p]
    return tuple(d for d, _ in pairs), tuple(m for _, m in pairs)


def phi(b: int, p: Sequence[int]) -> Point:
    """``(b - sum(p), x_1, ..., x_{a-2})``: rotation of the dilated simplex."""
    if not p:
        return ()
    return (b - sum(p),) + tuple(p[:-1])


# regions ------------------------------------------------------------------


@dataclass(frozen=True)
class Simplex:
    """Lattice points ``x >= 0`` with ``sum(x) <= b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("a must be >= 1")
        if self.b < 0:
            raise ValueError("Simplex requires b >= 0")

    def to_json(self) -> dict:
        return {"type": "simplex", "a": self.a, "b": self.b}


@dataclass(frozen=True)
class BoxSlice:
    """Points of ``{0..a-1}^(a-1)`` with ``m <= sum(x) <= n``."""

    a: int
    m: int
    n: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError("a must be >= 1")

    def to_json(self) -> dict:
        return {"type": "box_slice", "a": self.a, "m": self.m, "n": self.n}


def Box(a: int) -> BoxSlice:
    """The fundamental box ``[0, a)^(a-1)``."""
    return BoxSlice(a, 0, (a - 1) * (a - 1))


@dataclass(frozen=True)
class RotatedBox:
    """``0 <= x_j < a`` for ``j != i`` and ``b - a < sum(x) <= b``.

    ``i`` is 1-based and names the coordinate that is allowed to grow; the
    box sits at the simplex vertex ``b * omega_i``.  ``i == 0`` is the vertex
    at the origin, where the region is the unrotated box for every ``b``.
    """

    a: int
    b: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i <= self.a - 1:
            raise ValueError("RotatedBox requires 0 <= i <= a-1")

    def to_json(self) -> dict:
        return {"type": "rotated_box", "a": self.a, "b": self.b, "i": self.i}


Region = Simplex | BoxSlice | RotatedBox


def region_from_json(obj: dict | str) -> Region:
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj["type"]
    if kind == "simplex":
        return Simplex(obj["a"], obj["b"])
    if kind == "box_slice":
        return BoxSlice(obj["a"], obj["m"], obj["n"])
    if kind == "box":
        return Box(obj["a"])
    if kind == "rotated_box":
        return RotatedBox(obj["a"], obj["b"], obj["i"])
    raise ValueError(f"unknown region type {kind!r}")


def _bounded_sum_count(dim: int, upper: int, total: int) -> int:
    """Number of ``x in {0..upper-1}^dim`` with ``sum(x) == total``."""
    if total < 0:
        return 0
    if dim == 0:
        return int(total == 0)
    out = 0
    for j in range(dim + 1):
        rest = total - j * upper
        if rest < 0:
            break
        out += (-1) ** j * math.comb(dim, j) * math.comb(rest + dim - 1, dim - 1)
    return out


def count_points(region: Region) -> int:
    """Exact number of lattice points in ``region`` without enumerating."""
    a = region.a
    if isinstance(region, Simplex):
        return math.comb(a - 1 + region.b, a - 1)
    if isinstance(region, BoxSlice):
        lo = max(region.m, 0)
        hi = min(region.n, (a - 1) * (a - 1))
        return sum(_bounded_sum_count(a - 1, a, s) for s in range(lo, hi + 1))
    # i == 0 is the whole box; otherwise a-2 free coordinates in 0..a-1
    # and exactly a admissible values of x_i
    return a ** (a - 1)


def _iter_bounded(dim: int, upper: int, lo: int, hi: int) -> Iterator[Point]:
    """Lexicographic ``x in {0..upper-1}^dim`` with ``lo <= sum(x) <= hi``."""
    if dim == 0:
        if lo <= 0 <= hi:
            yield ()
        return
    cap = (upper - 1) * (dim - 1)
    for first in range(upper):
        rem_lo, rem_hi = lo - first, hi - first
        if rem_hi < 0:
            break
        if rem_lo > cap:
            continue
        for rest in _iter_bounded(dim - 1, upper, rem_lo, rem_hi):
            yield (first,) + rest


def _iter_simplex(dim: int, b: int) -> Iterator[Point]:
    if dim == 0:
        yield ()
        return
    for first in range(b + 1):
        for rest in _iter_simplex(dim - 1, b - first):
            yield (first,) + rest


def _iter_rotated(a: int, b: int, i: int) -> Iterator[Point]:
    n = a - 1

    def rec(prefix: tuple[int, ...], pos: int) -> Iterator[Point]:
        if pos == n:
            yield prefix
            return
        if pos == i - 1:
            # remaining free coords after position i-1 can sum to 0..(a-1)*k
            k = n - pos - 1
            s = sum(prefix)
            lo_xi = b - a + 1 - s - (a - 1) * k
            hi_xi = b - s
            for xi in range(lo_xi, hi_xi + 1):
                lo_rest = b - a + 1 - s - xi
                hi_rest = b - s - xi
                for rest in _iter_bounded(k, a, lo_rest, hi_rest):
                    yield prefix + (xi,) + rest
            return
        for v in range(a):
            yield from rec(prefix + (v,), pos + 1)

    yield from rec((), 0)


def iter_points(region: Region, budget: int | None = DEFAULT_POINT_BUDGET) -> Iterator[Point]:
    """Lazily yield the points of ``region`` in lexicographic order.

    Raises :class:`ResourceLimit` up front if the exact point count exceeds
    ``budget`` (``None`` disables the check).
    """
    if budget is not None:
        n = count_points(region)
        if n > budget:
            raise ResourceLimit(n, budget)
    a = region.a
    if isinstance(region, Simplex):
        return _iter_simplex(a - 1, region.b)
    if isinstance(region, BoxSlice):
        return _iter_bounded(a - 1, a, region.m, region.n)
    if region.i == 0:
        return _iter_bounded(a - 1, a, 0, (a - 1) * (a - 1))
    return _iter_rotated(a, region.b, region.i)


def enumerate_points(region: Region, budget: int | None = DEFAULT_POINT_BUDGET) -> list[Point]:
    return list(iter_points(region, budget))


def height_histogram(points: Iterable[Sequence[int]]) -> dict[int, int]:
    hist: dict[int, int] = {}
    for p in points:
        t = tilted_height(p)
        hist[t] = hist.get(t, 0) + 1
    return hist


def height_gen_poly(points: Iterable[Sequence[int]]) -> LaurentPoly:
    """``sum(q**T(x))`` over ``points``."""
    return LaurentPoly(height_histogram(points))


def check_point(p: Sequence[int], a: int) -> Point:
    """Validate the rank and return ``p`` as a tuple."""
    _check_dim(p, a)
    return tuple(int(x) for x in p)


def points_in_order(points: Iterable[Point]) -> list[Point]:
    return sorted(points, key=lambda p: (tilted_height(p), p))

