"""Rank-two root systems B2 and G2, plus type A for cross-checks.

Points are weight-lattice coordinates ``(x_1, ..., x_n)``.  The dilated
simplex is ``x >= 0`` with ``sum(marks_i * x_i) <= b`` and the tilted height
weights coordinate ``i`` by ``w_i * marks_i``.
"""

from __future__ import annotations

import math
import time
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import NotCoprimeToCF, ResourceLimit
from .lattice import DEFAULT_POINT_BUDGET
from .qpoly import ONE, LaurentPoly, exact_div, q_int
from .verify import COUNTEREXAMPLE, VERIFIED, Verdict

__all__ = [
    "RootSystemData",
    "B2",
    "G2",
    "type_a",
    "system_by_name",
    "weyl_tilted_height",
    "weyl_is_root_point",
    "weyl_enum_simplex",
    "weyl_cat_q",
    "verify_weyl",
]


def _det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            for k in range(col, n):
                a[r][k] -= f * a[col][k]
    return int(det)


def _adjugate(m: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(m)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for k, row in enumerate(m) if k != i]
            adj[j][i] = (-1) ** (i + j) * _det(minor)
    return adj


@dataclass(frozen=True)
class RootSystemData:
    name: str
    cartan: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    marks: tuple[int, ...]
    weights: tuple[int, ...]
    f_q: LaurentPoly | None = None
    # whether the tilted height on root points already has generating
    # function Cat(W, b)_q (true for B2 and G2, false in type A for a >= 3)
    height_is_johnson: bool = True

    @property
    def n(self) -> int:
        return len(self.cartan)

    @property
    def c(self) -> int:
        """Least common multiple of the marks."""
        return reduce(math.lcm, self.marks, 1)

    @property
    def f(self) -> int:
        """Index of connection, ``det(cartan)``."""
        return _det(self.cartan)

    @property
    def order(self) -> int:
        """Order of the Weyl group, the product of the degrees."""
        return math.prod(self.degrees)

    @property
    def adjugate(self) -> list[list[int]]:
        return _adjugate(self.cartan)


B2 = RootSystemData(
    "B2",
    cartan=((2, -2), (-1, 2)),
    degrees=(2, 4),
    marks=(1, 2),
    weights=(2, 1),
    f_q=LaurentPoly({0: 1, 2: 1}),
)

G2 = RootSystemData(
    "G2",
    cartan=((2, -1), (-3, 2)),
    degrees=(2, 6),
    marks=(2, 3),
    weights=(1, 2),
    f_q=ONE,
)


def type_a(a: int) -> RootSystemData:
    """``A_{a-1}``: marks 1, weights ``i``, degrees ``2..a``."""
    n = a - 1
    cartan = tuple(
        tuple(2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)) for i in range(n)
    )
    return RootSystemData(
        f"A{n}",
        cartan=cartan,
        degrees=tuple(range(2, a + 1)),
        marks=(1,) * n,
        weights=tuple(range(1, a)),
        f_q=q_int(a),
        height_is_johnson=a <= 2,
    )


def system_by_name(name: str) -> RootSystemData:
    key = name.strip().lower()
    if key == "b2":
        return B2
    if key == "g2":
        return G2
    raise ValueError(f"unknown root system {name!r} (expected b2 or g2)")


def weyl_tilted_height(sys: RootSystemData, x: Sequence[int]) -> int:
    return sum(xi * w * c for xi, w, c in zip(x, sys.weights, sys.marks))


def weyl_is_root_point(sys: RootSystemData, x: Sequence[int]) -> bool:
    """``cartan^-1 x`` is integral, tested as ``adj(cartan) x ≡ 0 (mod det)``."""
    det = sys.f
    return all(sum(r * xi for r, xi in zip(row, x)) % det == 0 for row in sys.adjugate)


def weyl_enum_simplex(sys: RootSystemData, b: int, budget: int | None = DEFAULT_POINT_BUDGET) -> list[tuple[int, ...]]:
    """Lattice points with ``x >= 0`` and ``sum(marks_i x_i) <= b``, lexicographic."""
    marks = sys.marks
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], room: int) -> None:
        pos = len(prefix)
        if pos == len(marks):
            if budget is not None and len(out) >= budget:
                raise ResourceLimit(len(out) + 1, budget)
            out.append(prefix)
            return
        for v in range(room // marks[pos] + 1):
            rec(prefix + (v,), room - v * marks[pos])

    if b >= 0:
        rec((), b)
    return out


def _require_cf(sys: RootSystemData, b: int) -> None:
    if math.gcd(b, sys.c * sys.f) != 1:
        raise NotCoprimeToCF(sys.name, b, sys.c * sys.f)


def weyl_cat_q(sys: RootSystemData, b: int) -> LaurentPoly:
    """``prod_i [b - 1 + d_i]_q / [d_i]_q``."""
    _require_cf(sys, b)
    num = ONE
    den = ONE
    for d in sys.degrees:
        num = num * q_int(b - 1 + d)
        den = den * q_int(d)
    return exact_div(num, den)


def verify_weyl(sys: RootSystemData, b: int) -> Verdict:
    """Check the simplex generating functions and counts against the product formulas.

    The relation ``(L ∩ bΔ)_q = f(q) (R ∩ bΔ)_q`` is asserted only for B2;
    for other systems the quotient, when it exists, is reported as a note.
    When the tilted height is not a Johnson statistic (type A, ``a >= 3``)
    the root-point check is replaced by ``(L ∩ bΔ)_q = f(q) Cat(W,b)_q``.
    """
    _require_cf(sys, b)
    t0 = time.perf_counter()
    pts = weyl_enum_simplex(sys, b)
    all_hist: dict[int, int] = {}
    root_hist: dict[int, int] = {}
    for x in pts:
        t = weyl_tilted_height(sys, x)
        all_hist[t] = all_hist.get(t, 0) + 1
        if weyl_is_root_point(sys, x):
            root_hist[t] = root_hist.get(t, 0) + 1
    weight_gf = LaurentPoly(all_hist)
    root_gf = LaurentPoly(root_hist)
    expected = weyl_cat_q(sys, b)
    prod = math.prod(b + d - 1 for d in sys.degrees)
    failures = {}
    if sys.height_is_johnson:
        if root_gf != expected:
            failures["root_generating_function"] = {"got": str(root_gf), "expected": str(expected)}
    elif weight_gf != sys.f_q * expected:
        failures["weight_generating_function"] = {
            "got": str(weight_gf),
            "expected": f"({sys.f_q}) * ({expected})",
        }
    if len(pts) * sys.order != sys.f * prod:
        failures["weight_count"] = {"got": len(pts), "expected": f"{sys.f}*{prod}/{sys.order}"}
    if sum(root_hist.values()) * sys.order != prod:
        failures["root_count"] = {"got": sum(root_hist.values()), "expected": f"{prod}/{sys.order}"}
    if expected.eval_at_one() * sys.order != prod:
        failures["cat_at_one"] = {"got": expected.eval_at_one(), "expected": f"{prod}/{sys.order}"}
    notes = []
    if sys.name == "B2":
        if weight_gf != sys.f_q * root_gf:
            failures["f_q"] = {"got": str(weight_gf), "expected": f"({sys.f_q}) * ({root_gf})"}
    else:
        try:
            notes.append(f"weight/root quotient: {exact_div(weight_gf, root_gf)}")
        except ArithmeticError:
            notes.append("weight/root quotient is not a polynomial")
    return Verdict(
        "weyl",
        {"system": sys.name, "b": b},
        COUNTEREXAMPLE if failures else VERIFIED,
        {"system": sys.name, "b": b, **failures} if failures else None,
        time.perf_counter() - t0,
        len(pts),
        notes,
    )
