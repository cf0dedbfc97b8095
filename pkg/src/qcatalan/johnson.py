"""Johnson statistics, standard partitions and ribbon partitions.

A Johnson statistic is stored on the root-lattice representatives inside the
fundamental box and extended to the whole root lattice by periodicity,
``J(r + a*y) = J(r) + a*T(y)``.  Two implementations share one interface:

* :class:`JohnsonStatistic` keeps an explicit table.
* :class:`GreedyStatistic` evaluates the greedy standard partition lazily,
  from the height histogram of each slice and a lexicographic rank, so it
  scales to ranks whose ``a**(a-2)`` table would not fit in memory.
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .catalan import cat_q, coprime_residues, prev_coprime
from .errors import (
    MalformedPartition,
    NotCoprime,
    NotRootPoint,
    ResourceLimit,
    SearchTimeout,
    Stuck,
)
from .lattice import (
    Box,
    BoxSlice,
    Point,
    RotatedBox,
    Simplex,
    count_points,
    enumerate_points,
    is_cover,
    is_root_point,
    iter_points,
    quo_rem_mod_a,
    tilted_basis,
    tilted_height,
)
from .qpoly import ONE, ZERO, LaurentPoly, exact_div, q_binomial, q_int, q_pochhammer

__all__ = [
    "JohnsonStatistic",
    "GreedyStatistic",
    "Partition",
    "DEFAULT_NODE_BUDGET",
    "eval_j",
    "is_standard_set",
    "is_ribbon",
    "greedy_standard_partition",
    "partition_to_johnson",
    "slice_bounds",
    "slice_points",
    "run_decomposition",
    "ribbon_partition_search",
    "count_ribbon_partitions",
    "iter_ribbon_partitions",
    "A4_RIBBON_BLOCKS",
    "A4_RIBBON_J",
    "a4_ribbon_partition",
    "a4_ribbon_statistic",
    "unique_statistic_a3",
    "column_statistic",
    "coset_sum",
    "verify_catalan_property",
    "verify_coset_decomposition",
    "rotated_box_sum",
    "box_identity_rhs",
    "verify_box_identities",
    "lemma_pochhammer_identity",
    "brion_terms",
    "verify_brion",
]

DEFAULT_NODE_BUDGET = 10**6


def _rank_of(points: Sequence[Point]) -> int:
    if not points:
        raise ValueError("cannot infer the rank from an empty point set")
    return len(points[0]) + 1


def _require_coprime(a: int, b: int) -> None:
    if math.gcd(a, b) != 1:
        raise NotCoprime(a, b)


# statistics -----------------------------------------------------------------


class JohnsonStatistic:
    """Explicit table ``{representative: J}`` over ``R ∩ Box``."""

    def __init__(self, a: int, table: Mapping[Point, int]):
        self.a = a
        self._table = {tuple(p): int(j) for p, j in table.items()}

    @property
    def table(self) -> dict[Point, int]:
        return self._table

    def value(self, rep: Point) -> int:
        return self._table[rep]

    def __len__(self) -> int:
        return len(self._table)

    def __eq__(self, other):
        if not isinstance(other, JohnsonStatistic):
            return NotImplemented
        return self.a == other.a and self.table == other.table

    def check_shape(self) -> None:
        """Raise ``ValueError`` unless the keys are exactly ``R ∩ Box``."""
        a = self.a
        if len(self._table) != a ** (a - 2):
            raise ValueError(f"expected {a ** (a - 2)} representatives, got {len(self._table)}")
        for p in self._table:
            if len(p) != a - 1 or not all(0 <= x < a for x in p) or not is_root_point(p, a):
                raise ValueError(f"{list(p)} is not a root representative in the box")

    def sum_profile(self) -> list[tuple[int, int, LaurentPoly]]:
        """``(lo, hi, sum q^J)`` over representatives with coordinate sum in ``[lo, hi]``."""
        by_sum: dict[int, dict[int, int]] = {}
        for p, j in self._table.items():
            hist = by_sum.setdefault(sum(p), {})
            hist[j] = hist.get(j, 0) + 1
        return [(s, s, LaurentPoly(h)) for s, h in sorted(by_sum.items())]

    def to_json(self) -> str:
        entries = [{"point": list(p), "j": j} for p, j in sorted(self._table.items())]
        return json.dumps({"a": self.a, "entries": entries})

    @classmethod
    def from_json(cls, text: str) -> JohnsonStatistic:
        obj = json.loads(text)
        return cls(obj["a"], {tuple(e["point"]): e["j"] for e in obj["entries"]})

    def __repr__(self):
        return f"{type(self).__name__}(a={self.a}, entries={len(self)})"


def eval_j(stat: JohnsonStatistic, p: Sequence[int]) -> int:
    a = stat.a
    if not is_root_point(p, a):
        raise NotRootPoint(p)
    quo, rem = quo_rem_mod_a(p, a)
    return stat.value(rem) + a * tilted_height(quo)


def slice_bounds(a: int) -> list[tuple[int, int]]:
    """``(c'+1, c)`` for every coprime ``c`` in ``1..(a-1)^2``."""
    return [(max(prev_coprime(a, c) + 1, 0), c) for c in coprime_residues(a)]


def slice_points(a: int, c: int, budget: int | None = None) -> list[Point]:
    return enumerate_points(BoxSlice(a, prev_coprime(a, c) + 1, c), budget)


def run_decomposition(hist: Mapping[int, int], a: int) -> tuple[dict[int, int], int | None]:
    """Peel runs of ``a`` consecutive heights from the bottom of a histogram.

    Returns ``(starts, stuck)`` where ``starts[t]`` is the number of runs
    starting at height ``t``.  ``stuck`` is the first height at which the
    runs demanded exceed the points available, or ``None`` if the histogram
    is an exact nonnegative sum of runs.
    """
    if not hist:
        return {}, None
    lo, hi = min(hist), max(hist)
    starts: dict[int, int] = {}
    window = 0
    pending: dict[int, int] = {}
    for t in range(lo, hi + a):
        window -= pending.pop(t - a, 0)
        n = hist.get(t, 0) - window
        if n < 0:
            return starts, t
        if n:
            starts[t] = n
            pending[t] = n
            window += n
    return starts, None


class GreedyStatistic(JohnsonStatistic):
    """The statistic produced by greedy standard partitions, evaluated lazily.

    Inside a slice the greedy pass consumes each height class in
    lexicographic order, one point per open block, opening blocks in order
    of their bottom height.  So the ``k``-th lexicographic point at height
    ``t`` belongs to the ``k``-th block covering ``t``, and the block
    bottoms are the run decomposition of the slice's height histogram.
    Counting lexicographically smaller points uses a digit table of
    ``#{suffix in [0,a)^k : sum = s, weighted sum = w}``.
    """

    def __init__(self, a: int):
        if a < 2:
            raise ValueError("GreedyStatistic requires a >= 2")
        self.a = a
        self._table = None
        n = a - 1
        self._max_sum = n * n
        self._slice_of = [0] * (self._max_sum + 1)
        bounds = slice_bounds(a)
        for lo, hi in bounds:
            for s in range(lo, hi + 1):
                self._slice_of[s] = hi
        self._lower = {hi: lo for lo, hi in bounds}
        self._build_digit_tables()
        self._starts: dict[int, dict[int, int]] = {}
        for lo, hi in bounds:
            hist = self.slice_histogram(hi)
            starts, stuck = run_decomposition(hist, a)
            if stuck is not None:
                raise Stuck(stuck, [])
            self._starts[hi] = starts

    def _build_digit_tables(self) -> None:
        a, n, top = self.a, self.a - 1, self._max_sum
        wmax = n * n * a // 2 + 1
        # cum[j][s][w] = #{(x_j..x_n) in [0,a)^(n-j+1): sum <= s, weighted = w}
        cur = np.zeros((top + 1, wmax + 1), dtype=np.int64)
        cur[0, 0] = 1
        tables = [None] * (n + 2)
        tables[n + 1] = np.cumsum(cur, axis=0)
        for j in range(n, 0, -1):
            nxt = np.zeros_like(cur)
            for v in range(a):
                if v > top or j * v > wmax:
                    break
                nxt[v:, j * v :] += cur[: top + 1 - v, : wmax + 1 - j * v]
            cur = nxt
            tables[j] = np.cumsum(cur, axis=0)
        self._cum = tables
        self._wmax = wmax

    def _count(self, j: int, lo: int, hi: int, w: int) -> int:
        """Suffixes from position ``j`` with ``lo <= sum <= hi`` and weighted sum ``w``."""
        if w < 0 or w > self._wmax:
            return 0
        hi = min(hi, self._max_sum)
        if hi < 0 or lo > hi:
            return 0
        tab = self._cum[j]
        out = int(tab[hi, w])
        if lo > 0:
            out -= int(tab[lo - 1, w])
        return out

    def slice_histogram(self, c: int) -> dict[int, int]:
        lo = self._lower[c]
        col = self._cum[1][c] - (self._cum[1][lo - 1] if lo > 0 else 0)
        return {int(t): int(col[t]) for t in np.nonzero(col)[0]}

    def block_starts(self, c: int) -> dict[int, int]:
        return dict(self._starts[c])

    def lex_rank(self, p: Point) -> int:
        """Points of ``p``'s slice at ``p``'s height that precede ``p`` lexicographically."""
        c = self._slice_of[sum(p)]
        lo = self._lower[c]
        t = tilted_height(p)
        rank = 0
        prefix_sum = prefix_w = 0
        for pos, x in enumerate(p, 1):
            for v in range(x):
                rank += self._count(
                    pos + 1, lo - prefix_sum - v, c - prefix_sum - v, t - prefix_w - pos * v
                )
            prefix_sum += x
            prefix_w += pos * x
        return rank

    def value(self, rep: Point) -> int:
        a = self.a
        if len(rep) != a - 1 or not all(0 <= x < a for x in rep):
            raise KeyError(rep)
        if not is_root_point(rep, a):
            raise NotRootPoint(rep)
        c = self._slice_of[sum(rep)]
        t = tilted_height(rep)
        rank = self.lex_rank(rep)
        starts = self._starts[c]
        seen = 0
        for s in range(t - a + 1, t + 1):
            seen += starts.get(s, 0)
            if rank < seen:
                return s
        raise AssertionError(f"rank {rank} exceeds blocks covering height {t}")

    @property
    def table(self) -> dict[Point, int]:
        if self._table is None:
            a = self.a
            size = a ** (a - 2)
            if size > 2 * 10**6:
                raise ResourceLimit(size, 2 * 10**6, "table entries")
            self._table = {
                p: self.value(p) for p in iter_points(Box(a), None) if is_root_point(p, a)
            }
        return self._table

    def __len__(self) -> int:
        return self.a ** (self.a - 2)

    def sum_profile(self) -> list[tuple[int, int, LaurentPoly]]:
        """One entry per slice.

        Every root point at a height divisible by ``a`` is a block's root, and
        the blocks covering that height start at distinct heights weighted by
        the run decomposition, so the slice total is ``sum_s starts[s] q^s``.
        """
        return [
            (self._lower[c], c, LaurentPoly(self._starts[c])) for c in sorted(self._starts)
        ]


# standard sets and partitions ------------------------------------------------


def _sorted_by_height(points: Iterable[Point]) -> list[Point]:
    return sorted((tuple(p) for p in points), key=lambda p: (tilted_height(p), p))


def is_standard_set(points: Iterable[Sequence[int]]) -> bool:
    pts = [tuple(p) for p in points]
    if not pts:
        return False
    a = _rank_of(pts)
    if len(pts) != a or len(set(pts)) != a:
        return False
    heights = sorted(tilted_height(p) for p in pts)
    return heights == list(range(heights[0], heights[0] + a))


def is_ribbon(points: Iterable[Sequence[int]]) -> bool:
    pts = _sorted_by_height(points)
    if not is_standard_set(pts):
        return False
    return all(is_cover(p, r) for p, r in zip(pts, pts[1:]))


@dataclass
class Partition:
    blocks: list[list[Point]] = field(default_factory=list)

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def points(self) -> list[Point]:
        return [p for b in self.blocks for p in b]

    def to_json(self) -> str:
        return json.dumps([[list(p) for p in b] for b in self.blocks])

    @classmethod
    def from_json(cls, text: str) -> Partition:
        return cls([[tuple(p) for p in b] for b in json.loads(text)])

    def render(self) -> str:
        """One line per block, highest point first, root point in angle brackets."""
        lines = []
        for block in self.blocks:
            if not block:
                continue
            a = len(block[0]) + 1
            pts = sorted(block, key=lambda p: (-tilted_height(p), p))
            cells = []
            for p in pts:
                body = ",".join(map(str, p))
                cells.append(f"<{body}>" if is_root_point(p, a) else f"({body})")
            lines.append(" ".join(cells) + f"  J={min(map(tilted_height, block))}")
        return "\n".join(lines)


def greedy_standard_partition(points: Iterable[Sequence[int]], a: int | None = None) -> Partition:
    """Partition ``points`` into standard sets, lowest height first.

    Each block starts at the lowest free point (lexicographically least among
    ties) and takes the lexicographically least free point at each of the
    next ``a - 1`` heights.  Raises :class:`Stuck` naming the empty height.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        return Partition([])
    if a is None:
        a = _rank_of(pts)
    if len(pts) % a:
        raise ValueError(f"{len(pts)} points cannot be split into blocks of {a}")
    classes: dict[int, list[Point]] = {}
    for p in pts:
        classes.setdefault(tilted_height(p), []).append(p)
    for cls_pts in classes.values():
        cls_pts.sort(reverse=True)  # pop() yields the lex-least
    heights = sorted(classes)
    blocks = []
    hi_idx = 0
    while True:
        while hi_idx < len(heights) and not classes[heights[hi_idx]]:
            hi_idx += 1
        if hi_idx == len(heights):
            break
        t0 = heights[hi_idx]
        block = []
        for t in range(t0, t0 + a):
            avail = classes.get(t)
            if not avail:
                raise Stuck(t, block)
            block.append(avail.pop())
        blocks.append(block)
    return Partition(blocks)


def partition_to_johnson(slices: Iterable[Partition], a: int) -> JohnsonStatistic:
    """Give each block's unique root point the block's lowest height."""
    table: dict[Point, int] = {}
    for part in slices:
        for block in part:
            roots = [p for p in block if is_root_point(p, a)]
            if len(roots) != 1:
                raise MalformedPartition(f"block {block} has {len(roots)} root points")
            root = roots[0]
            if root in table:
                raise MalformedPartition(f"root point {list(root)} appears in two blocks")
            table[root] = min(tilted_height(p) for p in block)
    return JohnsonStatistic(a, table)


# ribbon partitions ------------------------------------------------------------


class _RibbonSearch:
    """Depth-first enumeration of ribbon partitions of a finite point set."""

    def __init__(self, points: Iterable[Sequence[int]], budget: int, a: int | None = None):
        self.order = _sorted_by_height(points)
        self.a = a if a is not None else _rank_of(self.order)
        if len(self.order) % self.a:
            raise ValueError(f"{len(self.order)} points cannot be split into ribbons of {self.a}")
        self.free = set(self.order)
        self.hist: dict[int, int] = {}
        for p in self.order:
            t = tilted_height(p)
            self.hist[t] = self.hist.get(t, 0) + 1
        self.basis = tilted_basis(self.a)
        self.budget = budget
        self.nodes = 0
        self.blocks: list[list[Point]] = []

    def _feasible(self) -> bool:
        return run_decomposition({t: n for t, n in self.hist.items() if n}, self.a)[1] is None

    def _chains(self, start: Point) -> Iterable[list[Point]]:
        chain = [start]

        def extend():
            if len(chain) == self.a:
                yield list(chain)
                return
            cur = chain[-1]
            for v in self.basis:
                nxt = tuple(x + d for x, d in zip(cur, v))
                if nxt in self.free:
                    chain.append(nxt)
                    yield from extend()
                    chain.pop()

        yield from extend()

    def _take(self, chain: list[Point]) -> None:
        for p in chain:
            self.free.remove(p)
            self.hist[tilted_height(p)] -= 1

    def _give(self, chain: list[Point]) -> None:
        for p in chain:
            self.free.add(p)
            self.hist[tilted_height(p)] += 1

    def solutions(self) -> Iterable[Partition]:
        if not self._feasible():
            return
        yield from self._search()

    def _search(self) -> Iterable[Partition]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchTimeout(self.nodes - 1, self.budget)
        start = next((p for p in self.order if p in self.free), None)
        if start is None:
            yield Partition([list(b) for b in self.blocks])
            return
        self.free.remove(start)
        self.hist[tilted_height(start)] -= 1
        candidates = list(self._chains(start))
        self.free.add(start)
        self.hist[tilted_height(start)] += 1
        for chain in candidates:
            self._take(chain)
            if self._feasible():
                self.blocks.append(chain)
                yield from self._search()
                self.blocks.pop()
            self._give(chain)


def iter_ribbon_partitions(points, budget: int = DEFAULT_NODE_BUDGET, a: int | None = None):
    return _RibbonSearch(points, budget, a).solutions()


def ribbon_partition_search(
    points: Iterable[Sequence[int]], budget: int = DEFAULT_NODE_BUDGET, a: int | None = None
) -> Partition | None:
    """First ribbon partition in branch order, or ``None`` when none exists.

    Raises :class:`SearchTimeout` if the node budget runs out first, which is
    distinct from the exhaustive ``None`` answer.
    """
    return next(iter(_RibbonSearch(points, budget, a).solutions()), None)


def count_ribbon_partitions(
    points: Iterable[Sequence[int]], budget: int = DEFAULT_NODE_BUDGET, a: int | None = None
) -> int:
    return sum(1 for _ in _RibbonSearch(points, budget, a).solutions())


# fixed statistics ---------------------------------------------------------------

# A ribbon partition of the a=4 box.  Blocks 1 | 2-5 | 6-11 | 12-15 | 16 fill
# the slices ending at coordinate sums 1, 3, 5, 7, 9.
A4_RIBBON_BLOCKS: tuple[tuple[Point, ...], ...] = (
    ((0, 0, 1), (0, 1, 0), (1, 0, 0), (0, 0, 0)),
    ((2, 0, 1), (2, 1, 0), (3, 0, 0), (2, 0, 0)),
    ((1, 1, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0)),
    ((0, 2, 1), (0, 3, 0), (1, 2, 0), (0, 2, 0)),
    ((0, 0, 3), (0, 1, 2), (1, 0, 2), (0, 0, 2)),
    ((3, 1, 1), (2, 1, 1), (3, 0, 1), (3, 1, 0)),
    ((2, 2, 1), (2, 3, 0), (3, 2, 0), (2, 2, 0)),
    ((1, 3, 1), (0, 3, 1), (1, 2, 1), (1, 3, 0)),
    ((2, 0, 3), (2, 1, 2), (3, 0, 2), (2, 0, 2)),
    ((1, 1, 3), (0, 1, 3), (1, 0, 3), (1, 1, 2)),
    ((0, 2, 3), (0, 3, 2), (1, 2, 2), (0, 2, 2)),
    ((3, 3, 1), (2, 3, 1), (3, 2, 1), (3, 3, 0)),
    ((3, 1, 3), (2, 1, 3), (3, 0, 3), (3, 1, 2)),
    ((2, 2, 3), (2, 3, 2), (3, 2, 2), (2, 2, 2)),
    ((1, 3, 3), (0, 3, 3), (1, 2, 3), (1, 3, 2)),
    ((3, 3, 3), (2, 3, 3), (3, 2, 3), (3, 3, 2)),
)

A4_RIBBON_J: tuple[int, ...] = (0, 2, 3, 4, 6, 5, 6, 7, 8, 9, 10, 9, 11, 12, 13, 15)


def a4_ribbon_partition() -> Partition:
    return Partition([list(b) for b in A4_RIBBON_BLOCKS])


def a4_ribbon_statistic() -> JohnsonStatistic:
    return partition_to_johnson([a4_ribbon_partition()], 4)


def unique_statistic_a3() -> JohnsonStatistic:
    return JohnsonStatistic(3, {(0, 0): 0, (1, 1): 2, (2, 2): 4})


def column_statistic(a: int) -> JohnsonStatistic:
    """``J(x) = 2 x_2 + ... + (a-1) x_{a-1}`` on each representative."""
    if a < 2:
        raise ValueError("column_statistic requires a >= 2")
    table = {
        p: tilted_height(p) - p[0]
        for p in iter_points(Box(a), None)
        if is_root_point(p, a)
    }
    return JohnsonStatistic(a, table)


# verification -----------------------------------------------------------------


def coset_sum(stat: JohnsonStatistic, b: int) -> LaurentPoly:
    """``sum_r q^J(r) [a-1+floor((b-sum r)/a) choose a-1]_{q^a}`` over representatives."""
    a = stat.a
    out = ZERO
    cache: dict[int, LaurentPoly] = {}
    for lo, hi, poly in stat.sum_profile():
        level = (b - hi) // a
        if (b - lo) // a != level:
            raise ValueError(f"floor not constant on sums {lo}..{hi} for b={b}")
        if level < 0:
            continue
        if level not in cache:
            cache[level] = q_binomial(a - 1 + level, a - 1).substitute_power(a)
        out = out + poly * cache[level]
    return out


def verify_coset_decomposition(stat: JohnsonStatistic, b: int) -> bool:
    _require_coprime(stat.a, b)
    return coset_sum(stat, b) == cat_q(stat.a, b)


def catalan_sum_direct(stat: JohnsonStatistic, b: int, budget: int | None = None) -> LaurentPoly:
    """``sum q^J(x)`` over root points of ``b Δ``, one point at a time."""
    a = stat.a
    hist: dict[int, int] = {}
    for p in iter_points(Simplex(a, b), budget):
        if is_root_point(p, a):
            j = eval_j(stat, p)
            hist[j] = hist.get(j, 0) + 1
    return LaurentPoly(hist)


def verify_catalan_property(stat: JohnsonStatistic, b: int, direct_limit: int = 200_000) -> bool:
    """Check that ``J`` on the root points of ``b Δ`` has generating function ``Cat(a,b)_q``.

    Small simplices are summed point by point.  Larger ones are summed by
    writing each root point as ``a*y + r`` with ``r`` a representative, which
    groups the same terms by ``r``; ``y`` then ranges over a dilated simplex
    whose ``q^(a T(y))`` sum is a q-binomial in ``q^a``.
    """
    a = stat.a
    _require_coprime(a, b)
    if b < 0:
        raise ValueError("b must be >= 0")
    if count_points(Simplex(a, b)) <= direct_limit:
        got = catalan_sum_direct(stat, b)
    else:
        got = coset_sum(stat, b)
    return got == cat_q(a, b)


def rotated_box_sum(stat: JohnsonStatistic, b: int, i: int) -> LaurentPoly:
    a = stat.a
    hist: dict[int, int] = {}
    for p in iter_points(RotatedBox(a, b, i), None):
        if is_root_point(p, a):
            j = eval_j(stat, p)
            hist[j] = hist.get(j, 0) + 1
    return LaurentPoly(hist)


def _box_product(a: int, i: int) -> LaurentPoly:
    out = ONE
    for k in range(1, i + 1):
        out = out * q_int(a).substitute_power(k)
    for k in range(1, a - i):
        out = out * q_int(a).substitute_power(k)
    return out


def box_identity_rhs(a: int, b: int, i: int) -> LaurentPoly:
    shift = b * i - (a - 1) * i * (i + 1) // 2
    return exact_div(_box_product(a, i), q_int(a)).shift(shift)


def verify_box_identities(stat: JohnsonStatistic, b: int, i: int) -> bool:
    """Root points of the box at vertex ``i`` of ``b Δ`` against the product formula.

    For ``i >= 1`` the sum is also recomputed from a translate with a
    positive parameter, using ``J(x - k a omega_i) = J(x) - k a i``.
    """
    a = stat.a
    _require_coprime(a, b)
    if not 0 <= i <= a - 1:
        raise ValueError("i must lie in 0..a-1")
    got = rotated_box_sum(stat, b, i)
    if got != box_identity_rhs(a, b, i):
        return False
    if i >= 1:
        k = max(0, -(b // a) + 1)
        shifted = rotated_box_sum(stat, b + k * a, i).shift(-k * a * i)
        if shifted != got:
            return False
    return True


def lemma_pochhammer_identity(a: int, i: int, m: int) -> bool:
    """Vertex-cone Pochhammer identity, cleared of the ``(q;q)_{a-1}`` denominator."""
    if a < 2 or not 0 <= i <= a - 1:
        raise ValueError("need a >= 2 and 0 <= i <= a-1")
    others = [j for j in range(a) if j != i]
    lhs = ZERO
    for size in range(len(others) + 1):
        sign = -1 if size % 2 else 1
        poch = q_pochhammer(m - a * size, a - 1)
        weight: dict[int, int] = {}
        for subset in combinations(others, size):
            e = a * sum(subset)
            weight[e] = weight.get(e, 0) + 1
        lhs = lhs + LaurentPoly(weight) * poch * sign
    shift = m * i - (a - 1) * i * (i + 1) // 2 - i
    rhs = (_box_product(a, i) * q_pochhammer(1, a - 1)).shift(shift)
    return lhs == rhs


def brion_terms(stat: JohnsonStatistic, b: int) -> list[tuple[LaurentPoly, list[int]]]:
    """``(N_i, [d ...])`` with vertex-cone denominator ``prod_d (1 - q^(a d))``."""
    a = stat.a
    return [
        (rotated_box_sum(stat, b, i), [j - i for j in range(a) if j != i]) for i in range(a)
    ]


def verify_brion(stat: JohnsonStatistic, b: int) -> bool:
    """``sum_i N_i / D_i == Cat(a,b)_q`` after multiplying through by ``D``."""
    a = stat.a
    _require_coprime(a, b)
    factors = {d: ONE - LaurentPoly.monomial(a * d) for d in range(-(a - 1), a) if d}
    total_d = ONE
    for f in factors.values():
        total_d = total_d * f
    lhs = ZERO
    for numerator, ds in brion_terms(stat, b):
        cofactor = ONE
        for d, f in factors.items():
            if d not in ds:
                cofactor = cofactor * f
        lhs = lhs + numerator * cofactor
    return lhs == cat_q(a, b) * total_d
