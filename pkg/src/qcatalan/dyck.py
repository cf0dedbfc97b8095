"""Rational Dyck paths: area, sweep map, major index and the q,t-Catalan sum.

A path in the ``b x a`` rectangle is a word over ``u`` (up) and ``r`` (right)
with ``a`` ups and ``b`` rights that never passes below the line from
``(0, 0)`` to ``(b, a)``, i.e. ``a*x <= b*y`` at every lattice point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DimensionMismatch, NotCoprime, ResourceLimit
from .qpoly import BiPoly, LaurentPoly

__all__ = [
    "DyckPath",
    "DEFAULT_PATH_BUDGET",
    "enumerate_dyck",
    "area",
    "sweep",
    "maj",
    "maj_generating_function",
    "qt_catalan",
]

DEFAULT_PATH_BUDGET = 10**6


@dataclass(frozen=True, order=True)
class DyckPath:
    a: int
    b: int
    word: str

    def __post_init__(self):
        w = self.word.lower()
        object.__setattr__(self, "word", w)
        if set(w) - {"u", "r"}:
            raise ValueError(f"path words use only 'u' and 'r': {self.word!r}")
        if w.count("u") != self.a or w.count("r") != self.b:
            raise ValueError(f"{w!r} does not have {self.a} ups and {self.b} rights")
        x = y = 0
        for step in w:
            if step == "u":
                y += 1
            else:
                x += 1
                if self.a * x > self.b * y:
                    raise ValueError(f"{w!r} passes below the diagonal of the {self.b}x{self.a} rectangle")

    def __str__(self):
        return self.word

    def points(self) -> list[tuple[int, int]]:
        """Lattice points ``(x, y)`` visited, starting at the origin."""
        pts = [(0, 0)]
        x = y = 0
        for step in self.word:
            if step == "u":
                y += 1
            else:
                x += 1
            pts.append((x, y))
        return pts


def enumerate_dyck(a: int, b: int, budget: int = DEFAULT_PATH_BUDGET) -> list[DyckPath]:
    """All ``(a, b)``-Dyck paths, in lexicographic order of their words."""
    if a < 1 or b < 1:
        raise ValueError("enumerate_dyck requires a, b >= 1")
    words: list[str] = []
    buf: list[str] = []

    def rec(x: int, y: int) -> None:
        if x == b and y == a:
            if len(words) >= budget:
                raise ResourceLimit(len(words) + 1, budget, "paths")
            words.append("".join(buf))
            return
        # 'r' sorts before 'u'
        if x < b and a * (x + 1) <= b * y:
            buf.append("r")
            rec(x + 1, y)
            buf.pop()
        if y < a:
            buf.append("u")
            rec(x, y + 1)
            buf.pop()

    rec(0, 0)
    return [DyckPath(a, b, w) for w in words]


def area(path: DyckPath) -> int:
    """Full unit squares between the path and the diagonal."""
    a, b = path.a, path.b
    total = 0
    y = 0
    col = 0
    for step in path.word:
        if step == "u":
            y += 1
        else:
            # column [col, col+1]: squares with bottom >= diagonal at x=col+1 and top <= y
            floor_row = -(-a * (col + 1) // b)
            if y > floor_row:
                total += y - floor_row
            col += 1
    return total


def sweep(path: DyckPath) -> DyckPath:
    """Reorder steps by decreasing label of the point each step arrives at.

    Labels start at 0 and change by ``+b`` per up step and ``-a`` per right
    step; they are distinct when ``gcd(a, b) == 1``.
    """
    a, b = path.a, path.b
    if math.gcd(a, b) != 1:
        raise NotCoprime(a, b)
    label = 0
    tagged = []
    for step in path.word:
        label += b if step == "u" else -a
        tagged.append((label, step))
    tagged.sort(reverse=True)
    return DyckPath(a, b, "".join(step for _, step in tagged))


def maj(path: DyckPath) -> int:
    """Sum of ``x + y`` over right-then-up corners of a square path."""
    if path.a != path.b:
        raise DimensionMismatch(f"maj is defined for square paths, got {path.a}x{path.b}")
    total = 0
    x = y = 0
    w = path.word
    for i, step in enumerate(w):
        if step == "u":
            y += 1
        else:
            x += 1
            if i + 1 < len(w) and w[i + 1] == "u":
                total += x + y
    return total


def maj_generating_function(n: int, budget: int = DEFAULT_PATH_BUDGET) -> LaurentPoly:
    return LaurentPoly.from_exponents(maj(p) for p in enumerate_dyck(n, n, budget))


def qt_catalan(a: int, b: int, budget: int = DEFAULT_PATH_BUDGET) -> BiPoly:
    """``sum_P q^area(P) t^area(sweep(P))`` over all ``(a, b)``-Dyck paths."""
    if math.gcd(a, b) != 1:
        raise NotCoprime(a, b)
    return BiPoly.from_exponent_pairs(
        (area(p), area(sweep(p))) for p in enumerate_dyck(a, b, budget)
    )
