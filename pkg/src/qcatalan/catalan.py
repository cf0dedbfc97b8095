"""Rational (q-)Catalan numbers, q-Catalan germs and the non-coprime family."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotCoprime
from .lattice import BoxSlice, height_histogram, iter_points
from .qpoly import (
    ONE,
    ZERO,
    LaurentPoly,
    _dense_div_q_int,
    divide_by_q_int,
    exact_div,
    q_binomial,
    q_binomial_column,
    q_int,
)

__all__ = [
    "cat_count",
    "cat_q",
    "catq_ext",
    "prev_coprime",
    "coprime_residues",
    "germ",
    "germ_brute",
    "GermTable",
    "germ_table",
    "germ_sum_check",
    "germ_reconstruction",
    "box_slice_poly",
    "mobius",
    "divisors",
    "ramanujan_sum",
    "q_ramanujan_sum",
    "cat_count_k",
    "cat_q_k",
]


def _require_coprime(a: int, b: int) -> None:
    if math.gcd(a, b) != 1:
        raise NotCoprime(a, b)


def cat_count(a: int, b: int) -> int:
    _require_coprime(a, b)
    if b < 1:
        raise ValueError("cat_count requires b >= 1")
    n, r = divmod(math.comb(a - 1 + b, a - 1), a)
    assert r == 0
    return n


def catq_ext(a: int, m: int) -> LaurentPoly:
    """``[a-1+m choose a-1]_q / [a]_q`` for any integer ``m``.

    Zero when ``m < 0`` (the binomial vanishes).  Raises :class:`NotDivisible`
    when the quotient is not a polynomial, which can only happen when
    ``gcd(a, m) != 1``.
    """
    if m < 0:
        return ZERO
    return divide_by_q_int(q_binomial(a - 1 + m, a - 1), a)


@lru_cache(maxsize=4096)
def cat_q(a: int, b: int) -> LaurentPoly:
    _require_coprime(a, b)
    if b < 1:
        raise ValueError("cat_q requires b >= 1")
    return catq_ext(a, b)


def prev_coprime(a: int, c: int) -> int:
    """Largest ``c' < c`` with ``gcd(a, c') == 1``."""
    _require_coprime(a, c)
    c -= 1
    while math.gcd(a, c) != 1:
        c -= 1
    return c


def coprime_residues(a: int) -> list[int]:
    """All ``1 <= c <= (a-1)**2`` with ``gcd(a, c) == 1``."""
    return [c for c in range(1, (a - 1) ** 2 + 1) if math.gcd(a, c) == 1]


@lru_cache(maxsize=64)
def _vertex_weights(a: int) -> tuple[LaurentPoly, ...]:
    """``e_s(q^a, q^{2a}, ..., q^{(a-1)a})`` for ``s = 0..a-1``.

    This is the subset-size collapse of ``sum_I q^(a * sum(I))`` and equals
    ``q^(a s(s+1)/2) [a-1 choose s]_{q^a}``.
    """
    return tuple(
        q_binomial(a - 1, s).substitute_power(a).shift(a * s * (s + 1) // 2) for s in range(a)
    )


def germ(a: int, c: int) -> LaurentPoly:
    """q-Catalan germ by inclusion-exclusion over the box vertices.

    ``sum_s (-1)^s e_s * (catq_ext(a, c - a s) - catq_ext(a, c' - a s))``.
    """
    _require_coprime(a, c)
    if c < 1 or c > (a - 1) ** 2:
        return ZERO
    cp = prev_coprime(a, c)
    out = ZERO
    for s, weight in enumerate(_vertex_weights(a)):
        diff = catq_ext(a, c - a * s) - catq_ext(a, cp - a * s)
        if diff:
            term = weight * diff
            out = out - term if s % 2 else out + term
    return out


def box_slice_poly(a: int, m: int, n: int, budget: int | None = None) -> LaurentPoly:
    """``(Box[m, n])_q`` by direct enumeration."""
    return LaurentPoly(height_histogram(iter_points(BoxSlice(a, m, n), budget)))


def germ_brute(a: int, c: int, budget: int | None = 10**8) -> LaurentPoly:
    """Germ from its definition: enumerate the slice and divide by ``[a]_q``."""
    _require_coprime(a, c)
    if c < 1 or c > (a - 1) ** 2:
        return ZERO
    cp = prev_coprime(a, c)
    return exact_div(box_slice_poly(a, cp + 1, c, budget), q_int(a))


@dataclass(frozen=True)
class GermTable:
    a: int
    entries: tuple[tuple[int, LaurentPoly], ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def as_dict(self) -> dict[int, LaurentPoly]:
        return dict(self.entries)

    def total(self) -> LaurentPoly:
        out = ZERO
        for _, g in self.entries:
            out = out + g
        return out

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        if header:
            writer.writerow(["a", "c", "germ"])
        for c, g in self.entries:
            writer.writerow([self.a, c, str(g)])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"a": self.a, "germs": [{"c": c, "germ": str(g)} for c, g in self.entries]}
        )

    @classmethod
    def from_json(cls, text: str) -> GermTable:
        obj = json.loads(text)
        return cls(
            obj["a"],
            tuple((e["c"], LaurentPoly.parse(e["germ"])) for e in obj["germs"]),
        )


def _box_prefix_dense(a: int) -> list[list[int]]:
    """Dense ``(Box[0, m])_q`` for ``m = 0..(a-1)^2``.

    Starts from ``[a-1+m choose a-1]_q`` (the simplex of size m) and removes
    the vertex cones one at a time: ``F_i[m] = F_{i-1}[m] - q^(i a) F_{i-1}[m-a]``.
    Expanding the recursion gives exactly the inclusion-exclusion over subsets
    of vertices with weight ``q^(a * sum(I))``.
    """
    k, top = a - 1, (a - 1) ** 2
    col = q_binomial_column(k, k + top)
    table = [col[k + m] for m in range(top + 1)]
    for i in range(1, a):
        shift = i * a
        nxt = list(table)
        for m in range(a, top + 1):
            low = table[m - a]
            if not low:
                continue
            cur = table[m]
            out = list(cur)
            need = len(low) + shift
            if need > len(out):
                out.extend([0] * (need - len(out)))
            for j, v in enumerate(low, shift):
                out[j] -= v
            while out and out[-1] == 0:
                out.pop()
            nxt[m] = out
        table = nxt
    return table


@lru_cache(maxsize=32)
def germ_table(a: int) -> GermTable:
    """All germs for ``a`` via the vertex-cone recursion on box prefixes."""
    if a < 2:
        raise ValueError("germ_table requires a >= 2")
    prefix = _box_prefix_dense(a)
    entries = []
    for c in coprime_residues(a):
        cp = prev_coprime(a, c)
        upper = prefix[c]
        lower = prefix[cp] if cp >= 0 else []
        num = list(upper) + [0] * max(0, len(lower) - len(upper))
        for j, v in enumerate(lower):
            num[j] -= v
        while num and num[-1] == 0:
            num.pop()
        quot = _dense_div_q_int(num, a)
        if quot is None:
            # long division produces the certificate
            exact_div(LaurentPoly.from_dense(num), q_int(a))
            raise AssertionError("dense and long division disagree")
        entries.append((c, LaurentPoly.from_dense(quot)))
    return GermTable(a, tuple(entries))


def germ_sum_check(a: int) -> bool:
    """Germs add up to ``[a]_{q^2} [a]_{q^3} ... [a]_{q^{a-1}}``."""
    target = ONE
    for k in range(2, a):
        target = target * q_int(a).substitute_power(k)
    return germ_table(a).total() == target


def germ_reconstruction(a: int, b: int) -> LaurentPoly:
    """``sum_c germ(a,c) [a-1+floor((b-c)/a) choose a-1]_{q^a}``; equals ``cat_q(a, b)``."""
    _require_coprime(a, b)
    out = ZERO
    for c, g in germ_table(a):
        n = a - 1 + (b - c) // a
        if n >= a - 1:
            out = out + g * q_binomial(n, a - 1).substitute_power(a)
    return out


# non-coprime family ---------------------------------------------------------


def divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    out = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def ramanujan_sum(d: int, l: int) -> int:
    """``c_d(l) = sum_{s | gcd(d, l)} mu(d/s) s``."""
    if d < 1:
        raise ValueError("ramanujan_sum requires d >= 1")
    return sum(mobius(d // s) * s for s in divisors(math.gcd(d, l)))


def q_ramanujan_sum(d: int, l: int) -> LaurentPoly:
    if d < 1:
        raise ValueError("q_ramanujan_sum requires d >= 1")
    out = ZERO
    for s in divisors(math.gcd(d, l)):
        mu = mobius(d // s)
        if mu:
            out = out + q_int(s) * mu
    return out


def cat_count_k(a: int, b: int, k: int) -> int:
    """Number of points of ``L ∩ bΔ`` (rank ``a``) with tilted height ``≡ k (mod a)``."""
    if a < 1 or b < 1:
        raise ValueError("cat_count_k requires a, b >= 1")
    total = sum(
        ramanujan_sum(d, k) * math.comb((a + b) // d, a // d) for d in divisors(math.gcd(a, b))
    )
    n, r = divmod(total, a + b)
    assert r == 0, (a, b, k)
    return n


def cat_q_k(a: int, b: int, k: int) -> LaurentPoly:
    if a < 1 or b < 1:
        raise ValueError("cat_q_k requires a, b >= 1")
    num = ZERO
    for d in divisors(math.gcd(a, b)):
        num = num + q_ramanujan_sum(d, k) * q_binomial((a + b) // d, a // d).substitute_power(d)
    return divide_by_q_int(num, a + b)
