"""Exact Laurent polynomials in q over Python integers, plus q-analogues.

Every generating function in the package is a :class:`LaurentPoly`.  The
representation is a sparse ``{exponent: coefficient}`` table with no stored
zeros.  Heavy loops (q-binomial columns, division by q-integers) run on dense
coefficient lists internally and convert at the boundary.
"""

from __future__ import annotations

import re
import threading
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache

from .errors import NotDivisible

_TERM = re.compile(r"([+-])(\d+)?(?:\*?(q(?:\^(-?\d+))?))?")

__all__ = [
    "LaurentPoly",
    "BiPoly",
    "q",
    "ZERO",
    "ONE",
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_binomial_column",
    "q_binomial_factorial",
    "q_pochhammer",
    "substitute_power",
    "exact_div",
    "divide_by_q_int",
    "is_nonneg",
    "eval_at_one",
    "coeff",
]


class LaurentPoly:
    """Finite sum of ``c * q**e`` with integer ``c`` and (possibly negative) ``e``.

    Instances are immutable and hashable.  Construct from a mapping, from an
    ``int`` (a constant), or with :meth:`monomial` / :meth:`from_dense`.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            clean: dict[int, int] = {}
        elif isinstance(terms, int):
            clean = {0: terms} if terms else {}
        else:
            clean = {int(e): int(c) for e, c in terms.items() if c}
        self._terms = clean
        self._hash: int | None = None

    # construction -------------------------------------------------------

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        out = cls()
        out._terms = {low + i: c for i, c in enumerate(coeffs) if c}
        return out

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> LaurentPoly:
        """Sum of ``q**e`` over an iterable of exponents (with multiplicity)."""
        terms: dict[int, int] = {}
        for e in exponents:
            terms[e] = terms.get(e, 0) + 1
        out = cls()
        out._terms = terms
        return out

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str()``: accepts ``"1 + q^2 - 3*q^-1"`` style input."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("cannot parse an empty polynomial")
        if s == "0":
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[int, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos or not (m.group(2) or m.group(3)):
                break
            pos = m.end()
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3) is None:
                e = 0
            else:
                e = int(m.group(4)) if m.group(4) is not None else 1
            terms[e] = terms.get(e, 0) + (c if m.group(1) == "+" else -c)
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls(terms)

    # accessors ----------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def lowest_exponent(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no lowest exponent")
        return min(self._terms)

    def is_nonneg(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def __call__(self, x):
        return sum(c * x**e for e, c in self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def to_dense(self) -> tuple[int, list[int]]:
        """Return ``(low, coeffs)`` with ``coeffs[i]`` the coefficient of ``q**(low+i)``."""
        if not self._terms:
            return 0, []
        lo, hi = min(self._terms), max(self._terms)
        out = [0] * (hi - lo + 1)
        for e, c in self._terms.items():
            out[e - lo] = c
        return lo, out

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        out = LaurentPoly()
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly()
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            out = LaurentPoly()
            out._terms = {e: c * other for e, c in self._terms.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((eb, cb),) = b.items()
            out = LaurentPoly()
            out._terms = {e + eb: c * cb for e, c in a.items()}
            return out
        terms: dict[int, int] = {}
        get = terms.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                k = ea + eb
                terms[k] = get(k, 0) + ca * cb
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        out = LaurentPoly()
        out._terms = {e + k: c for e, c in self._terms.items()}
        return out

    def substitute_power(self, d: int) -> LaurentPoly:
        """Replace ``q`` by ``q**d``."""
        if d < 1:
            raise ValueError("d must be >= 1")
        out = LaurentPoly()
        out._terms = {e * d: c for e, c in self._terms.items()}
        return out

    # comparison / display -----------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


q = LaurentPoly.monomial(1)
ZERO = LaurentPoly()
ONE = LaurentPoly(1)


class BiPoly:
    """Polynomial in two variables ``q, t``: ``{(i, j): coefficient}``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = {(int(i), int(j)): int(c) for (i, j), c in (terms or {}).items() if c}

    @classmethod
    def from_exponent_pairs(cls, pairs: Iterable[tuple[int, int]]) -> BiPoly:
        terms: dict[tuple[int, int], int] = {}
        for p in pairs:
            terms[p] = terms.get(p, 0) + 1
        return cls(terms)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def __add__(self, other: BiPoly) -> BiPoly:
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return BiPoly(terms)

    def __mul__(self, other: BiPoly) -> BiPoly:
        terms: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                terms[k] = terms.get(k, 0) + c1 * c2
        return BiPoly(terms)

    def swap_vars(self) -> BiPoly:
        return BiPoly({(j, i): c for (i, j), c in self._terms.items()})

    def specialize_t_to_inverse_q(self) -> LaurentPoly:
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            out[i - j] = out.get(i - j, 0) + c
        return LaurentPoly(out)

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("q", i), ("t", j)) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            else:
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "" if not parts and c > 0 else ("-" if not parts else ("+ " if c > 0 else "- "))
            parts.append(sign + body)
        return " ".join(parts)

    __repr__ = __str__


# dense helpers ------------------------------------------------------------


def _dense_add_into(acc: list[int], src: list[int], offset: int = 0) -> None:
    """``acc[offset + i] += src[i]`` in place; ``acc`` must be long enough."""
    for i, v in enumerate(src, offset):
        acc[i] += v


def _dense_div_q_int(coeffs: list[int], n: int) -> list[int] | None:
    """Divide a dense polynomial (low exponent 0) by ``[n]_q``; None if inexact.

    Uses ``[n]_q = (1 - q**n)/(1 - q)``: multiply by ``1 - q`` then divide by
    ``1 - q**n`` from the bottom.
    """
    if n == 1:
        return list(coeffs)
    if not coeffs:
        return []
    g = [coeffs[0]]
    g.extend(coeffs[i] - coeffs[i - 1] for i in range(1, len(coeffs)))
    g.append(-coeffs[-1])
    # h * (1 - q^n) = g
    h = g
    for i in range(n, len(h)):
        h[i] += h[i - n]
    tail = h[len(h) - n :]
    if any(tail):
        return None
    del h[len(h) - n :]
    while h and h[-1] == 0:
        h.pop()
    return h


# q-combinatorics ------------------------------------------------------------


@lru_cache(maxsize=None)
def q_int(n: int) -> LaurentPoly:
    """``[n]_q = 1 + q + ... + q**(n-1)``; zero for ``n == 0``."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return LaurentPoly.from_dense([1] * n)


def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    out = ONE
    for i in range(1, n + 1):
        out = out * q_int(i)
    return out


class _PascalColumns:
    """Columns ``n -> [n choose k]_q`` built row by row with the Pascal recurrence.

    Only the current Pascal row (entries ``0..k``) is held while building; each
    requested column is kept as dense lists.  A lock makes concurrent callers
    see the same values.
    """

    def __init__(self):
        self._cols: dict[int, list[list[int]]] = {}
        self._lock = threading.Lock()

    def column(self, k: int, n_max: int) -> list[list[int]]:
        with self._lock:
            col = self._cols.get(k)
            if col is not None and len(col) > n_max:
                return col
            col = self._build(k, n_max)
            self._cols[k] = col
            return col

    @staticmethod
    def _build(k: int, n_max: int) -> list[list[int]]:
        # row[j] = [n choose j]_q as a dense list; [] is zero
        row: list[list[int]] = [[1]] + [[] for _ in range(k)]
        col = [row[k] if k == 0 else []]
        for n in range(1, n_max + 1):
            new = [[1]]
            for j in range(1, min(k, n) + 1):
                hi, lo = row[j], row[j - 1]
                out = [0] * j
                out.extend(hi)
                length = j * (n - j) + 1
                if len(out) < length:
                    out.extend([0] * (length - len(out)))
                for i, v in enumerate(lo):
                    out[i] += v
                new.append(out)
            new.extend([] for _ in range(k + 1 - len(new)))
            row = new
            col.append(row[k])
        return col

    def clear(self) -> None:
        with self._lock:
            self._cols.clear()


_PASCAL = _PascalColumns()


def q_binomial_column(k: int, n_max: int) -> list[list[int]]:
    """Dense coefficient lists of ``[n choose k]_q`` for ``n = 0..n_max``.

    Entry ``n`` is ``[]`` (zero) when ``n < k``.  The returned lists are shared;
    callers must not mutate them.
    """
    if k < 0:
        return [[] for _ in range(n_max + 1)]
    return _PASCAL.column(k, max(n_max, 0))


def q_binomial(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial ``[n choose k]_q``; zero unless ``0 <= k <= n``."""
    if k < 0 or k > n:
        return ZERO
    k = min(k, n - k)
    return LaurentPoly.from_dense(q_binomial_column(k, n)[n])


def q_binomial_factorial(n: int, k: int) -> LaurentPoly:
    """Same value as :func:`q_binomial`, by exact division of q-factorials."""
    if k < 0 or k > n:
        return ZERO
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k))


def q_pochhammer(m: int, n: int) -> LaurentPoly:
    """``(q**m; q)_n = prod_{j<n} (1 - q**(m+j))``."""
    if n < 0:
        raise ValueError("q_pochhammer requires n >= 0")
    out = ONE
    for j in range(n):
        out = out * (ONE - LaurentPoly.monomial(m + j))
    return out


def substitute_power(f: LaurentPoly, d: int) -> LaurentPoly:
    return f.substitute_power(d)


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return ``h`` with ``f == g * h`` exactly or raise :class:`NotDivisible`.

    Minimal exponents are factored out first, then ordinary long division runs
    from the top degree over the (sparse) terms of ``g``.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return ZERO
    g_lo = g.lowest_exponent
    g_terms = sorted(((e - g_lo, c) for e, c in g._terms.items()), reverse=True)
    g_deg, lead = g_terms[0]
    f_lo, rem = f.to_dense()
    quot = [0] * max(len(rem) - g_deg, 0)
    for i in range(len(rem) - 1, g_deg - 1, -1):
        c = rem[i]
        if not c:
            continue
        qc, r = divmod(c, lead)
        if r:
            raise NotDivisible(f, g, LaurentPoly.from_dense(rem, f_lo))
        base = i - g_deg
        quot[base] = qc
        for e, ge in g_terms:
            rem[base + e] -= qc * ge
    if any(rem):
        raise NotDivisible(f, g, LaurentPoly.from_dense(rem, f_lo))
    return LaurentPoly.from_dense(quot, f_lo - g_lo)


def divide_by_q_int(f: LaurentPoly, n: int) -> LaurentPoly:
    """``f / [n]_q`` via the ``(1 - q)/(1 - q**n)`` form; raises if inexact."""
    if n < 1:
        raise ZeroDivisionError("[0]_q is zero")
    if f.is_zero():
        return ZERO
    lo, dense = f.to_dense()
    h = _dense_div_q_int(dense, n)
    if h is None:
        # fall back to long division for the certificate
        return exact_div(f, q_int(n))
    return LaurentPoly.from_dense(h, lo)


def is_nonneg(f: LaurentPoly) -> bool:
    return f.is_nonneg()


def eval_at_one(f: LaurentPoly) -> int:
    return f.eval_at_one()


def coeff(f: LaurentPoly, e: int) -> int:
    return f.coeff(e)
