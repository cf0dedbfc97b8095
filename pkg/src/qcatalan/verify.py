"""Sweeps over conjectures and identities, reported as :class:`Verdict` records.

Sweep functions accept a ``map_fn`` with the signature of :func:`map`.  The
library runs serially by default; the command line passes a process-pool
``map`` to fan shards out.  Results are merged in parameter order, so the
outcome does not depend on ``map_fn``.
"""

from __future__ import annotations

import json
import math
import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache, partial

from .catalan import cat_q, cat_q_k, coprime_residues, germ_table
from .errors import MultisetMismatch, NotCoprime, Stuck
from .johnson import (
    GreedyStatistic,
    JohnsonStatistic,
    a4_ribbon_statistic,
    eval_j,
    greedy_standard_partition,
    partition_to_johnson,
    slice_points,
    unique_statistic_a3,
)
from .lattice import Point, Simplex, is_root_point, iter_points
from .qpoly import LaurentPoly

__all__ = [
    "Verdict",
    "VERIFIED",
    "COUNTEREXAMPLE",
    "TIMEOUT",
    "check_monotone",
    "check_monotone_nonco",
    "check_germ_positivity",
    "build_johnson_via_greedy",
    "default_statistic",
    "rank_level_duality",
    "EXPLICIT_GREEDY_MAX_A",
]

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
TIMEOUT = "timeout"

# Above this rank the greedy statistic is evaluated lazily instead of tabulated.
EXPLICIT_GREEDY_MAX_A = 7

MapFn = Callable


@dataclass
class Verdict:
    claim: str
    params: dict
    status: str
    certificate: dict | None = None
    wall_time: float = 0.0
    checked: int = 0
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status not in (VERIFIED, COUNTEREXAMPLE, TIMEOUT):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == COUNTEREXAMPLE and self.certificate is None:
            raise ValueError("a counterexample verdict needs a certificate")

    @property
    def ok(self) -> bool:
        return self.status == VERIFIED

    def to_dict(self, include_time: bool = True) -> dict:
        out = {
            "claim": self.claim,
            "params": self.params,
            "status": self.status,
            "checked": self.checked,
            "certificate": self.certificate,
        }
        if self.notes:
            out["notes"] = self.notes
        if include_time:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, include_time: bool = True) -> str:
        return json.dumps(self.to_dict(include_time), sort_keys=True)

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{self.claim} [{params}]: {self.status} ({self.checked} checks)"
        if self.certificate:
            line += " " + json.dumps(self.certificate, sort_keys=True)
        return line


def _first_failure(results):
    for r in results:
        if r is not None:
            return r
    return None


# monotonicity ---------------------------------------------------------------------


def _monotone_pair(a: int, pair: tuple[int, int]) -> dict | None:
    b, c = pair
    diff = cat_q(a, c) - cat_q(a, b)
    if diff.is_nonneg():
        return None
    return {"a": a, "b": b, "c": c, "difference": str(diff)}


def _coprime_upto(a: int, c_max: int) -> list[int]:
    return [c for c in range(1, c_max + 1) if math.gcd(a, c) == 1]


def check_monotone(a: int, c_max: int, map_fn: MapFn = map, spot_checks: int = 20, seed: int = 0) -> Verdict:
    """``Cat(a,c)_q - Cat(a,b)_q`` in N[q] for coprime ``b < c <= c_max``.

    Consecutive pairs suffice because nonnegative differences telescope; a
    seeded sample of non-consecutive pairs is checked as well.
    """
    if a < 2:
        raise ValueError("check_monotone requires a >= 2")
    t0 = time.perf_counter()
    values = _coprime_upto(a, c_max)
    pairs = list(zip(values, values[1:]))
    rng = random.Random(seed)
    extra = []
    if len(values) > 2:
        for _ in range(spot_checks):
            b, c = sorted(rng.sample(values, 2))
            extra.append((b, c))
    results = list(map_fn(partial(_monotone_pair, a), pairs + extra))
    failure = _first_failure(results)
    return Verdict(
        "monotone",
        {"a": a, "c_max": c_max},
        COUNTEREXAMPLE if failure else VERIFIED,
        failure,
        time.perf_counter() - t0,
        len(results),
    )


@lru_cache(maxsize=None)
def _cat_q_k_cached(a: int, b: int, k: int) -> LaurentPoly:
    return cat_q_k(a, b, k)


def _nonco_pair(a: int, k: int, pair: tuple[int, int]) -> dict | None:
    b, c = pair
    diff = _cat_q_k_cached(a, c, k) - _cat_q_k_cached(a, b, k)
    if diff.is_nonneg():
        return None
    return {"a": a, "k": k, "b": b, "c": c, "difference": str(diff)}


def check_monotone_nonco(
    a: int, g: int, k: int, c_max: int, map_fn: MapFn = map, spot_checks: int = 10, seed: int = 0
) -> Verdict:
    """``Cat(a,c;k)_q - Cat(a,b;k)_q`` in N[q] for ``b < c <= c_max`` with ``gcd = g``."""
    if g < 1 or a % g:
        raise ValueError(f"g={g} must divide a={a}")
    t0 = time.perf_counter()
    values = [c for c in range(1, c_max + 1) if math.gcd(a, c) == g]
    pairs = list(zip(values, values[1:]))
    rng = random.Random(seed)
    if len(values) > 2:
        for _ in range(spot_checks):
            pairs.append(tuple(sorted(rng.sample(values, 2))))
    results = list(map_fn(partial(_nonco_pair, a, k), pairs))
    failure = _first_failure(results)
    return Verdict(
        "monotone_nonco",
        {"a": a, "g": g, "k": k, "c_max": c_max},
        COUNTEREXAMPLE if failure else VERIFIED,
        failure,
        time.perf_counter() - t0,
        len(results),
    )


# germs and statistics -------------------------------------------------------------


def check_germ_positivity(a: int) -> Verdict:
    if a < 2:
        raise ValueError("check_germ_positivity requires a >= 2")
    t0 = time.perf_counter()
    table = germ_table(a)
    failure = None
    for c, g in table:
        if not g.is_nonneg():
            failure = {"a": a, "c": c, "germ": str(g)}
            break
    return Verdict(
        "germ_positivity",
        {"a": a},
        COUNTEREXAMPLE if failure else VERIFIED,
        failure,
        time.perf_counter() - t0,
        len(table),
    )


def _greedy_slice(a: int, c: int):
    return greedy_standard_partition(slice_points(a, c), a)


def build_johnson_via_greedy(a: int, map_fn: MapFn = map) -> JohnsonStatistic:
    """Concatenate greedy standard partitions of every slice into a statistic.

    Germ positivity is checked first.  Up to ``EXPLICIT_GREEDY_MAX_A`` the
    greedy pass runs on the enumerated slices; beyond that the same partition
    is evaluated lazily by :class:`GreedyStatistic`.
    """
    verdict = check_germ_positivity(a)
    if not verdict.ok:
        raise Stuck(-1, [verdict.certificate])
    if a <= EXPLICIT_GREEDY_MAX_A:
        parts = list(map_fn(partial(_greedy_slice, a), coprime_residues(a)))
        stat = partition_to_johnson(parts, a)
        stat.check_shape()
        return stat
    return GreedyStatistic(a)


def default_statistic(a: int) -> JohnsonStatistic:
    """The statistic used for rank ``a`` by commands that need one."""
    if a == 1:
        return JohnsonStatistic(1, {(): 0})
    if a == 3:
        return unique_statistic_a3()
    if a == 4:
        return a4_ribbon_statistic()
    return build_johnson_via_greedy(a)


def _root_points(a: int, b: int) -> list[Point]:
    return [p for p in iter_points(Simplex(a, b)) if is_root_point(p, a)]


def rank_level_duality(
    a: int,
    b: int,
    stat_a: JohnsonStatistic | None = None,
    stat_b: JohnsonStatistic | None = None,
) -> list[tuple[Point, Point, int]]:
    """Pair root points of rank ``a`` in ``bΔ`` with rank ``b`` in ``aΔ`` by equal J."""
    if math.gcd(a, b) != 1:
        raise NotCoprime(a, b)
    stat_a = stat_a or default_statistic(a)
    stat_b = stat_b or default_statistic(b)
    left = sorted((eval_j(stat_a, p), p) for p in _root_points(a, b))
    right = sorted((eval_j(stat_b, p), p) for p in _root_points(b, a))
    lj = [j for j, _ in left]
    rj = [j for j, _ in right]
    if lj != rj:
        raise MultisetMismatch(lj, rj)
    return [(p, r, j) for (j, p), (_, r) in zip(left, right)]
