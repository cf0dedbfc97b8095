"""Command-line entry point: ``qcatalan <command> ...``.

Exit codes: 0 success, 1 counterexample, 2 usage or input error, 3 budget or
timeout.  Output is deterministic for identical arguments; timings are never
printed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from functools import partial
from pathlib import Path

from . import golden
from .catalan import (
    GermTable,
    box_slice_poly,
    cat_q,
    coprime_residues,
    germ_table,
)
from .dyck import DyckPath, area, enumerate_dyck, maj_generating_function, qt_catalan, sweep
from .errors import (
    DimensionMismatch,
    MalformedPartition,
    MultisetMismatch,
    NotCoprime,
    NotCoprimeToCF,
    NotDivisible,
    NotRootPoint,
    ResourceLimit,
    SearchTimeout,
    Stuck,
)
from .johnson import (
    JohnsonStatistic,
    brion_terms,
    count_ribbon_partitions,
    lemma_pochhammer_identity,
    ribbon_partition_search,
    slice_points,
    verify_brion,
    verify_catalan_property,
)
from .lattice import DEFAULT_POINT_BUDGET
from .qpoly import LaurentPoly, exact_div, q_int
from .verify import (
    COUNTEREXAMPLE,
    VERIFIED,
    Verdict,
    build_johnson_via_greedy,
    check_germ_positivity,
    check_monotone,
    check_monotone_nonco,
    default_statistic,
    rank_level_duality,
)
from .weyl import system_by_name, verify_weyl

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

LONG_A_MAX, LONG_C_MAX = 20, 80


@dataclass(frozen=True)
class RunConfig:
    jobs: int = 1
    node_budget: int = 10**6
    point_budget: int = DEFAULT_POINT_BUDGET
    fmt: str = "text"
    cache_dir: Path | None = None

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("--jobs must be >= 1")
        if self.node_budget < 1 or self.point_budget < 1:
            raise ValueError("budgets must be >= 1")


class UsageError(Exception):
    pass


# output helpers -----------------------------------------------------------------


class Output:
    def __init__(self, cfg: RunConfig, stream=None):
        self.cfg = cfg
        self.stream = stream or sys.stdout

    def line(self, text: str) -> None:
        print(text, file=self.stream)

    def value(self, key: str, value, **context) -> None:
        """A single result, optionally tagged with its parameters."""
        if self.cfg.fmt == "json":
            self.line(json.dumps({**context, key: _jsonable(value)}, sort_keys=True))
        elif self.cfg.fmt == "csv":
            self.rows([*context, key], [[*context.values(), _jsonable(value)]])
        else:
            self.line(str(value))

    def rows(self, header: Sequence[str], rows: Iterable[Sequence], text: Callable | None = None) -> None:
        rows = list(rows)
        if self.cfg.fmt == "json":
            for r in rows:
                self.line(json.dumps(dict(zip(header, map(_jsonable, r))), sort_keys=True))
        elif self.cfg.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
            writer.writerow(header)
            writer.writerows([[_csv_cell(x) for x in r] for r in rows])
            self.stream.write(buf.getvalue())
        else:
            for r in rows:
                self.line(text(r) if text else "  ".join(str(x) for x in r))

    def verdicts(self, verdicts: Iterable[Verdict]) -> int:
        code = EXIT_OK
        vs = list(verdicts)
        if self.cfg.fmt == "json":
            for v in vs:
                self.line(v.to_json(include_time=False))
        elif self.cfg.fmt == "csv":
            self.rows(
                ["claim", "params", "status", "checked", "certificate"],
                [
                    [v.claim, json.dumps(v.params, sort_keys=True), v.status, v.checked,
                     json.dumps(v.certificate, sort_keys=True) if v.certificate else ""]
                    for v in vs
                ],
            )
        else:
            for v in vs:
                self.line(v.summary())
                for note in v.notes:
                    self.line(f"  note: {note}")
        for v in vs:
            if v.status == COUNTEREXAMPLE:
                code = EXIT_COUNTEREXAMPLE
            elif v.status != VERIFIED and code == EXIT_OK:
                code = EXIT_BUDGET
        return code


def _jsonable(x):
    if isinstance(x, LaurentPoly):
        return str(x)
    if isinstance(x, tuple):
        return list(x)
    return x


def _csv_cell(x):
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return x
    if isinstance(x, (list, tuple)):
        return json.dumps(list(x))
    return str(x)


def _point(p: Sequence[int]) -> str:
    return "(" + ",".join(map(str, p)) + ")"


@contextmanager
def _mapper(jobs: int):
    if jobs <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield partial(pool.map, chunksize=4)


def _require_coprime(a: int, b: int) -> None:
    if math.gcd(a, b) != 1:
        raise NotCoprime(a, b)


def _positive(name: str, value: int, low: int = 1) -> None:
    if value < low:
        raise UsageError(f"{name} must be >= {low}, got {value}")


# germ cache -----------------------------------------------------------------------


def _germ_path(cache_dir: Path, a: int, c: int) -> Path:
    return cache_dir / "germs" / f"a{a}" / f"c{c}.json"


def load_germs(a: int, cache_dir: Path | None) -> GermTable:
    """Germ table for ``a``, read from and written to per-``(a, c)`` JSON files."""
    residues = coprime_residues(a)
    if cache_dir is not None:
        try:
            entries = []
            for c in residues:
                obj = json.loads(_germ_path(cache_dir, a, c).read_text())
                if obj.get("a") != a or obj.get("c") != c:
                    raise ValueError("stale cache entry")
                entries.append((c, LaurentPoly.parse(obj["germ"])))
            return GermTable(a, tuple(entries))
        except (OSError, ValueError, KeyError):
            pass
    table = germ_table(a)
    if cache_dir is not None:
        try:
            for c, g in table:
                path = _germ_path(cache_dir, a, c)
                path.parent.mkdir(parents=True, exist_ok=True)
                tmp = path.with_suffix(".tmp")
                tmp.write_text(json.dumps({"a": a, "c": c, "germ": str(g)}, sort_keys=True))
                tmp.replace(path)
        except OSError:
            pass
    return table


def _load_statistic(path: str) -> JohnsonStatistic:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        stat = JohnsonStatistic.from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError(f"{path} is not a statistic file: {e}") from None
    stat.check_shape()
    return stat


# commands -----------------------------------------------------------------------


def cmd_catq(args, cfg, out):
    _positive("A", args.a, 2)
    _require_coprime(args.a, args.b)
    out.value("cat_q", cat_q(args.a, args.b), a=args.a, b=args.b)
    return EXIT_OK


def cmd_germs(args, cfg, out):
    _positive("A", args.a, 2)
    table = load_germs(args.a, cfg.cache_dir)
    if args.csv:
        out.stream.write(table.to_csv())
        return EXIT_OK
    out.rows(["a", "c", "germ"], [[args.a, c, g] for c, g in table], text=lambda r: f"{r[1]}: {r[2]}")
    return EXIT_OK


def cmd_slice(args, cfg, out):
    _positive("A", args.a, 2)
    if args.m > args.n:
        raise UsageError("slice needs M <= N")
    poly = box_slice_poly(args.a, args.m, args.n, cfg.point_budget)
    try:
        quotient: object = exact_div(poly, q_int(args.a))
    except NotDivisible:
        quotient = "not divisible"
    ctx = {"a": args.a, "m": args.m, "n": args.n}
    if cfg.fmt == "text":
        out.line(f"generating function: {poly}")
        out.line(f"divided by [{args.a}]_q: {quotient}")
    else:
        out.rows([*ctx, "generating_function", "quotient"], [[*ctx.values(), poly, quotient]])
    return EXIT_OK


def cmd_monotone(args, cfg, out):
    _positive("A", args.a, 2)
    with _mapper(cfg.jobs) as map_fn:
        return out.verdicts([check_monotone(args.a, args.max, map_fn)])


def _nonco_params(a: int, g: int | None, k: int | None) -> list[tuple[int, int]]:
    if g is None:
        return [(g, k) for g in range(2, a + 1) if a % g == 0 for k in range(a)]
    if a % g:
        raise UsageError(f"G={g} must divide A={a}")
    ks = range(a) if k is None else [k]
    return [(g, k) for k in ks]


def cmd_monotone_nc(args, cfg, out):
    _positive("A", args.a, 2)
    params = _nonco_params(args.a, args.g, args.k)
    with _mapper(cfg.jobs) as map_fn:
        return out.verdicts(check_monotone_nonco(args.a, g, k, args.max, map_fn) for g, k in params)


def cmd_sweep(args, cfg, out):
    a_max = LONG_A_MAX if args.long else args.a_max
    c_max = LONG_C_MAX if args.long else args.c_max
    _positive("--a-max", a_max, 2)
    verdicts: list[Verdict] = []
    with _mapper(cfg.jobs) as map_fn:
        if args.what == "germs":
            verdicts = list(map_fn(check_germ_positivity, range(2, a_max + 1)))
        elif args.what == "monotone":
            verdicts = [check_monotone(a, c_max, map_fn) for a in range(2, a_max + 1)]
        else:
            for a in range(2, a_max + 1):
                verdicts.extend(
                    check_monotone_nonco(a, g, k, c_max, map_fn) for g, k in _nonco_params(a, None, None)
                )
    return out.verdicts(verdicts)


def cmd_johnson_greedy(args, cfg, out):
    _positive("A", args.a, 2)
    with _mapper(cfg.jobs) as map_fn:
        stat = build_johnson_via_greedy(args.a, map_fn)
    table = stat.table
    if args.out:
        Path(args.out).write_text(stat.to_json() + "\n")
    rows = sorted(table.items(), key=lambda kv: (kv[1], kv[0]))
    if cfg.fmt == "text":
        if args.out:
            out.line(f"wrote {len(table)} representatives to {args.out}")
        else:
            for p, j in rows:
                out.line(f"{_point(p)} -> {j}")
    else:
        out.rows(["point", "J"], [[list(p), j] for p, j in rows])
    return EXIT_OK


def cmd_johnson_verify(args, cfg, out):
    stat = _load_statistic(args.file)
    verdicts = []
    for b in args.b_list:
        _require_coprime(stat.a, b)
        ok = verify_catalan_property(stat, b)
        verdicts.append(
            Verdict(
                "catalan_property",
                {"a": stat.a, "b": b},
                VERIFIED if ok else COUNTEREXAMPLE,
                None if ok else {"a": stat.a, "b": b, "expected": str(cat_q(stat.a, b))},
                checked=1,
            )
        )
    return out.verdicts(verdicts)


def cmd_ribbons(args, cfg, out):
    a = args.a
    _positive("A", a, 2)
    budget = args.budget or cfg.node_budget
    if args.c is not None:
        _require_coprime(a, args.c)
        if not 1 <= args.c <= (a - 1) ** 2:
            raise UsageError(f"C must lie in 1..{(a - 1) ** 2}")
        residues = [args.c]
    else:
        residues = coprime_residues(a)
    if args.count:
        counts = [(c, count_ribbon_partitions(slice_points(a, c), budget, a)) for c in residues]
        if args.c is not None:
            out.value("count", counts[0][1], a=a, c=args.c)
        else:
            out.rows(["a", "c", "count"], [[a, c, n] for c, n in counts], text=lambda r: f"c={r[1]}: {r[2]}")
        return EXIT_OK
    code = EXIT_OK
    results = []
    for c in residues:
        part = ribbon_partition_search(slice_points(a, c), budget, a)
        if part is None:
            code = EXIT_COUNTEREXAMPLE
        results.append((c, part))
    if cfg.fmt == "text":
        for c, part in results:
            out.line(f"# a={a} c={c}")
            out.line(part.render() if part else "no ribbon partition")
    else:
        out.rows(
            ["a", "c", "blocks"],
            [[a, c, [[list(p) for p in blk] for blk in part.blocks] if part else None] for c, part in results],
        )
    return code


def _statistic_for(a: int, path: str | None) -> JohnsonStatistic:
    if path is None:
        return default_statistic(a)
    stat = _load_statistic(path)
    if stat.a != a:
        raise UsageError(f"statistic file has a={stat.a}, expected {a}")
    return stat


def cmd_brion(args, cfg, out):
    _positive("A", args.a, 2)
    _require_coprime(args.a, args.b)
    stat = _statistic_for(args.a, args.statistic)
    ok = verify_brion(stat, args.b)
    if cfg.fmt == "text":
        for i, (num, ds) in enumerate(brion_terms(stat, args.b)):
            den = " ".join(f"(1 - q^{args.a * d})" for d in ds)
            out.line(f"vertex {i}: ({num}) / {den}")
    verdict = Verdict(
        "brion",
        {"a": args.a, "b": args.b},
        VERIFIED if ok else COUNTEREXAMPLE,
        None if ok else {"a": args.a, "b": args.b, "expected": str(cat_q(args.a, args.b))},
        checked=args.a,
    )
    return out.verdicts([verdict])


def cmd_lemma(args, cfg, out):
    a = args.a
    _positive("A", a, 2)
    lo, hi = args.m_range
    if lo > hi:
        raise UsageError("--m-range needs LO <= HI")
    failure = None
    checked = 0
    for i in range(a):
        for m in range(lo, hi + 1):
            checked += 1
            if not lemma_pochhammer_identity(a, i, m):
                failure = {"a": a, "i": i, "m": m}
                break
        if failure:
            break
    return out.verdicts(
        [Verdict("pochhammer_identity", {"a": a, "m_range": [lo, hi]},
                 COUNTEREXAMPLE if failure else VERIFIED, failure, checked=checked)]
    )


def cmd_dyck(args, cfg, out):
    a, b = args.a, args.b
    _positive("A", a)
    _positive("B", b)
    budget = cfg.point_budget
    if args.qt:
        out.value("qt_catalan", qt_catalan(a, b, budget), a=a, b=b)
    elif args.maj:
        if a != b:
            raise DimensionMismatch(f"--maj needs A == B, got {a} and {b}")
        out.value("maj", maj_generating_function(a, budget), n=a)
    elif args.sweep:
        _require_coprime(a, b)
        rows = []
        for p in enumerate_dyck(a, b, budget):
            s = sweep(p)
            rows.append([p.word, s.word, area(p), area(s)])
        out.rows(["path", "sweep", "area", "sweep_area"], rows, text=lambda r: f"{r[0]} -> {r[1]}  area {r[2]} -> {r[3]}")
    else:
        out.rows(["path", "area"], [[p.word, area(p)] for p in enumerate_dyck(a, b, budget)])
    return EXIT_OK


def cmd_sweep_path(args, cfg, out):
    p = DyckPath(args.a, args.b, args.word)
    s = sweep(p)
    out.rows(["path", "sweep", "area", "sweep_area"], [[p.word, s.word, area(p), area(s)]],
             text=lambda r: f"{r[1]}  area {r[2]} -> {r[3]}")
    return EXIT_OK


def cmd_duality(args, cfg, out):
    _positive("A", args.a, 2)
    _positive("B", args.b, 2)
    pairs = rank_level_duality(args.a, args.b)
    out.rows(
        ["J", f"rank_{args.a}", f"rank_{args.b}"],
        [[j, list(p), list(r)] for p, r, j in pairs],
        text=lambda row: f"J={row[0]}: {_point(row[1])} <-> {_point(row[2])}",
    )
    return EXIT_OK


def cmd_weyl(args, cfg, out):
    return out.verdicts([verify_weyl(system_by_name(args.system), args.b)])


def cmd_repro(args, cfg, out):
    report = out.line if cfg.fmt == "text" else (lambda _line: None)
    ok = golden.run_all(report)
    if cfg.fmt != "text":
        out.value("status", VERIFIED if ok else COUNTEREXAMPLE, cases=len(golden.cases()))
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


# parser -----------------------------------------------------------------------------


def _default_cache_dir() -> Path:
    env = os.environ.get("QCAT_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "qcatalan"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcatalan", description="Exact rational q-Catalan computations.")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    parser.add_argument("--node-budget", type=int, default=10**6, help="ribbon search node limit")
    parser.add_argument("--point-budget", type=int, default=DEFAULT_POINT_BUDGET, help="enumeration limit")
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text", dest="fmt")
    parser.add_argument("--json", action="store_const", const="json", dest="fmt", help="same as --format json")
    parser.add_argument("--no-cache", action="store_true", help="recompute instead of reading the germ cache")
    parser.add_argument("--cache-dir", type=Path, default=None, help="cache location (env QCAT_CACHE_DIR)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("catq", help="rational q-Catalan number Cat(A,B)_q")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_catq)

    p = sub.add_parser("germs", help="all q-Catalan germs for A")
    p.add_argument("a", type=int)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_germs)

    p = sub.add_parser("slice", help="height generating function of a box slice")
    p.add_argument("a", type=int)
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("monotone", help="check Cat(A,c)_q - Cat(A,b)_q >= 0 up to --max")
    p.add_argument("a", type=int)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_monotone)

    p = sub.add_parser("monotone-nc", help="monotonicity of the non-coprime family")
    p.add_argument("a", type=int)
    p.add_argument("g", type=int, nargs="?")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_monotone_nc)

    p = sub.add_parser("sweep", help="run a conjecture over a range of A")
    p.add_argument("what", choices=("germs", "monotone", "monotone-nc"))
    p.add_argument("--a-max", type=int, default=10)
    p.add_argument("--c-max", type=int, default=40)
    p.add_argument("--long", action="store_true", help=f"A <= {LONG_A_MAX}, c <= {LONG_C_MAX}")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("johnson", help="greedy Johnson statistics")
    jsub = p.add_subparsers(dest="johnson_command", required=True, metavar="ACTION")
    q = jsub.add_parser("greedy", help="build the greedy statistic for A")
    q.add_argument("a", type=int)
    q.add_argument("--out")
    q.set_defaults(func=cmd_johnson_greedy)
    q = jsub.add_parser("verify", help="check a statistic file against Cat(a,b)_q")
    q.add_argument("file")
    q.add_argument("--b-list", type=int, nargs="+", required=True)
    q.set_defaults(func=cmd_johnson_verify)

    p = sub.add_parser("ribbons", help="ribbon partitions of box slices")
    p.add_argument("a", type=int)
    p.add_argument("c", type=int, nargs="?")
    p.add_argument("--count", action="store_true")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_ribbons)

    p = sub.add_parser("brion", help="vertex-cone decomposition of Cat(A,B)_q")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--statistic")
    p.set_defaults(func=cmd_brion)

    p = sub.add_parser("lemma", help="vertex-cone Pochhammer identity for all i")
    p.add_argument("a", type=int)
    p.add_argument("--m-range", type=int, nargs=2, metavar=("LO", "HI"), default=(-10, 30))
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("dyck", help="rational Dyck paths")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--qt", action="store_true", help="q,t-Catalan polynomial")
    mode.add_argument("--sweep", action="store_true", help="sweep map on every path")
    mode.add_argument("--maj", action="store_true", help="major index generating function")
    mode.add_argument("--path", dest="word", help="sweep a single path word")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("duality", help="pair root points of ranks A and B by J")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("weyl", help="B2 / G2 simplex checks")
    p.add_argument("system", choices=("b2", "g2"))
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("repro-paper", help="replay every reference value")
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        cfg = RunConfig(
            jobs=args.jobs,
            node_budget=args.node_budget,
            point_budget=args.point_budget,
            fmt=args.fmt,
            cache_dir=None if args.no_cache else (args.cache_dir or _default_cache_dir()),
        )
    except ValueError as e:
        print(f"qcatalan: {e}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "word", None) is not None:
        args.func = cmd_sweep_path
    out = Output(cfg)
    try:
        return args.func(args, cfg, out)
    except (ResourceLimit, SearchTimeout) as e:
        print(f"qcatalan: budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (NotDivisible, Stuck, MultisetMismatch) as e:
        print(f"qcatalan: counterexample: {e}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    except (UsageError, NotCoprime, NotCoprimeToCF, NotRootPoint, MalformedPartition, DimensionMismatch, ValueError) as e:
        print(f"qcatalan: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
