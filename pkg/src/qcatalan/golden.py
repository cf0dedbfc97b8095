"""Reference values with known answers, replayed by ``qcatalan repro-paper``.

Each case pairs a computation with its expected rendering.  Polynomials are
compared through their canonical text form, so a mismatch prints both sides
in a readable way.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

from . import catalan, dyck, johnson, lattice, qpoly, verify, weyl
from .qpoly import LaurentPoly

GERM_TABLE: dict[int, dict[int, str]] = {
    3: {1: "1", 2: "q^2", 4: "q^4"},
    4: {
        1: "1",
        3: "q^2 + q^3 + q^4 + q^6",
        5: "q^5 + q^6 + q^7 + q^8 + q^9 + q^10",
        7: "q^9 + q^11 + q^12 + q^13",
        9: "q^15",
    },
    5: {
        1: "1",
        2: "q^2 + q^4",
        3: "q^3 + q^5 + q^6 + q^8",
        4: "q^4 + q^6 + q^7 + q^8 + q^9 + q^10 + q^12",
        6: "q^6 + q^7 + 2*q^8 + 2*q^9 + 2*q^10 + 3*q^11 + 3*q^12 + 2*q^13 + 3*q^14"
        " + q^15 + 2*q^16 + q^17 + q^18",
        7: "q^10 + q^11 + q^12 + 2*q^13 + q^14 + 2*q^15 + 2*q^16 + q^17 + 2*q^18"
        " + q^19 + q^20 + q^21",
        8: "q^12 + 2*q^14 + q^15 + 2*q^16 + 2*q^17 + q^18 + 2*q^19 + 2*q^20 + q^21"
        " + 2*q^22 + q^24",
        9: "q^15 + q^16 + q^17 + 2*q^18 + q^19 + 2*q^20 + 2*q^21 + q^22 + 2*q^23"
        " + q^24 + q^25 + q^26",
        11: "q^18 + q^19 + 2*q^20 + q^21 + 3*q^22 + 2*q^23 + 3*q^24 + 3*q^25"
        " + 2*q^26 + 2*q^27 + 2*q^28 + q^29 + q^30",
        12: "q^24 + q^26 + q^27 + q^28 + q^29 + q^30 + q^32",
        13: "q^28 + q^30 + q^31 + q^33",
        14: "q^32 + q^34",
        16: "q^36",
    },
}

CAT3 = {
    1: "1",
    2: "1 + q^2",
    4: "1 + q^2 + q^3 + q^4 + q^6",
    5: "1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8",
    7: "1 + q^2 + q^3 + q^4 + q^5 + 2*q^6 + q^7 + q^8 + q^9 + q^10 + q^12",
}

COSETS_A3_B5 = {
    0: "1 + 2*q^3 + 3*q^6 + q^9",
    1: "q + 3*q^4 + 2*q^7 + q^10",
    2: "2*q^2 + 3*q^5 + 2*q^8",
}

DUALITY_3_4 = [
    ((0, 0), (0, 0, 0), 0),
    ((1, 1), (2, 1, 0), 2),
    ((3, 0), (1, 0, 1), 3),
    ((2, 2), (0, 2, 0), 4),
    ((0, 3), (0, 1, 2), 6),
]


@dataclass(frozen=True)
class GoldenCase:
    name: str
    compute: Callable[[], object]
    expected: object

    def run(self) -> tuple[bool, str]:
        got = self.compute()
        got_s = str(got) if isinstance(got, LaurentPoly) else got
        return got_s == self.expected, str(got_s)


def _roots_in(region, a):
    return [p for p in lattice.iter_points(region) if lattice.is_root_point(p, a)]


def _j_values(stat, region):
    return sorted(johnson.eval_j(stat, p) for p in _roots_in(region, stat.a))


def _coset_poly(a, b, k):
    return lattice.height_gen_poly(
        p for p in lattice.iter_points(lattice.Simplex(a, b)) if lattice.coset_index(p, a) == k
    )


def _three_term_cat3(b):
    # Cat(3,b)_q from the three box representatives and floor offsets
    out = qpoly.ZERO
    for shift, j in ((0, 0), (2, 2), (4, 4)):
        n = 2 + (b - shift) // 3
        out = out + qpoly.q_binomial(n, 2).substitute_power(3).shift(j)
    return out


def cases() -> list[GoldenCase]:
    J3 = johnson.unique_statistic_a3()
    T2 = johnson.a4_ribbon_statistic()
    s = str
    out = [
        GoldenCase("q_binomial(4,2)", lambda: qpoly.q_binomial(4, 2), "1 + q + 2*q^2 + q^3 + q^4"),
        GoldenCase(
            "q_binomial(7,2)",
            lambda: qpoly.q_binomial(7, 2),
            "1 + q + 2*q^2 + 2*q^3 + 3*q^4 + 3*q^5 + 3*q^6 + 2*q^7 + 2*q^8 + q^9 + q^10",
        ),
        GoldenCase("[3]_{q^2}", lambda: qpoly.q_int(3).substitute_power(2), "1 + q^2 + q^4"),
        GoldenCase(
            "exact_div germ times [3]_q",
            lambda: qpoly.exact_div(LaurentPoly.parse("q^2 + q^3 + q^4"), qpoly.q_int(3)),
            "q^2",
        ),
        GoldenCase("Cat(3,5) at q=1", lambda: catalan.cat_q(3, 5).eval_at_one(), 7),
        GoldenCase("T(omega_2), a=4", lambda: lattice.tilted_height((0, 1, 0)), 2),
        GoldenCase("T(1,1,2)", lambda: lattice.tilted_height((1, 1, 2)), 9),
        GoldenCase("(1,1) is a root point, a=3", lambda: lattice.is_root_point((1, 1), 3), True),
        GoldenCase("(2,1,0) is a root point, a=4", lambda: lattice.is_root_point((2, 1, 0), 4), True),
        GoldenCase("#(L ∩ 5Δ), a=3", lambda: len(lattice.enumerate_points(lattice.Simplex(3, 5))), 21),
        GoldenCase(
            "(L ∩ 5Δ)_q, a=3",
            lambda: s(lattice.height_gen_poly(lattice.iter_points(lattice.Simplex(3, 5)))),
            s(qpoly.q_binomial(7, 2)),
        ),
        GoldenCase(
            "J on root points of Box_7^1, a=3",
            lambda: _j_values(J3, lattice.RotatedBox(3, 7, 1)),
            [5, 6, 7],
        ),
        GoldenCase(
            "phi shifts height by b mod a",
            lambda: all(
                (lattice.tilted_height(lattice.phi(b, p)) - lattice.tilted_height(p) - b) % a == 0
                for a in (3, 4, 5)
                for b in (1, 2, 3, 4, 7)
                for p in lattice.iter_points(lattice.Simplex(a, b))
            ),
            True,
        ),
        GoldenCase(
            "x in R iff (x rem a) in R",
            lambda: all(
                lattice.is_root_point(p, 3)
                == lattice.is_root_point(lattice.quo_rem_mod_a(p, 3)[1], 3)
                for p in [(x, y) for x in range(-7, 8) for y in range(-7, 8)]
            ),
            True,
        ),
        GoldenCase("Cat(3,5)", lambda: catalan.cat_count(3, 5), 7),
        GoldenCase("Cat(3,5)_q", lambda: catalan.cat_q(3, 5), CAT3[5]),
        GoldenCase("Cat(5,2)_q", lambda: catalan.cat_q(5, 2), "1 + q^2 + q^4"),
        GoldenCase("Cat(3,7)_q", lambda: catalan.cat_q(3, 7), CAT3[7]),
        GoldenCase("prev_coprime(4,5)", lambda: catalan.prev_coprime(4, 5), 3),
        GoldenCase("prev_coprime(3,4)", lambda: catalan.prev_coprime(3, 4), 2),
        GoldenCase("germ(3,2)", lambda: catalan.germ(3, 2), "q^2"),
        GoldenCase("germ(4,3)", lambda: catalan.germ(4, 3), GERM_TABLE[4][3]),
        GoldenCase("germ(4,9)", lambda: catalan.germ(4, 9), "q^15"),
        GoldenCase("germ_brute(3,4)", lambda: catalan.germ_brute(3, 4), "q^4"),
        GoldenCase("germ_brute(5,6)", lambda: catalan.germ_brute(5, 6), GERM_TABLE[5][6]),
        GoldenCase("sum of a=3 germs", lambda: catalan.germ_table(3).total(), "1 + q^2 + q^4"),
        GoldenCase(
            "c_d(l) = mu(d) when gcd(d,l) = 1",
            lambda: all(
                catalan.ramanujan_sum(d, l) == catalan.mobius(d)
                for d in range(1, 30)
                for l in range(-30, 30)
                if math.gcd(d, l) == 1
            ),
            True,
        ),
        GoldenCase(
            "c_d(0) = phi(d)",
            lambda: [catalan.ramanujan_sum(d, 0) for d in range(1, 13)],
            [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4],
        ),
        GoldenCase(
            "c_d periodic in l",
            lambda: all(
                catalan.ramanujan_sum(d, l + d * t) == catalan.ramanujan_sum(d, l)
                for d in range(1, 16)
                for l in range(0, 16)
                for t in (-3, 1, 5)
            ),
            True,
        ),
        GoldenCase("Cat(3,3;0)_q", lambda: catalan.cat_q_k(3, 3, 0), "1 + q + q^2 + q^4"),
        GoldenCase(
            "Cat(3,6;0)_q",
            lambda: catalan.cat_q_k(3, 6, 0),
            "1 + q + q^2 + 2*q^4 + q^5 + q^6 + q^7 + q^8 + q^10",
        ),
        GoldenCase("Cat(3,3;1)_q", lambda: catalan.cat_q_k(3, 3, 1), "q + q^2 + q^4"),
        GoldenCase(
            "Cat(3,6;1)_q",
            lambda: catalan.cat_q_k(3, 6, 1),
            "q + q^2 + 2*q^4 + q^5 + q^6 + q^7 + q^8 + q^10",
        ),
        GoldenCase("#Dyck(3,5)", lambda: len(dyck.enumerate_dyck(3, 5)), 7),
        GoldenCase("area(uurruurrrrr)", lambda: dyck.area(dyck.DyckPath(4, 7, "uurruurrrrr")), 5),
        GoldenCase(
            "sweep(uurruurrrrr)",
            lambda: str(dyck.sweep(dyck.DyckPath(4, 7, "uurruurrrrr"))),
            "uruurrrurrr",
        ),
        GoldenCase(
            "area(sweep(uurruurrrrr))",
            lambda: dyck.area(dyck.sweep(dyck.DyckPath(4, 7, "uurruurrrrr"))),
            3,
        ),
        GoldenCase("maj over Dyck(3,3)", lambda: dyck.maj_generating_function(3), "1 + q^2 + q^3 + q^4 + q^6"),
        GoldenCase("J(0,0), J(1,1), J(2,2), a=3", lambda: [J3.value(p) for p in ((0, 0), (1, 1), (2, 2))], [0, 2, 4]),
        GoldenCase("J(1,1,3), a=4", lambda: johnson.eval_j(T2, (1, 1, 3)), 9),
        GoldenCase(
            "alcove vertices form a standard set",
            lambda: all(
                johnson.is_standard_set(
                    [(0,) * (a - 1)] + [tuple(int(i == k) for i in range(a - 1)) for k in range(a - 1)]
                )
                for a in range(2, 9)
            ),
            True,
        ),
        GoldenCase(
            "greedy on the a=3 box",
            lambda: sorted(
                johnson.partition_to_johnson(
                    [johnson.greedy_standard_partition(lattice.enumerate_points(lattice.Box(3)), 3)], 3
                ).table.items()
            ),
            [((0, 0), 0), ((1, 1), 2), ((2, 2), 4)],
        ),
        GoldenCase(
            "a=4 ribbon blocks are ribbons",
            lambda: all(johnson.is_ribbon(b) for b in johnson.A4_RIBBON_BLOCKS),
            True,
        ),
        GoldenCase(
            "a=4 ribbon statistic J values",
            lambda: [T2.value(next(p for p in b if lattice.is_root_point(p, 4))) for b in johnson.A4_RIBBON_BLOCKS],
            list(johnson.A4_RIBBON_J),
        ),
        GoldenCase(
            "unique ribbon partition of each a=3 slice",
            lambda: [johnson.count_ribbon_partitions(johnson.slice_points(3, c)) for c in (1, 2, 4)],
            [1, 1, 1],
        ),
        GoldenCase(
            "ribbon partitions of Box[2,2], a=5",
            lambda: johnson.count_ribbon_partitions(lattice.enumerate_points(lattice.BoxSlice(5, 2, 2))),
            2,
        ),
        GoldenCase(
            "a ribbon partition of every a=5 slice",
            lambda: all(
                johnson.ribbon_partition_search(johnson.slice_points(5, c)) is not None
                for c in catalan.coprime_residues(5)
            ),
            True,
        ),
        GoldenCase(
            "Catalan property, a=3, b in 1,2,4,5,7",
            lambda: [s(johnson.catalan_sum_direct(J3, b)) for b in (1, 2, 4, 5, 7)],
            [CAT3[b] for b in (1, 2, 4, 5, 7)],
        ),
        GoldenCase(
            "three-term coset formula for Cat(3,b)_q",
            lambda: all(_three_term_cat3(b) == catalan.cat_q(3, b) for b in range(1, 40) if b % 3),
            True,
        ),
        GoldenCase("box identity a=3, i=0", lambda: johnson.rotated_box_sum(J3, 7, 0), "1 + q^2 + q^4"),
        GoldenCase("box identity a=3, b=7, i=1", lambda: johnson.rotated_box_sum(J3, 7, 1), "q^5 + q^6 + q^7"),
        GoldenCase(
            "vertex numerators for (3,7)",
            lambda: [s(n) for n, _ in johnson.brion_terms(J3, 7)],
            ["1 + q^2 + q^4", "q^5 + q^6 + q^7", "q^8 + q^10 + q^12"],
        ),
        GoldenCase("Brion sum for (3,7)", lambda: johnson.verify_brion(J3, 7), True),
        GoldenCase(
            "column statistic box identity",
            lambda: all(johnson.verify_box_identities(johnson.column_statistic(a), 1, 0) for a in range(2, 7)),
            True,
        ),
        GoldenCase("Cat(5,3)_q - Cat(5,2)_q", lambda: catalan.cat_q(5, 3) - catalan.cat_q(5, 2), "q^3 + q^5 + q^6 + q^8"),
        GoldenCase(
            "Cat(3,6;k)_q - Cat(3,3;k)_q, k=0,1",
            lambda: [s(catalan.cat_q_k(3, 6, k) - catalan.cat_q_k(3, 3, k)) for k in (0, 1)],
            ["q^4 + q^5 + q^6 + q^7 + q^8 + q^10"] * 2,
        ),
        GoldenCase(
            "germ positivity a=3..5 and a=20",
            lambda: [verify.check_germ_positivity(a).status for a in (3, 4, 5, 20)],
            ["verified"] * 4,
        ),
        GoldenCase("duality (3,4)", lambda: verify.rank_level_duality(3, 4), DUALITY_3_4),
        GoldenCase("B2 T(omega_1)", lambda: weyl.weyl_tilted_height(weyl.B2, (1, 0)), 2),
        GoldenCase("G2 T(omega_2)", lambda: weyl.weyl_tilted_height(weyl.G2, (0, 1)), 6),
        GoldenCase(
            "G2 weight and root lattices coincide",
            lambda: all(weyl.weyl_is_root_point(weyl.G2, (x, y)) for x in range(-5, 6) for y in range(-5, 6)),
            True,
        ),
        GoldenCase("B2 f(q)", lambda: weyl.B2.f_q, "1 + q^2"),
        GoldenCase(
            "B2 identities, b in 1,3,5,7,9",
            lambda: [weyl.verify_weyl(weyl.B2, b).status for b in (1, 3, 5, 7, 9)],
            ["verified"] * 5,
        ),
        GoldenCase(
            "G2 identities, b in 1,5,7,11",
            lambda: [weyl.verify_weyl(weyl.G2, b).status for b in (1, 5, 7, 11)],
            ["verified"] * 4,
        ),
        GoldenCase(
            "maj over Dyck(3,3) equals Cat(3,4)_q",
            lambda: s(dyck.maj_generating_function(3)),
            s(catalan.cat_q(3, 4)),
        ),
        GoldenCase(
            "q,t-Catalan at q=t=1 and q<->t symmetry",
            lambda: [
                (f.eval_at_one(), f.swap_vars() == f)
                for f in (dyck.qt_catalan(a, b) for a, b in ((3, 4), (3, 5), (4, 7), (5, 6)))
            ],
            [(5, True), (7, True), (30, True), (42, True)],
        ),
        GoldenCase(
            "q,t-Catalan at t=1/q",
            lambda: all(
                dyck.qt_catalan(a, b).specialize_t_to_inverse_q().shift((a - 1) * (b - 1) // 2)
                == catalan.cat_q(a, b)
                for a, b in ((3, 4), (3, 5), (4, 7), (5, 6))
            ),
            True,
        ),
    ]
    for a, rows in GERM_TABLE.items():
        for c, text in rows.items():
            out.append(GoldenCase(f"germ table a={a} c={c}", lambda a=a, c=c: catalan.germ_table(a).as_dict()[c], text))
    for b, text in CAT3.items():
        out.append(GoldenCase(f"Cat(3,{b})_q", lambda b=b: catalan.cat_q(3, b), text))
    for k, text in COSETS_A3_B5.items():
        out.append(GoldenCase(f"(R_{k} ∩ 5Δ)_q, a=3", lambda k=k: _coset_poly(3, 5, k), text))
    return out


def run_all(report: Callable[[str], None] = print) -> bool:
    ok = True
    all_cases = cases()
    for case in all_cases:
        passed, got = case.run()
        ok &= passed
        if passed:
            report(f"ok    {case.name}")
        else:
            report(f"FAIL  {case.name}: got {got!r}, expected {case.expected!r}")
    report(f"{len(all_cases)} cases, {'all passed' if ok else 'FAILURES'}")
    return ok
