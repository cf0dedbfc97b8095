import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcatalan.catalan import (
    GermTable,
    cat_count,
    cat_count_k,
    cat_q,
    cat_q_k,
    catq_ext,
    coprime_residues,
    divisors,
    germ,
    germ_brute,
    germ_reconstruction,
    germ_sum_check,
    germ_table,
    mobius,
    prev_coprime,
    q_ramanujan_sum,
    ramanujan_sum,
)
from qcatalan.errors import NotCoprime
from qcatalan.lattice import Simplex, coset_index, iter_points
from qcatalan.qpoly import ONE, ZERO, LaurentPoly, exact_div, q_binomial, q_int

P = LaurentPoly.parse

coprime_pairs = st.tuples(st.integers(2, 9), st.integers(1, 30)).filter(lambda ab: math.gcd(*ab) == 1)


def test_counts():
    assert cat_count(3, 5) == 7
    assert cat_count(4, 7) == 30
    assert cat_count(6, 1) == 1


def test_cat_q_values():
    assert str(cat_q(3, 5)) == "1 + q^2 + q^3 + q^4 + q^5 + q^6 + q^8"
    assert str(cat_q(5, 2)) == "1 + q^2 + q^4"
    assert str(cat_q(3, 7)) == "1 + q^2 + q^3 + q^4 + q^5 + 2*q^6 + q^7 + q^8 + q^9 + q^10 + q^12"


def test_cat_q_requires_coprime():
    with pytest.raises(NotCoprime):
        cat_q(4, 6)


@given(coprime_pairs)
def test_cat_q_symmetry_and_count(ab):
    a, b = ab
    f = cat_q(a, b)
    assert f == cat_q(b, a)
    assert f.eval_at_one() == cat_count(a, b)
    assert f.is_nonneg()
    deg = (a - 1) * (b - 1)
    assert f.terms == {deg - e: c for e, c in f.terms.items()}


def test_catq_ext_vanishes_below_zero():
    assert catq_ext(4, -1) == ZERO
    assert catq_ext(4, -5) == ZERO
    assert catq_ext(4, 1) == ONE


def test_prev_coprime():
    assert prev_coprime(4, 5) == 3
    assert prev_coprime(3, 4) == 2
    assert prev_coprime(5, 1) == -1


def test_germ_values():
    assert str(germ(3, 2)) == "q^2"
    assert str(germ(3, 4)) == "q^4"
    assert str(germ(4, 3)) == "q^2 + q^3 + q^4 + q^6"
    assert str(germ(4, 9)) == "q^15"
    assert str(germ(5, 6)) == (
        "q^6 + q^7 + 2*q^8 + 2*q^9 + 2*q^10 + 3*q^11 + 3*q^12 + 2*q^13 + 3*q^14"
        " + q^15 + 2*q^16 + q^17 + q^18"
    )


@pytest.mark.parametrize("c", [-3, -1, 11, 17])
def test_germ_vanishes_outside_range(c):
    assert germ(4, c) == ZERO


@pytest.mark.parametrize("a", range(2, 7))
def test_germ_routes_agree(a):
    table = germ_table(a).as_dict()
    assert list(table) == coprime_residues(a)
    for c in coprime_residues(a):
        assert germ(a, c) == table[c] == germ_brute(a, c)


def _germ_size_weighted(a, c):
    """Inclusion-exclusion weighting each vertex subset I by ``q^(a*#I)`` instead."""
    cp = prev_coprime(a, c)
    out = ZERO
    for s in range(a):
        w = LaurentPoly.monomial(a * s, math.comb(a - 1, s))
        diff = catq_ext(a, c - a * s) - catq_ext(a, cp - a * s)
        out = out + w * diff * (-1) ** s
    return out


def test_size_weighted_variant_disagrees_with_enumeration():
    mismatches = [
        (a, c) for a in (3, 4, 5) for c in coprime_residues(a) if _germ_size_weighted(a, c) != germ_brute(a, c)
    ]
    assert mismatches
    assert all(germ(a, c) == germ_brute(a, c) for a, c in mismatches)


def test_germ_sums():
    assert str(germ_table(3).total()) == "1 + q^2 + q^4"
    for a in range(2, 9):
        assert germ_sum_check(a)


def test_germ_table_serialization():
    table = germ_table(5)
    assert GermTable.from_json(table.to_json()) == table
    lines = table.to_csv().splitlines()
    assert lines[0] == '"a","c","germ"'
    assert lines[2] == '5,2,"q^2 + q^4"'
    assert len(lines) == 1 + len(table)


@pytest.mark.parametrize("a", range(2, 9))
def test_reconstruction_at_one(a):
    for b in range(1, 41):
        if math.gcd(a, b) == 1:
            assert germ_reconstruction(a, b).eval_at_one() == cat_count(a, b)


@pytest.mark.parametrize("a", range(2, 7))
def test_reconstruction_is_cat_q(a):
    for b in range(1, 30):
        if math.gcd(a, b) == 1:
            assert germ_reconstruction(a, b) == cat_q(a, b)


@pytest.mark.parametrize("a", range(2, 9))
def test_consecutive_difference_is_a_sum_of_germs(a):
    # [a-1+c choose a-1] - [a-1+c' choose a-1] over [a]_q, telescoped through the germs
    values = [c for c in range(1, 3 * a) if math.gcd(a, c) == 1]
    for cp, c in zip(values, values[1:]):
        num = q_binomial(a - 1 + c, a - 1) - q_binomial(a - 1 + cp, a - 1)
        lhs = exact_div(num, q_int(a))
        assert lhs == cat_q(a, c) - cat_q(a, cp)


class TestNumberTheory:
    def test_divisors_and_mobius(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]

    @given(st.integers(1, 60), st.integers(-100, 100))
    def test_ramanujan_sum_properties(self, d, l):
        if math.gcd(d, l) == 1:
            assert ramanujan_sum(d, l) == mobius(d)
        assert ramanujan_sum(d, l + 7 * d) == ramanujan_sum(d, l)
        assert q_ramanujan_sum(d, l).eval_at_one() == ramanujan_sum(d, l)

    @given(st.integers(1, 80))
    def test_ramanujan_sum_at_zero_is_totient(self, d):
        phi = sum(1 for j in range(1, d + 1) if math.gcd(j, d) == 1)
        assert ramanujan_sum(d, 0) == phi


class TestNonCoprime:
    def test_values(self):
        assert str(cat_q_k(3, 3, 0)) == "1 + q + q^2 + q^4"
        assert str(cat_q_k(3, 6, 1)) == "q + q^2 + 2*q^4 + q^5 + q^6 + q^7 + q^8 + q^10"

    @pytest.mark.parametrize("a", range(2, 7))
    def test_coprime_case_is_cat_q(self, a):
        for b in range(1, 13):
            if math.gcd(a, b) == 1:
                for k in range(a):
                    assert cat_q_k(a, b, k) == cat_q(a, b)

    @pytest.mark.parametrize("a", range(1, 8))
    def test_count_matches_enumeration(self, a):
        for b in range(1, 9):
            counts = [0] * a
            for p in iter_points(Simplex(a, b)):
                counts[coset_index(p, a) if a > 1 else 0] += 1
            for k in range(a):
                assert cat_count_k(a, b, k) == counts[k]
                assert cat_q_k(a, b, k).eval_at_one() == counts[k]
