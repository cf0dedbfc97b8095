import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcatalan.errors import NotDivisible
from qcatalan.qpoly import (
    ONE,
    ZERO,
    BiPoly,
    LaurentPoly,
    divide_by_q_int,
    exact_div,
    q,
    q_binomial,
    q_binomial_column,
    q_binomial_factorial,
    q_factorial,
    q_int,
    q_pochhammer,
)

polys = st.dictionaries(st.integers(-6, 12), st.integers(-20, 20), max_size=6).map(LaurentPoly)
small_polys = st.dictionaries(st.integers(-3, 5), st.integers(-4, 4), max_size=4).map(LaurentPoly)


class TestRendering:
    @pytest.mark.parametrize(
        "poly, text",
        [
            (ZERO, "0"),
            (ONE, "1"),
            (q, "q"),
            (LaurentPoly({0: 1, 2: 1, 4: 2}), "1 + q^2 + 2*q^4"),
            (LaurentPoly({-3: 1}), "q^-3"),
            (LaurentPoly({-1: -2, 0: 1, 1: -1}), "-2*q^-1 + 1 - q"),
            (LaurentPoly({5: -1}), "-q^5"),
        ],
    )
    def test_str(self, poly, text):
        assert str(poly) == text
        assert LaurentPoly.parse(text) == poly

    @pytest.mark.parametrize("bad", ["", "q^", "1 + + q", "x^2", "2q^^3"])
    def test_parse_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            LaurentPoly.parse(bad)

    @given(polys)
    def test_parse_roundtrip(self, f):
        assert LaurentPoly.parse(str(f)) == f

    @given(polys)
    def test_dense_roundtrip(self, f):
        lo, dense = f.to_dense()
        assert LaurentPoly.from_dense(dense, lo) == f


class TestArithmetic:
    @given(polys, polys, polys)
    def test_ring_laws(self, f, g, h):
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f + g == g + f
        assert f - f == ZERO

    @given(polys, st.integers(-5, 5))
    def test_shift_is_monomial_product(self, f, k):
        assert f.shift(k) == f * LaurentPoly.monomial(k)

    @given(polys, st.integers(1, 4))
    def test_substitute_power_is_a_ring_map(self, f, d):
        g = f * f
        assert g.substitute_power(d) == f.substitute_power(d) * f.substitute_power(d)
        assert f.substitute_power(d).eval_at_one() == f.eval_at_one()

    def test_power(self):
        assert (ONE + q) ** 3 == LaurentPoly({0: 1, 1: 3, 2: 3, 3: 1})
        assert q**0 == ONE

    def test_degree_and_lowest(self):
        f = LaurentPoly({-2: 1, 7: 3})
        assert f.degree == 7
        assert f.lowest_exponent == -2
        assert f.coeff(7) == 3 and f.coeff(0) == 0

    def test_nonneg(self):
        assert LaurentPoly({1: 2, 3: 0}).is_nonneg()
        assert not LaurentPoly({1: 2, 3: -1}).is_nonneg()
        assert ZERO.is_nonneg()

    def test_big_coefficients_are_exact(self):
        f = (ONE + q) ** 200
        assert f.coeff(100) == 90548514656103281165404177077484163874504589675413336841320
        assert f.eval_at_one() == 2**200


class TestQNumbers:
    def test_small_values(self):
        assert str(q_int(4)) == "1 + q + q^2 + q^3"
        assert q_int(0) == ZERO
        assert str(q_factorial(3)) == "1 + 2*q + 2*q^2 + q^3"
        assert str(q_binomial(4, 2)) == "1 + q + 2*q^2 + q^3 + q^4"
        assert str(q_binomial(5, 2)) == "1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6"

    @pytest.mark.parametrize("n, k", [(3, -1), (3, 4), (-1, 0)])
    def test_binomial_vanishes_out_of_range(self, n, k):
        assert q_binomial(n, k) == ZERO

    @given(st.integers(0, 16), st.integers(0, 16))
    def test_binomial_symmetry_and_degree(self, n, k):
        if k > n:
            n, k = k, n
        b = q_binomial(n, k)
        assert b == q_binomial(n, n - k)
        assert b.degree == k * (n - k)
        assert b.terms == {k * (n - k) - e: c for e, c in b.terms.items()}

    @given(st.integers(1, 18), st.integers(1, 17))
    def test_pascal(self, n, k):
        lhs = q_binomial(n, k)
        assert lhs == q_binomial(n - 1, k).shift(k) + q_binomial(n - 1, k - 1)
        assert lhs == q_binomial(n - 1, k) + q_binomial(n - 1, k - 1).shift(n - k)

    @given(st.integers(0, 12), st.integers(0, 12))
    def test_factorial_route_agrees(self, n, k):
        assert q_binomial(n, k) == q_binomial_factorial(n, k)

    def test_column_matches_pointwise(self):
        col = q_binomial_column(3, 12)
        for n in range(3, 13):
            assert LaurentPoly.from_dense(col[n]) == q_binomial(n, 3)

    @given(st.integers(-5, 8), st.integers(0, 5))
    def test_pochhammer(self, m, n):
        p = q_pochhammer(m, n)
        expected = ONE
        for j in range(n):
            expected = expected * (ONE - q.shift(m + j - 1))
        assert p == expected

    @given(st.integers(1, 7), st.integers(0, 7))
    def test_pochhammer_binomial_identity(self, k, extra):
        # (q;q)_n / ((q;q)_k (q;q)_{n-k}) is the Gaussian binomial
        n = k + extra
        num = q_pochhammer(1, n)
        assert exact_div(num, q_pochhammer(1, k) * q_pochhammer(1, n - k)) == q_binomial(n, k)


class TestDivision:
    @given(polys, small_polys)
    def test_exact_div_roundtrip(self, f, g):
        if g.is_zero():
            return
        assert exact_div(f * g, g) == f

    @given(polys, st.integers(1, 7))
    def test_divide_by_q_int_roundtrip(self, f, n):
        assert divide_by_q_int(f * q_int(n), n) == f

    def test_remainder_certificate(self):
        with pytest.raises(NotDivisible) as info:
            exact_div(LaurentPoly.parse("1 + q^2"), q_int(2))
        err = info.value
        assert err.remainder == LaurentPoly({0: 2})
        assert err.divisor == q_int(2)

    def test_divide_by_q_int_inexact(self):
        with pytest.raises(NotDivisible):
            divide_by_q_int(LaurentPoly.parse("q + 2*q^2 + q^3 + q^4"), 3)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(ONE, ZERO)


class TestBiPoly:
    def test_swap_and_specialize(self):
        f = BiPoly.from_exponent_pairs([(3, 0), (1, 1), (1, 1), (0, 2)])
        assert f.swap_vars() == BiPoly({(0, 3): 1, (1, 1): 2, (2, 0): 1})
        assert f.specialize_t_to_inverse_q() == LaurentPoly({3: 1, 0: 2, -2: 1})
        assert f.eval_at_one() == 4
