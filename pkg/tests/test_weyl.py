import math

import pytest

from qcatalan.catalan import cat_q
from qcatalan.errors import NotCoprimeToCF
from qcatalan.lattice import Simplex, height_gen_poly, iter_points, is_root_point
from qcatalan.qpoly import LaurentPoly, exact_div, q_int
from qcatalan.weyl import (
    B2,
    G2,
    system_by_name,
    type_a,
    verify_weyl,
    weyl_cat_q,
    weyl_enum_simplex,
    weyl_is_root_point,
    weyl_tilted_height,
)


def test_data():
    assert (B2.f, B2.c, B2.order) == (2, 2, 8)
    assert (G2.f, G2.c, G2.order) == (1, 6, 12)
    assert system_by_name("G2") is G2
    with pytest.raises(ValueError):
        system_by_name("f4")


def test_heights_and_roots():
    assert weyl_tilted_height(B2, (1, 0)) == 2
    assert weyl_tilted_height(B2, (1, 1)) == 4
    assert weyl_tilted_height(G2, (0, 1)) == 6
    assert not weyl_is_root_point(B2, (1, 0))
    assert weyl_is_root_point(B2, (2, 0))
    assert weyl_is_root_point(B2, (0, 1))
    assert all(weyl_is_root_point(G2, x) for x in weyl_enum_simplex(G2, 7))


def test_cat_formulas():
    for b in (1, 3, 5, 7, 9):
        num = q_int(b + 1) * q_int(b + 3)
        assert weyl_cat_q(B2, b) == exact_div(num, q_int(2) * q_int(4))
    for b in (1, 5, 7, 11):
        assert weyl_cat_q(G2, b) == exact_div(q_int(b + 1) * q_int(b + 5), q_int(2) * q_int(6))
    with pytest.raises(NotCoprimeToCF):
        weyl_cat_q(B2, 2)
    with pytest.raises(NotCoprimeToCF):
        weyl_cat_q(G2, 3)


@pytest.mark.parametrize("sys, bs", [(B2, (1, 3, 5, 7, 9, 11)), (G2, (1, 5, 7, 11, 13))])
def test_verify(sys, bs):
    for b in bs:
        v = verify_weyl(sys, b)
        assert v.ok, v.summary()


def test_b2_f_q():
    for b in (1, 3, 5, 7):
        pts = weyl_enum_simplex(B2, b)
        weight = LaurentPoly.from_exponents(weyl_tilted_height(B2, x) for x in pts)
        root = LaurentPoly.from_exponents(weyl_tilted_height(B2, x) for x in pts if weyl_is_root_point(B2, x))
        assert weight == LaurentPoly.parse("1 + q^2") * root


@pytest.mark.parametrize("a", [2, 3, 4])
def test_type_a_matches_lattice_module(a):
    sys = type_a(a)
    assert sys.f == a
    for b in range(1, 12):
        if math.gcd(a, b) != 1:
            continue
        pts = weyl_enum_simplex(sys, b)
        assert sorted(pts) == sorted(iter_points(Simplex(a, b)))
        assert [weyl_is_root_point(sys, x) for x in pts] == [is_root_point(x, a) for x in pts]
        assert weyl_cat_q(sys, b) == cat_q(a, b)
        assert height_gen_poly(pts) == q_int(a) * cat_q(a, b)
        assert verify_weyl(sys, b).ok
