import json

import pytest

from qcatalan.catalan import cat_q, cat_q_k
from qcatalan.errors import MultisetMismatch, NotCoprime
from qcatalan.johnson import GreedyStatistic, JohnsonStatistic, eval_j, unique_statistic_a3
from qcatalan.qpoly import LaurentPoly
from qcatalan.verify import (
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


def test_worked_difference():
    assert str(cat_q(5, 3) - cat_q(5, 2)) == "q^3 + q^5 + q^6 + q^8"


@pytest.mark.parametrize("a", range(2, 7))
def test_monotone(a):
    v = check_monotone(a, 40)
    assert v.ok and v.certificate is None and v.checked > 0


def test_monotone_is_reproducible():
    first = check_monotone(5, 30).to_json(include_time=False)
    assert check_monotone(5, 30).to_json(include_time=False) == first


def test_monotone_any_map():
    serial = check_monotone(7, 30)
    listed = check_monotone(7, 30, map_fn=lambda f, xs: [f(x) for x in xs])
    assert serial.to_dict(False) == listed.to_dict(False)


def test_nonco_examples():
    expected = "q^4 + q^5 + q^6 + q^7 + q^8 + q^10"
    for k in (0, 1):
        assert str(cat_q_k(3, 6, k) - cat_q_k(3, 3, k)) == expected
    assert check_monotone_nonco(3, 3, 0, 30).ok
    assert check_monotone_nonco(6, 2, 1, 30).ok


def test_nonco_with_g_one_is_monotone():
    assert check_monotone_nonco(5, 1, 0, 30).checked == check_monotone(5, 30, spot_checks=10).checked


def test_nonco_rejects_bad_g():
    with pytest.raises(ValueError):
        check_monotone_nonco(6, 4, 0, 20)


def test_germ_positivity():
    for a in range(2, 12):
        assert check_germ_positivity(a).ok


def test_verdict_contract():
    with pytest.raises(ValueError):
        Verdict("x", {}, COUNTEREXAMPLE)
    with pytest.raises(ValueError):
        Verdict("x", {}, "maybe")
    v = Verdict("x", {"a": 3}, COUNTEREXAMPLE, {"a": 3}, 1.5, 2)
    assert not v.ok
    assert "wall_time" not in json.loads(v.to_json(include_time=False))
    assert "counterexample" in v.summary()


def test_greedy_builder():
    assert build_johnson_via_greedy(3) == unique_statistic_a3()
    assert isinstance(build_johnson_via_greedy(9), GreedyStatistic)
    assert default_statistic(3) == unique_statistic_a3()


def test_duality_3_4():
    pairs = rank_level_duality(3, 4)
    assert pairs == [
        ((0, 0), (0, 0, 0), 0),
        ((1, 1), (2, 1, 0), 2),
        ((3, 0), (1, 0, 1), 3),
        ((2, 2), (0, 2, 0), 4),
        ((0, 3), (0, 1, 2), 6),
    ]


@pytest.mark.parametrize("a, b", [(3, 5), (4, 5), (5, 6), (3, 7), (5, 2)])
def test_duality_matches_cat_q(a, b):
    pairs = rank_level_duality(a, b)
    js = sorted(j for _, _, j in pairs)
    assert LaurentPoly.from_exponents(js) == cat_q(a, b)
    assert rank_level_duality(a, 1) == [((0,) * (a - 1), (), 0)]


def test_duality_errors():
    with pytest.raises(NotCoprime):
        rank_level_duality(4, 6)
    wrong = JohnsonStatistic(3, {(0, 0): 0, (1, 1): 3, (2, 2): 4})
    with pytest.raises(MultisetMismatch):
        rank_level_duality(3, 4, stat_a=wrong)
