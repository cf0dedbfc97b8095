import math

import pytest

from qcatalan.catalan import cat_q, coprime_residues, germ_table
from qcatalan.errors import MalformedPartition, NotRootPoint, SearchTimeout, Stuck
from qcatalan.johnson import (
    A4_RIBBON_BLOCKS,
    GreedyStatistic,
    JohnsonStatistic,
    Partition,
    a4_ribbon_partition,
    a4_ribbon_statistic,
    box_identity_rhs,
    brion_terms,
    catalan_sum_direct,
    column_statistic,
    count_ribbon_partitions,
    coset_sum,
    eval_j,
    greedy_standard_partition,
    is_ribbon,
    is_standard_set,
    iter_ribbon_partitions,
    lemma_pochhammer_identity,
    partition_to_johnson,
    ribbon_partition_search,
    rotated_box_sum,
    run_decomposition,
    slice_bounds,
    slice_points,
    unique_statistic_a3,
    verify_box_identities,
    verify_brion,
    verify_catalan_property,
    verify_coset_decomposition,
)
from qcatalan.lattice import Box, BoxSlice, enumerate_points, height_gen_poly, is_root_point, tilted_height
from qcatalan.qpoly import LaurentPoly, q_int
from qcatalan.verify import build_johnson_via_greedy

P = LaurentPoly.parse


def _coprime(a, hi):
    return [b for b in range(1, hi + 1) if math.gcd(a, b) == 1]


def _explicit_greedy(a):
    parts = [greedy_standard_partition(slice_points(a, c), a) for c in coprime_residues(a)]
    return partition_to_johnson(parts, a)


class TestEvaluation:
    def test_a3_values(self):
        J = unique_statistic_a3()
        assert [eval_j(J, p) for p in [(0, 0), (1, 1), (2, 2)]] == [0, 2, 4]
        assert eval_j(J, (4, 1)) == 5

    def test_a4_value(self):
        assert eval_j(a4_ribbon_statistic(), (1, 1, 3)) == 9

    def test_non_root_point(self):
        with pytest.raises(NotRootPoint):
            eval_j(unique_statistic_a3(), (1, 0))

    def test_shape(self):
        unique_statistic_a3().check_shape()
        with pytest.raises(ValueError):
            JohnsonStatistic(3, {(0, 0): 0, (1, 1): 2}).check_shape()
        with pytest.raises(ValueError):
            JohnsonStatistic(3, {(0, 0): 0, (1, 1): 2, (4, 1): 5}).check_shape()

    def test_json_roundtrip(self):
        J = a4_ribbon_statistic()
        assert JohnsonStatistic.from_json(J.to_json()) == J


class TestSets:
    def test_standard_and_ribbon(self):
        assert is_ribbon([(2, 0), (1, 1), (0, 2)])
        assert not is_standard_set([(0, 0), (1, 0), (0, 2)])
        assert is_standard_set([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert not is_standard_set([])

    @pytest.mark.parametrize("a", range(2, 8))
    def test_alcove_vertices_are_standard(self, a):
        vertices = [tuple(int(i == k) for i in range(a - 1)) for k in range(-1, a - 1)]
        assert is_standard_set(vertices)
        assert sum(is_root_point(v, a) for v in vertices) == 1

    def test_standard_but_not_ribbon(self):
        pts = [(1, 0), (0, 1), (3, 0)]
        assert is_standard_set(pts) and not is_ribbon(pts)

    def test_partition_json_and_render(self):
        part = Partition([[(2, 0), (1, 1), (0, 2)]])
        assert Partition.from_json(part.to_json()) == part
        assert part.render() == "(0,2) <1,1> (2,0)  J=2"


class TestGreedy:
    def test_small_slice(self):
        part = greedy_standard_partition(enumerate_points(BoxSlice(3, 2, 2)))
        assert [sorted(b) for b in part] == [[(0, 2), (1, 1), (2, 0)]]

    def test_a3_box(self):
        J = _explicit_greedy(3)
        assert J == unique_statistic_a3()

    def test_stuck(self):
        with pytest.raises(Stuck) as info:
            greedy_standard_partition([(0, 0), (1, 0), (0, 2)], 3)
        assert info.value.height == 2

    def test_malformed(self):
        with pytest.raises(MalformedPartition):
            partition_to_johnson([Partition([[(0, 0), (1, 0), (2, 0)], [(1, 1), (0, 0), (2, 2)]])], 3)

    @pytest.mark.parametrize("a", range(2, 8))
    def test_blocks_are_standard_with_one_root(self, a):
        for c in coprime_residues(a):
            pts = slice_points(a, c)
            part = greedy_standard_partition(pts, a)
            assert sorted(part.points()) == sorted(pts)
            for block in part:
                assert is_standard_set(block)
                assert sum(is_root_point(p, a) for p in block) == 1

    @pytest.mark.parametrize("a", range(3, 8))
    def test_slice_profiles_are_germs(self, a):
        J = _explicit_greedy(a)
        germs = germ_table(a).as_dict()
        for (lo, hi), c in zip(slice_bounds(a), coprime_residues(a)):
            got = LaurentPoly.from_exponents(j for p, j in J.table.items() if lo <= sum(p) <= hi)
            assert got == germs[c]

    @pytest.mark.parametrize("a", range(2, 8))
    def test_lazy_statistic_matches_explicit(self, a):
        lazy = GreedyStatistic(a)
        explicit = _explicit_greedy(a)
        assert lazy.table == explicit.table
        assert all(lazy.value(p) == j for p, j in explicit.table.items())

    @pytest.mark.parametrize("a", range(2, 8))
    def test_catalan_property(self, a):
        J = build_johnson_via_greedy(a)
        for b in _coprime(a, 3 * a * (a - 1)):
            assert verify_catalan_property(J, b)

    @pytest.mark.parametrize("a", [4, 5, 6])
    def test_coset_form_matches_direct_sum(self, a):
        J = build_johnson_via_greedy(a)
        for b in _coprime(a, 2 * a + 3):
            assert coset_sum(J, b) == catalan_sum_direct(J, b) == cat_q(a, b)
            assert verify_coset_decomposition(J, b)

    def test_run_decomposition(self):
        starts, stuck = run_decomposition({0: 1, 1: 2, 2: 2, 3: 1}, 3)
        assert stuck is None and starts == {0: 1, 1: 1}
        _, stuck = run_decomposition({0: 1, 1: 1}, 3)
        assert stuck == 2


class TestA4Ribbons:
    def test_blocks_are_ribbons(self):
        assert len(A4_RIBBON_BLOCKS) == 16
        assert all(is_ribbon(b) for b in A4_RIBBON_BLOCKS)
        assert sorted(a4_ribbon_partition().points()) == sorted(enumerate_points(Box(4)))

    def test_statistic(self):
        J = a4_ribbon_statistic()
        J.check_shape()
        assert J.value((3, 1, 1)) == 5
        assert J.value((2, 2, 2)) == 12
        assert sorted(J.table.values()) == [0, 2, 3, 4, 5, 6, 6, 7, 8, 9, 9, 10, 11, 12, 13, 15]

    def test_catalan_and_brion(self):
        J = a4_ribbon_statistic()
        for b in _coprime(4, 36):
            assert verify_catalan_property(J, b)
        for b in (3, 5, 7):
            assert verify_brion(J, b)


class TestRibbonSearch:
    @pytest.mark.parametrize("c", [1, 2, 4])
    def test_a3_unique(self, c):
        assert count_ribbon_partitions(slice_points(3, c), a=3) == 1

    def test_a5_two_partitions(self):
        pts = enumerate_points(BoxSlice(5, 2, 2))
        assert count_ribbon_partitions(pts, a=5) == 2
        sols = list(iter_ribbon_partitions(pts, a=5))
        assert all(is_ribbon(b) for s in sols for b in s)
        assert sols[0] != sols[1]

    def test_deterministic(self):
        pts = slice_points(5, 7)
        assert ribbon_partition_search(pts, a=5) == ribbon_partition_search(list(reversed(pts)), a=5)

    def test_no_partition(self):
        assert ribbon_partition_search([(1, 0), (0, 1), (3, 0)], a=3) is None

    def test_timeout(self):
        with pytest.raises(SearchTimeout):
            count_ribbon_partitions(slice_points(5, 6), budget=5, a=5)


class TestIdentities:
    def test_rotated_box_examples(self):
        J = unique_statistic_a3()
        assert str(rotated_box_sum(J, 7, 0)) == "1 + q^2 + q^4"
        assert str(rotated_box_sum(J, 7, 1)) == "q^5 + q^6 + q^7"
        assert rotated_box_sum(J, 1, 1) == q_int(3).shift(-1)
        assert box_identity_rhs(3, 1, 1) == q_int(3).shift(-1)

    @pytest.mark.parametrize("a", [3, 4, 5])
    def test_vertex_zero_is_independent_of_b(self, a):
        J = build_johnson_via_greedy(a)
        sums = {rotated_box_sum(J, b, 0) for b in _coprime(a, 3 * a)[:3]}
        assert len(sums) == 1

    @pytest.mark.parametrize("b", [-5, -1, 1, 2, 4, 5, 7])
    def test_box_identities_any_b(self, b):
        J = unique_statistic_a3()
        for i in range(3):
            assert verify_box_identities(J, b, i)

    def test_brion_example(self):
        J = unique_statistic_a3()
        terms = brion_terms(J, 7)
        assert [str(n) for n, _ in terms] == ["1 + q^2 + q^4", "q^5 + q^6 + q^7", "q^8 + q^10 + q^12"]
        assert [ds for _, ds in terms] == [[1, 2], [-1, 1], [-2, -1]]
        assert verify_brion(J, 7) and verify_brion(J, 1)

    def test_brion_detects_wrong_statistic(self):
        wrong = JohnsonStatistic(3, {(0, 0): 0, (1, 1): 3, (2, 2): 4})
        assert not verify_brion(wrong, 7)
        assert not verify_catalan_property(wrong, 7)

    def test_lemma_examples(self):
        assert lemma_pochhammer_identity(3, 0, 8)
        assert all(lemma_pochhammer_identity(2, i, m) for i in range(2) for m in range(-5, 6))


class TestColumnStatistic:
    def test_a3(self):
        assert column_statistic(3) == unique_statistic_a3()

    @pytest.mark.parametrize("a", range(2, 8))
    def test_box_identity(self, a):
        J = column_statistic(a)
        expected = LaurentPoly.from_exponents([0])
        for k in range(2, a):
            expected = expected * q_int(a).substitute_power(k)
        assert LaurentPoly.from_exponents(J.table.values()) == expected

    def test_heights_in_range(self):
        for a in range(3, 7):
            J = build_johnson_via_greedy(a)
            top = a * (a - 1) ** 2 // 2
            assert all(0 <= j <= tilted_height(p) <= top for p, j in J.table.items())
