import math
from fractions import Fraction

import pytest

from mpenergy.checks import (
    EdgeSubsetSpec,
    check_cond1,
    check_cond2,
    check_lembound,
    check_monotonicity,
    check_rey,
    check_subset_deletion,
    radius_gain,
    second_eigenvalue_after,
    subset_condition,
)
from mpenergy.graphs import EdgeLocus, PartitionSpec


def unit_locus(parts, i):
    spec = PartitionSpec(parts)
    return spec, EdgeLocus.between_sizes(spec, 1, i)


class TestSubsetDeletion:
    def test_single_edge_between_large_parts(self):
        spec = PartitionSpec((6, 6))
        s = EdgeSubsetSpec(spec, [(0, 6)])
        # untouched parts impose nothing; touched ones need 6 >= 2
        assert s.u_counts == (1, 1)
        assert check_subset_deletion(spec, s)

    def test_untouched_part_is_vacuous(self):
        spec = PartitionSpec((4, 4, 1))
        s = EdgeSubsetSpec(spec, [(0, 4)])
        assert s.u_counts == (1, 1, 0)
        assert check_subset_deletion(spec, s)

    def test_two_unit_parts_fail(self):
        spec = PartitionSpec((4, 1, 1))
        s = EdgeSubsetSpec(spec, [(4, 5)])
        assert not subset_condition(s)
        assert not check_subset_deletion(spec, s)

    def test_star_subset(self):
        spec = PartitionSpec((8, 8))
        s = EdgeSubsetSpec(spec, [(0, 8), (0, 9), (0, 10)])
        # H = K_{1,3}, radius sqrt 3; the centre's part needs 8 >= 2 sqrt 3
        assert s.u_counts == (1, 3)
        assert not subset_condition(s)

    def test_rejects_empty_and_non_edges(self):
        spec = PartitionSpec((2, 2))
        with pytest.raises(ValueError):
            EdgeSubsetSpec(spec, [])
        with pytest.raises(ValueError):
            EdgeSubsetSpec(spec, [(0, 1)])

    def test_rejects_foreign_subset(self):
        s = EdgeSubsetSpec(PartitionSpec((3, 3)), [(0, 3)])
        with pytest.raises(ValueError):
            check_subset_deletion(PartitionSpec((2, 2)), s)


class TestRey:
    def test_k1411_exact_second_eigenvalue(self):
        spec, loc = unit_locus((1, 4, 1, 1), 4)
        assert abs(second_eigenvalue_after(spec, loc) - (math.sqrt(2) - 1)) <= 1e-9
        assert check_rey(spec, loc, 0.4)
        assert not check_rey(spec, loc, 0.414 + 1e-3)

    def test_needs_second_eigenvalue_above_a(self):
        spec, loc = unit_locus((1, 2, 1, 1), 2)
        assert second_eigenvalue_after(spec, loc) < 0.36
        assert not check_rey(spec, loc, 0.36)

    @pytest.mark.parametrize("a", [0.0, 1.0, 1.5, -0.2])
    def test_rejects_a_outside_unit_interval(self, a):
        spec, loc = unit_locus((1, 4, 2), 4)
        with pytest.raises(ValueError):
            check_rey(spec, loc, a)


class TestConditions:
    def test_cond1_holds(self):
        spec, loc = unit_locus((1, 8, 1, 1, 1), 8)
        assert check_cond1(spec, loc, Fraction(11, 30))

    def test_cond1_at_n_equal_i_plus_3(self):
        # 13/48 < 0.4 and f = 3/5 > 0; lambda_2(G - e) is about 0.4297
        spec, loc = unit_locus((1, 6, 1, 1), 6)
        assert check_cond1(spec, loc, Fraction(2, 5))

    def test_cond1_gate(self):
        # (2i+1)/(i(i+2)) = 5/8 for i = 2
        spec, loc = unit_locus((1, 2, 1, 1, 1, 1, 1, 1), 2)
        assert not check_cond1(spec, loc, Fraction(1, 2))

    def test_cond2_many_unit_parts(self):
        spec, loc = unit_locus((1, 3) + (1,) * 7, 3)
        assert check_cond2(spec, loc, 0.357)

    def test_cond2_small_graph_fails(self):
        spec, loc = unit_locus((1, 4, 2), 4)
        assert not check_cond2(spec, loc, 0.357)

    @pytest.mark.parametrize("parts,sizes", [((1, 5), (1, 5)), ((2, 3, 4), (2, 3)), ((1, 1, 3), (1, 1))])
    def test_shape_rejected(self, parts, sizes):
        spec = PartitionSpec(parts)
        loc = EdgeLocus.between_sizes(spec, *sizes)
        with pytest.raises(ValueError):
            check_cond1(spec, loc, 0.5)
        with pytest.raises(ValueError):
            check_cond2(spec, loc, 0.5)


class TestLemBound:
    def test_tripartite_product_bound(self):
        assert all(check_lembound(n, i) for n in range(5, 20) for i in range(2, n - 2))

    def test_triangle_is_the_equality_case(self):
        # K_3 has radius 2 = sqrt(2 * 2), so the strict bound fails
        assert not check_lembound(3, 1)

    def test_unit_parts_bound(self):
        assert all(check_lembound(n, i, True) for n in range(7, 20) for i in range(2, n - 4))

    def test_ranges(self):
        with pytest.raises(ValueError):
            check_lembound(10, 6, True)
        with pytest.raises(ValueError):
            check_lembound(10, 1, True)
        with pytest.raises(ValueError):
            check_lembound(5, 4)


class TestMonotonicity:
    def test_k41_to_k32(self):
        spec = PartitionSpec((4, 1))
        assert abs(radius_gain(spec, 0, 1) - (math.sqrt(6) - 2)) <= 1e-12
        assert check_monotonicity(spec, 0, 1)

    def test_gap_one_rejected(self):
        with pytest.raises(ValueError):
            radius_gain(PartitionSpec((3, 2)), 0, 1)

    def test_margin(self):
        spec = PartitionSpec((4, 1))
        assert not check_monotonicity(spec, 0, 1, margin=1.0)
