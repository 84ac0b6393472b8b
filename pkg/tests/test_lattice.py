import itertools
import math
import re
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import brute_delta, brute_parallelepiped, small_simplices, solve_row
from ehrhart_roots.errors import ArgumentError, BudgetExceededError, InvalidSimplexError
from ehrhart_roots.lattice import (
    DeltaVector,
    LatticeSimplex,
    count_dilate_points,
    count_interior_dilate_points,
    delta_vector,
    enumerate_parallelepiped,
    family_simplex,
    normalized_volume,
    pyramid_lift,
    theorem_simplex,
)


def standard_simplex(d):
    return LatticeSimplex([[0] * d] + [[int(i == j) for j in range(d)] for i in range(d)])


def ehrhart_value(delta, n):
    d = len(delta) - 1
    return sum(x * math.comb(n + d - i, d) for i, x in enumerate(delta))


class TestConstruction:
    def test_rejects_affinely_dependent(self):
        with pytest.raises(InvalidSimplexError):
            LatticeSimplex([[0, 0], [1, 1], [2, 2]])

    def test_rejects_non_integer(self):
        with pytest.raises(InvalidSimplexError):
            LatticeSimplex([[0], [0.5]])

    def test_rejects_ragged(self):
        with pytest.raises(InvalidSimplexError):
            LatticeSimplex([[0, 0], [1], [0, 1]])

    def test_higher_ambient_accepted_but_not_enumerated(self):
        s = LatticeSimplex([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
        assert s.dim == 2 and s.ambient_dim == 3
        with pytest.raises(InvalidSimplexError):
            delta_vector(s)
        with pytest.raises(InvalidSimplexError):
            normalized_volume(s)

    def test_json_roundtrip(self):
        s = family_simplex(3, 5)
        assert LatticeSimplex.from_json(s.to_json()) == s

    def test_json_malformed(self):
        with pytest.raises(InvalidSimplexError):
            LatticeSimplex.from_json('{"verts": []}')

    def test_delta_vector_invariants_enforced(self):
        with pytest.raises(ArgumentError):
            DeltaVector([2, 0])
        with pytest.raises(ArgumentError):
            DeltaVector([1, -1, 0])
        with pytest.raises(ArgumentError):
            DeltaVector([1, 0, 1])


class TestNormalizedVolume:
    def test_unimodular(self):
        assert normalized_volume(standard_simplex(4)) == 1

    def test_family(self):
        assert normalized_volume(family_simplex(9, 15)) == 10

    def test_segment(self):
        assert normalized_volume(LatticeSimplex([[0], [5]])) == 5


class TestDeltaVector:
    def test_standard(self):
        assert delta_vector(standard_simplex(3)).entries == (1, 0, 0, 0)

    def test_family_9_15(self):
        dv = delta_vector(family_simplex(9, 15))
        assert dv[0] == 1 and dv[8] == 9
        assert sum(dv) == 10

    def test_segment(self):
        assert delta_vector(LatticeSimplex([[0], [2]])).entries == (1, 1)

    def test_small_triangle_against_box_scan(self):
        s = LatticeSimplex([[0, 0], [1, 0], [1, 2]])
        assert brute_delta(s) == [1, 1, 0]
        assert delta_vector(s).entries == (1, 1, 0)

    def test_family_2_5(self):
        assert delta_vector(family_simplex(2, 5)).entries == (1, 0, 0, 2, 0, 0)

    def test_budget(self):
        s = LatticeSimplex([[0], [50]])
        with pytest.raises(BudgetExceededError):
            delta_vector(s, budget=49)
        assert delta_vector(s, budget=50).volume == 50

    def test_corpus_against_box_scan(self, corpus_simplex):
        assert list(delta_vector(corpus_simplex).entries) == brute_delta(corpus_simplex)

    @settings(max_examples=60, deadline=None)
    @given(small_simplices(max_volume=60))
    def test_random_against_box_scan(self, s):
        assert list(delta_vector(s).entries) == brute_delta(s)

    def test_vertex_permutation_invariance(self, corpus_simplex):
        ref = delta_vector(corpus_simplex)
        for perm in itertools.islice(itertools.permutations(corpus_simplex.vertices), 8):
            assert delta_vector(LatticeSimplex(perm)) == ref


class TestParallelepiped:
    def test_unimodular_only_origin(self):
        pts = enumerate_parallelepiped(standard_simplex(3))
        assert len(pts) == 1
        assert pts[0].coords == (0, 0, 0, 0) and pts[0].degree == 0

    def test_segment_three(self):
        pts = enumerate_parallelepiped(LatticeSimplex([[0], [3]]))
        assert [p.degree for p in pts] == [0, 1, 1]
        assert [p.coords for p in pts] == [(0, 0), (1, 1), (2, 1)]

    @pytest.mark.parametrize("m,d", [(1, 3), (4, 5), (9, 15)])
    def test_family_witness_points(self, m, d):
        c = (d - 1) // 2
        coords = {p.coords for p in enumerate_parallelepiped(family_simplex(m, d))}
        for j in range(1, m + 1):
            assert tuple([1] * c + [j] * (c + 1) + [c + 1]) in coords

    def test_invariants(self, corpus_simplex):
        s = corpus_simplex
        pts = enumerate_parallelepiped(s)
        m = s.homogenized()
        assert len(pts) == normalized_volume(s)
        assert len({p.coords for p in pts}) == len(pts)
        for p in pts:
            assert all(0 <= r < 1 for r in p.barycentric)
            rebuilt = [sum(r * row[j] for r, row in zip(p.barycentric, m)) for j in range(len(m))]
            assert rebuilt == list(p.coords)
            assert p.degree == sum(p.barycentric) == p.coords[-1]
            assert 0 <= p.degree <= s.dim
        assert pts == sorted(pts, key=lambda p: (p.degree, p.coords))

    def test_matches_box_scan_exactly(self, corpus_simplex):
        got = [p.coords for p in enumerate_parallelepiped(corpus_simplex)]
        assert got == brute_parallelepiped(corpus_simplex)


class TestFamily:
    def test_m1_d3(self):
        assert set(family_simplex(1, 3).vertices) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)}

    def test_last_row(self):
        s = family_simplex(9, 15)
        assert s.vertices[-1] == tuple([1] * 7 + [9] * 7 + [10])

    @pytest.mark.parametrize("d", [1, 2, 4, 6])
    def test_bad_dimension(self, d):
        with pytest.raises(ArgumentError):
            family_simplex(2, d)

    def test_bad_m(self):
        with pytest.raises(ArgumentError):
            family_simplex(0, 3)


class TestPyramid:
    def test_segment(self):
        lifted = pyramid_lift(LatticeSimplex([[0], [2]]))
        assert set(lifted.vertices) == {(0, 0), (2, 0), (0, 1)}
        assert brute_delta(lifted) == [1, 1, 0]
        assert delta_vector(lifted).entries == (1, 1, 0)

    def test_unimodular(self):
        assert delta_vector(pyramid_lift(standard_simplex(2))).entries == (1, 0, 0, 0)

    def test_family_lifted_twice(self):
        s = pyramid_lift(pyramid_lift(family_simplex(3, 3)))
        assert delta_vector(s).entries == (1, 0, 3, 0, 0, 0)

    def test_corpus_appends_zero(self, corpus_simplex):
        before = delta_vector(corpus_simplex).entries
        assert delta_vector(pyramid_lift(corpus_simplex)).entries == before + (0,)

    @settings(max_examples=40, deadline=None)
    @given(small_simplices())
    def test_random_appends_zero(self, s):
        assert delta_vector(pyramid_lift(s)).entries == delta_vector(s).entries + (0,)


class TestTheoremSimplex:
    def test_9_15_8_is_family(self):
        assert theorem_simplex(9, 15, 8) == family_simplex(9, 15)

    def test_k1(self):
        assert delta_vector(theorem_simplex(5, 4, 1)).entries == (1, 5, 0, 0, 0)

    def test_k2(self):
        assert delta_vector(theorem_simplex(2, 4, 2)).entries == (1, 0, 2, 0, 0)

    @pytest.mark.parametrize(
        "m,d,k,fragment",
        [(0, 4, 1, "m >= 1"), (1, 1, 1, "d >= 2"), (1, 4, 3, "floor((d+1)/2)"), (1, 4, 0, "1 <= k")],
    )
    def test_constraint_messages(self, m, d, k, fragment):
        with pytest.raises(ArgumentError, match=re.escape(fragment)):
            theorem_simplex(m, d, k)

    def test_grid(self):
        for m in range(1, 11):
            for d in range(2, 10):
                for k in range(1, (d + 1) // 2 + 1):
                    s = theorem_simplex(m, d, k)
                    dv = delta_vector(s)
                    assert s.dim == d
                    assert [i for i, x in enumerate(dv) if x] == [0, k]
                    assert dv[k] == m


class TestDilates:
    def test_standard(self):
        assert count_dilate_points(standard_simplex(2), 2) == 6

    def test_family_1_3(self):
        # delta = (1, 0, 1, 0): i(1) = binom(4, 3) + binom(2, 3) = 4, the vertices alone
        s = family_simplex(1, 3)
        assert count_dilate_points(s, 1) == ehrhart_value([1, 0, 1, 0], 1) == 4

    def test_zero_dilate(self, corpus_simplex):
        assert count_dilate_points(corpus_simplex, 0) == 1
        assert count_interior_dilate_points(corpus_simplex, 0) == 0

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            count_dilate_points(standard_simplex(3), 10, budget=20)

    def test_negative_n(self):
        with pytest.raises(ArgumentError):
            count_dilate_points(standard_simplex(2), -1)

    def test_naive_box_on_small_case(self):
        s = LatticeSimplex([[0, 0], [3, 1], [1, 3]])
        m = s.homogenized()
        for n in range(4):
            naive = 0
            for x in itertools.product(range(0, 3 * n + 1), repeat=2):
                lam = solve_row(m, list(x) + [n])
                naive += all(r >= 0 for r in lam)
            assert count_dilate_points(s, n) == naive

    def test_delta_facts(self, corpus_simplex):
        s = corpus_simplex
        dv = delta_vector(s)
        assert dv[0] == 1
        assert dv[1] == count_dilate_points(s, 1) - (s.dim + 1)
        assert dv[-1] == count_interior_dilate_points(s, 1)
        assert dv[1] >= dv[-1]

    @settings(max_examples=40, deadline=None)
    @given(small_simplices(max_dim=3, coord=2, max_volume=30))
    def test_ehrhart_and_reciprocity(self, s):
        dv = list(delta_vector(s).entries)
        d = s.dim
        for n in range(1, 5):
            assert count_dilate_points(s, n) == ehrhart_value(dv, n)
            # (-1)^d i(-n), with binom extended as a polynomial in n
            poly_at = sum(
                x * Fraction(math.prod(-n + d - i - t for t in range(d)), math.factorial(d))
                for i, x in enumerate(dv)
            )
            assert count_interior_dilate_points(s, n) == (-1) ** d * poly_at
