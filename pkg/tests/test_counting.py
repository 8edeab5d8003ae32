from fractions import Fraction
import math

import pytest
from hypothesis import given, settings, strategies as st

from kfacets import (
    PointSet,
    adjacency_profile,
    adjacent_leq_k,
    convex_quadrilaterals,
    count_facets,
    crossing_identity,
    leq_k_facets,
    sweep_count_2d,
)
from kfacets.conjecture import random_point_set
from kfacets.constructions import gen_tight_planar_basic, gen_tight_planar_extended, gen_tight_simplicial
from kfacets.counting import FacetVector, OrientedFacet
from kfacets.exact import DegenerateError, convex_hull_2d

import oracles


def test_triangle_histogram(triangle):
    fv = count_facets(triangle)
    assert fv.e == (3, 3)
    assert fv.E == (3, 6)


def test_convex_quadrilateral_histogram(convex4):
    fv = count_facets(convex4)
    assert fv.e == (4, 4, 4)
    assert fv.E == (4, 8, 12)


def test_ray_config_3d_prefix():
    fv = count_facets(gen_tight_simplicial(3, 3).points)
    assert fv.E[:3] == (4, 16, 40)
    assert fv.total == 2 * math.comb(12, 3) == 440


@pytest.mark.parametrize("d, n, seed", [(2, 9, 1), (2, 12, 2), (3, 8, 3), (3, 9, 4), (4, 8, 5)])
def test_histogram_matches_brute_force_oracle(d, n, seed):
    S = random_point_set(n, d, seed)
    assert list(count_facets(S).e) == oracles.facet_histogram(S.points)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(2, 4), st.integers(0, 6))
def test_histogram_invariants(seed, d, extra):
    S = random_point_set(d + 1 + extra, d, seed)
    fv = count_facets(S)
    assert fv.check_invariants() == []
    assert sum(fv.e) == 2 * math.comb(S.n, d)
    assert fv.e == fv.e[::-1]
    assert all(a <= b for a, b in zip(fv.E, fv.E[1:]))
    assert fv.E[-1] == 2 * math.comb(S.n, d)


@pytest.mark.parametrize("seed", range(5))
def test_zero_edges_are_hull_edges(seed):
    S = random_point_set(15, 2, seed)
    assert count_facets(S).e[0] == len(convex_hull_2d(S))


def test_threads_do_not_change_the_histogram(monkeypatch):
    S = random_point_set(30, 2, 11)
    one = count_facets(S, workers=1)
    assert count_facets(S, workers=4) == one
    monkeypatch.setenv("KFACETS_THREADS", "3")
    assert count_facets(S) == one
    T = random_point_set(10, 3, 11)
    assert count_facets(T, workers=3) == count_facets(T, workers=1)


def test_degeneracy_aborts_counting():
    S = PointSet([(0, 0), (1, 1), (2, 2), (5, 0)])
    with pytest.raises(DegenerateError) as info:
        count_facets(S)
    assert info.value.tuple == (0, 1, 2)
    with pytest.raises(DegenerateError):
        sweep_count_2d(S)
    with pytest.raises(DegenerateError):
        count_facets(PointSet([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]))


def test_sweep_small_examples(triangle, convex4):
    assert sweep_count_2d(triangle).e == (3, 3)
    assert sweep_count_2d(convex4).e == (4, 4, 4)


def test_sweep_on_fifty_rational_points():
    base = random_point_set(50, 2, 8)
    S = PointSet([(Fraction(x, 7), Fraction(y, 3)) for x, y in base.points])
    assert sweep_count_2d(S) == count_facets(S)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(3, 40))
def test_sweep_equals_enumeration(seed, n):
    S = random_point_set(n, 2, seed)
    assert sweep_count_2d(S) == count_facets(S)


def test_sweep_on_constructions():
    for config in (gen_tight_planar_basic(30), gen_tight_planar_extended(24)):
        assert sweep_count_2d(config.points) == count_facets(config.points)


def test_leq_k_examples(triangle, convex4):
    zero = leq_k_facets(triangle, 0)
    assert len(zero) == 3
    for f in zero:
        assert f.k == 0
    assert len(leq_k_facets(convex4, 1)) == 8
    assert len(leq_k_facets(gen_tight_planar_extended(12).points, 4)) == 48


def test_leq_k_sizes_match_prefix_sums():
    S = random_point_set(14, 2, 21)
    fv = count_facets(S)
    for k in range(S.n - 1):
        assert len(leq_k_facets(S, k)) == fv.E[k]
    T = random_point_set(9, 3, 21)
    fv = count_facets(T)
    for k in range(T.n - 2):
        assert len(leq_k_facets(T, k)) == fv.E[k]


def test_oriented_facet_identity():
    a = OrientedFacet((0, 1), 1, 3)
    assert a == OrientedFacet((0, 1), 1, 5)
    assert a != OrientedFacet((0, 1), -1, 3)
    assert a.reversed(10, 2) == OrientedFacet((0, 1), -1)
    assert a.reversed(10, 2).k == 5


def test_adjacent_examples(triangle):
    assert adjacent_leq_k(triangle, {0, 1, 2}, 0) == leq_k_facets(triangle, 0)
    assert adjacent_leq_k(random_point_set(10, 2, 1), set(), 3) == frozenset()


@pytest.mark.parametrize("k", range(0, 9))
def test_adjacent_to_hull_triangle_of_optimal_set(k):
    S = gen_tight_planar_basic(30).points
    T = convex_hull_2d(S)
    assert len(adjacent_leq_k(S, T, k)) == 6 * k + 3


def test_profile_examples(triangle):
    prof = adjacency_profile(triangle, (0, 1, 2), 1)
    assert prof.counts == (0, 0, 6)
    config = gen_tight_simplicial(3, 3)
    apices = tuple(config.members(c)[0] for c in range(4))
    prof = adjacency_profile(config.points, apices, 0)
    assert prof.total == 4


@pytest.mark.parametrize("seed, d", [(1, 2), (2, 2), (3, 3)])
def test_profile_partitions(seed, d):
    S = random_point_set(9, d, seed)
    fv = count_facets(S)
    for k in range(S.n - d + 1):
        assert adjacency_profile(S, tuple(range(d + 1)), k).total == fv.E[k]
    assert adjacency_profile(S, tuple(range(d + 1)), S.n - d).total == 2 * math.comb(S.n, d)


def test_convex_quadrilateral_examples(convex4, tri_plus_inner, convex5):
    assert convex_quadrilaterals(convex4) == 1
    assert convex_quadrilaterals(tri_plus_inner) == 0
    assert convex_quadrilaterals(convex5) == 5


@pytest.mark.parametrize("seed", range(6))
def test_convex_quadrilaterals_count_crossings(seed):
    S = random_point_set(10, 2, seed)
    assert convex_quadrilaterals(S) == oracles.crossing_number(S.points)


def test_crossing_identity_examples(convex4, convex5, tri_plus_inner):
    res = crossing_identity(convex4)
    assert (res.lhs, res.rhs, res.equal) == (1, 1, True)
    res = crossing_identity(convex5)
    assert (res.lhs, res.rhs, res.equal) == (5, 5, True)
    res = crossing_identity(tri_plus_inner)
    assert (res.lhs, res.rhs, res.equal) == (0, 0, True)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(4, 13))
def test_crossing_identity_holds(seed, n):
    res = crossing_identity(random_point_set(n, 2, seed))
    assert res.equal
    assert isinstance(res.rhs, Fraction)


def test_facet_vector_helpers():
    fv = FacetVector(4, 2, (4, 4, 4))
    assert fv.E_at(-1) == 0
    assert fv.E_at(10) == 12
    assert fv.e_at(5) == 0
