import math

import pytest

from kfacets import (
    PointSet,
    count_facets,
    gen_tight_planar_basic,
    gen_tight_planar_extended,
    gen_tight_simplicial,
    is_general_position,
    lb_planar_basic,
    lb_planar_improved,
    lb_simplicial,
)
from kfacets.constructions import (
    ChainedConfig,
    check_rotational_symmetry,
    cyclic_map,
    relabel_as_extended,
    verify_construction,
    verify_extended_properties,
    verify_ray_config,
)
from kfacets.exact import convex_layers_2d

import oracles


def test_cyclic_map_has_order_d_plus_one():
    for d in range(2, 6):
        v = tuple(range(1, d + 1))
        w = v
        for _ in range(d + 1):
            w = cyclic_map(w)
        assert w == v
    assert cyclic_map((1, 0)) == (0, 1)
    assert cyclic_map((0, 1)) == (-1, -1)


def test_smallest_basic_config_is_a_triangle():
    config = gen_tight_planar_basic(3)
    assert config.n == 3
    assert count_facets(config.points).E == (3, 6)


@pytest.mark.parametrize("n", [6, 12, 21, 30])
def test_basic_meets_the_bound(n):
    config = gen_tight_planar_basic(n)
    assert is_general_position(config.points)
    E = count_facets(config.points).E
    for k in range(n // 3):
        assert E[k] == lb_planar_basic(k)
    assert verify_construction(config).passed


@pytest.mark.parametrize("d, m", [(3, 3), (3, 4), (4, 2), (2, 4)])
def test_simplicial_meets_the_bound(d, m):
    config = gen_tight_simplicial(d, m)
    n = (d + 1) * m
    E = count_facets(config.points).E
    for k in range(m):
        assert E[k] == lb_simplicial(n, d, k) == (d + 1) * math.comb(k + d, d)
    assert verify_construction(config).passed


def test_ray_config_vertices_match_oracle():
    config = gen_tight_simplicial(3, 2)
    hull = oracles.extreme_points(config.points.points)
    assert hull == {config.members(c)[0] for c in range(4)}


@pytest.mark.parametrize("n", [12, 24])
def test_extended_meets_the_improved_bound(n):
    config = gen_tight_planar_extended(n)
    E = count_facets(config.points).E
    for k in range(5 * n // 12):
        assert E[k] == lb_planar_improved(n, k)
    assert E[5 * n // 12] > lb_planar_improved(n, 5 * n // 12)
    report = verify_construction(config)
    assert report.passed, report.failures()
    assert [c.name for c in report.checks] == [
        "convexity", "hole_between_A_and_B", "lines_in_A_and_B", "lines_in_C",
        "C_inside_inner_B_triangle", "rotational_symmetry",
    ]


@pytest.mark.parametrize("n", [36, 48])
def test_extended_larger_sizes(n):
    E = count_facets(gen_tight_planar_extended(n).points).E
    assert all(E[k] == lb_planar_improved(n, k) for k in range(5 * n // 12))


@pytest.mark.slow
def test_extended_sixty():
    E = count_facets(gen_tight_planar_extended(60).points).E
    assert all(E[k] == lb_planar_improved(60, k) for k in range(25))


def test_improved_bound_exceeds_basic_past_one_third():
    E = count_facets(gen_tight_planar_extended(24).points).E
    assert (E[8], E[9]) == (138, 174)
    assert lb_planar_improved(24, 8) > lb_planar_basic(8)


def test_extended_layers_start_with_triangles():
    layers = convex_layers_2d(gen_tight_planar_extended(24).points)
    assert [len(x) for x in layers[:4]] == [3, 3, 3, 3]


@pytest.mark.parametrize("n", [0, 6, 18, 30])
def test_extended_rejects_sizes_not_divisible_by_twelve(n):
    with pytest.raises(ValueError):
        gen_tight_planar_extended(n)


@pytest.mark.parametrize("n", [0, 4, 10])
def test_basic_rejects_bad_sizes(n):
    with pytest.raises(ValueError):
        gen_tight_planar_basic(n)


def test_simplicial_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gen_tight_simplicial(1, 3)
    with pytest.raises(ValueError):
        gen_tight_simplicial(3, 0)


def _with_point(config, i, p):
    pts = list(config.points.points)
    pts[i] = p
    return ChainedConfig(PointSet(pts, config.d), config.kind, config.chain,
                         config.depth, config.subchain, config.params)


def test_reflected_C_point_breaks_containment():
    config = gen_tight_planar_extended(12)
    i = config.members(0, "C")[0]
    x, y = config.points.points[i]
    report = verify_extended_properties(_with_point(config, i, (-4 * x, -4 * y)))
    assert not report["C_inside_inner_B_triangle"].passed
    assert report["C_inside_inner_B_triangle"].witness == (i,)


def test_basic_relabeled_as_extended_has_no_hole():
    report = verify_extended_properties(relabel_as_extended(gen_tight_planar_basic(12)))
    assert not report.passed
    assert not report["hole_between_A_and_B"].passed


def test_swapped_depths_break_the_ray_config():
    config = gen_tight_simplicial(2, 4)
    a, b = config.members(0)[:2]
    depth = list(config.depth)
    depth[a], depth[b] = depth[b], depth[a]
    bad = ChainedConfig(config.points, config.kind, config.chain, tuple(depth))
    report = verify_ray_config(bad)
    assert report["general_position"].passed
    assert not report["k_equals_depth_sum"].passed


def test_mixed_chains_break_the_distinct_chain_check():
    config = gen_tight_simplicial(2, 4)
    a, b = config.members(0)[0], config.members(1)[0]
    chain = list(config.chain)
    chain[a], chain[b] = chain[b], chain[a]
    bad = ChainedConfig(config.points, config.kind, tuple(chain), config.depth)
    assert not verify_ray_config(bad)["low_facets_use_distinct_chains"].passed


def test_symmetry_flips_orientation_in_odd_dimension():
    assert check_rotational_symmetry(gen_tight_simplicial(3, 2)).passed
    assert check_rotational_symmetry(gen_tight_simplicial(4, 2)).passed


def test_symmetry_check_catches_a_moved_point():
    config = gen_tight_planar_basic(9)
    i = config.members(1)[2]
    x, y = config.points.points[i]
    moved = _with_point(config, i, (x + 3, y - 5))
    assert not check_rotational_symmetry(moved).passed


def test_rotation_permutation_cycles_chains():
    config = gen_tight_planar_extended(12)
    perm = config.rotation_permutation()
    for i in range(config.n):
        assert config.chain[perm[i]] == (config.chain[i] + 1) % 3
        assert config.depth[perm[i]] == config.depth[i]
        assert config.points.points[perm[i]] == cyclic_map(config.points.points[i])
