import math

import pytest

from kfacets import lb_planar_basic, lb_planar_improved, lb_planar_improved_closed, lb_simplicial, verify_bounds
from kfacets.bounds import binom, simplicial_split
from kfacets.conjecture import random_point_set
from kfacets.constructions import gen_tight_planar_extended, gen_tight_simplicial


@pytest.mark.parametrize("k, value", [(0, 3), (1, 9), (4, 45)])
def test_planar_basic(k, value):
    assert lb_planar_basic(k) == value


@pytest.mark.parametrize("n, k, value", [(12, 3, 30), (12, 4, 48), (24, 9, 174), (24, 8, 138)])
def test_planar_improved(n, k, value):
    assert lb_planar_improved(n, k) == value


@pytest.mark.parametrize("n", range(3, 61, 3))
def test_closed_form_matches_sum(n):
    for k in range(n):
        assert lb_planar_improved_closed(n, k) == lb_planar_improved(n, k)


@pytest.mark.parametrize("n", range(3, 40))
def test_improved_reduces_below_threshold(n):
    for k in range(n // 3):
        assert lb_planar_improved(n, k) == lb_planar_basic(k)


def test_simplicial_examples():
    assert lb_simplicial(10, 2, 0) == 3
    assert lb_simplicial(12, 3, 2) == 40
    assert lb_simplicial(12, 3, 3) is None
    for n in range(3, 30):
        for k in range(n // 3):
            assert lb_simplicial(n, 2, k) == lb_planar_basic(k)


def test_binomial_is_zero_outside_range():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(5, 2) == 10


@pytest.mark.parametrize("d", range(0, 7))
def test_split_identity(d):
    for k in range(31):
        total = sum(simplicial_split(d, k, j) for j in range(d + 1))
        assert total == (d + 1) * math.comb(k + d, d)


def test_report_on_extended_twelve():
    report = verify_bounds(gen_tight_planar_extended(12).points, 4)
    assert [r.counted for r in report.rows] == [3, 9, 18, 30, 48]
    assert all(r.tight and r.satisfied for r in report.rows)
    assert [r.optimal for r in report.rows] == [True, True, True, True, False]


def test_report_on_convex_four(convex4):
    row = verify_bounds(convex4, 0).rows[0]
    assert row.counted == 4 and row.bounds["planar_basic"] == 3
    assert row.satisfied and not row.tight


def test_report_on_ray_config():
    report = verify_bounds(gen_tight_simplicial(3, 3).points, 2)
    assert [r.counted for r in report.rows] == [4, 16, 40]
    assert all(r.tight for r in report.rows)
    assert all(set(r.bounds) == {"simplicial"} for r in report.rows)


def test_report_marks_inapplicable_bounds():
    S = random_point_set(9, 2, 4)
    report = verify_bounds(S, 6)
    # k < floor((n-2)/2) = 3 for the planar bounds, k < 3 for the simplicial one
    assert report.rows[2].bounds["planar_basic"] is not None
    assert report.rows[3].bounds["planar_basic"] is None
    assert report.rows[3].bounds["simplicial"] is None
    assert report.rows[6].satisfied and not report.rows[6].tight


def test_report_rejects_bad_kmax(triangle):
    with pytest.raises(ValueError):
        verify_bounds(triangle, 5)
