"""Counting k-facets: exhaustive enumeration, the planar rotational sweep,
(<=k)-facet extraction, adjacency to a marked simplex, and convex
quadrilaterals together with the crossing-number identity they satisfy."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
import math

import numpy as np

from .exact import DegenerateError, DimensionError, GeometryError, _zero_outside, orientation


@dataclass(frozen=True)
class OrientedFacet:
    """A d-subset with an orientation; equality ignores the cached k-value.

    ``sign`` is relative to the sorted index order: +1 means the positive
    side is where orientation(indices..., p) > 0.
    """

    indices: tuple
    sign: int
    k: int = field(default=-1, compare=False)

    def reversed(self, n, d):
        return OrientedFacet(self.indices, -self.sign, n - d - self.k)

    def relabel(self, mapping):
        """Map indices through an order-preserving index map."""
        return OrientedFacet(tuple(mapping[i] for i in self.indices), self.sign, self.k)


@dataclass(frozen=True)
class FacetVector:
    """Histogram e_0..e_{n-d} of oriented k-facets and its prefix sums."""

    n: int
    d: int
    e: tuple

    @property
    def E(self):
        out, run = [], 0
        for x in self.e:
            run += x
            out.append(run)
        return tuple(out)

    def E_at(self, k):
        if k < 0:
            return 0
        return self.E[min(k, len(self.e) - 1)]

    def e_at(self, k):
        return self.e[k] if 0 <= k < len(self.e) else 0

    @property
    def total(self):
        return sum(self.e)

    def check_invariants(self):
        """List of broken histogram invariants (empty when all hold)."""
        problems = []
        if self.total != 2 * math.comb(self.n, self.d):
            problems.append(f"sum of e_k is {self.total}, expected {2 * math.comb(self.n, self.d)}")
        if self.e != self.e[::-1]:
            problems.append("e_k != e_(n-d-k)")
        return problems


def _workers():
    import os
    try:
        return max(1, int(os.environ.get("KFACETS_THREADS", "1")))
    except ValueError:
        return 1


def _count_range(S, first_indices):
    """Histogram contribution of all facets whose smallest index is in the range."""
    n, d = S.n, S.dim
    hist = np.zeros(n - d + 1, dtype=np.int64)
    if d == 2:
        for i in first_indices:
            block = S.planar_sign_block(i)[i + 1:]
            if block.shape[0] == 0:
                continue
            zeros = (block == 0).sum(axis=1)
            if np.any(zeros != 2):
                j = int(np.flatnonzero(zeros != 2)[0]) + i + 1
                bad = _zero_outside(S.planar_sign_block(i)[j], (i, j))
                raise DegenerateError(tuple(sorted((i, j, bad))))
            pos = (block > 0).sum(axis=1)
            np.add.at(hist, pos, 1)
            np.add.at(hist, n - d - pos, 1)
        return hist
    for i in first_indices:
        for rest in combinations(range(i + 1, n), d - 1):
            facet = (i,) + rest
            signs = S.signs(facet)
            bad = _zero_outside(signs, facet)
            if bad is not None:
                raise DegenerateError(tuple(sorted(facet + (bad,))))
            pos = int((signs > 0).sum())
            hist[pos] += 1
            hist[n - d - pos] += 1
    return hist


def count_facets(S, workers=None):
    """Histogram of oriented k-facets by exhaustive enumeration of d-subsets.

    The enumeration can be split over threads by first index; partial
    histograms are summed, so the result does not depend on the split.
    """
    n, d = S.n, S.dim
    if n < d:
        raise GeometryError(f"need at least {d} points")
    workers = workers or _workers()
    starts = range(n - d + 1)
    if workers <= 1:
        hist = _count_range(S, starts)
    else:
        parts = [starts[w::workers] for w in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hist = sum(pool.map(lambda part: _count_range(S, part), parts))
    return FacetVector(n, d, tuple(int(x) for x in hist))


def _half(v):
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def sweep_count_2d(S):
    """Planar k-edge histogram by rotating a ray around each point.

    Around p the other points are sorted by angle; a second pointer tracks
    the end of the open half-turn to the left of the current ray, so the
    left count of every directed edge p->q falls out in linear time.
    """
    if S.dim != 2:
        raise DimensionError("sweep_count_2d needs planar points")
    n = S.n
    pts = S.ints
    hist = [0] * (n - 1)
    for p in range(n):
        px, py = pts[p]
        vecs = [((pts[q][0] - px, pts[q][1] - py), q) for q in range(n) if q != p]

        def compare(a, b, p=p):
            ha, hb = _half(a[0]), _half(b[0])
            if ha != hb:
                return ha - hb
            c = a[0][0] * b[0][1] - a[0][1] * b[0][0]
            if c == 0:
                raise DegenerateError(tuple(sorted((p, a[1], b[1]))))
            return -1 if c > 0 else 1

        vecs.sort(key=cmp_to_key(compare))
        m = len(vecs)
        j = 0
        for i in range(m):
            j = max(j, i + 1)
            vi = vecs[i][0]
            while j < i + m:
                vj = vecs[j % m][0]
                c = vi[0] * vj[1] - vi[1] * vj[0]
                if c > 0:
                    j += 1
                    continue
                if c == 0:
                    raise DegenerateError(tuple(sorted((p, vecs[i][1], vecs[j % m][1]))))
                break
            hist[j - i - 1] += 1
    return FacetVector(n, 2, tuple(hist))


def oriented_facets(S):
    """Every oriented facet of S with its k-value, both orientations."""
    n, d = S.n, S.dim
    for facet, signs in S.facet_signs():
        bad = _zero_outside(signs, facet)
        if bad is not None:
            raise DegenerateError(tuple(sorted(facet + (bad,))))
        pos = int((signs > 0).sum())
        yield OrientedFacet(facet, 1, pos)
        yield OrientedFacet(facet, -1, n - d - pos)


def leq_k_facets(S, k):
    if not 0 <= k <= S.n - S.dim:
        raise GeometryError(f"k must lie in [0, {S.n - S.dim}]")
    return frozenset(f for f in oriented_facets(S) if f.k <= k)


def adjacent_leq_k(S, T, k):
    """(<=k)-facets with at least one vertex in T."""
    T = set(T)
    if not T:
        return frozenset()
    if not T <= set(range(S.n)):
        raise GeometryError("T must be a set of point indices")
    return frozenset(f for f in leq_k_facets(S, k) if T.intersection(f.indices))


@dataclass(frozen=True)
class AdjacencyProfile:
    """counts[j] = number of (<=k)-facets sharing exactly j vertices with T."""

    k: int
    T: tuple
    counts: tuple

    @property
    def total(self):
        return sum(self.counts)


def adjacency_profile(S, T, k):
    T = tuple(T)
    if len(T) != S.dim + 1 or len(set(T)) != len(T):
        raise GeometryError(f"T must list {S.dim + 1} distinct indices")
    if orientation([S.points[i] for i in T]) == 0:
        raise DegenerateError(T, "T does not span a simplex")
    marked = set(T)
    counts = [0] * (S.dim + 1)
    for f in leq_k_facets(S, k):
        counts[len(marked.intersection(f.indices))] += 1
    return AdjacencyProfile(k, T, tuple(counts))


def _orientation_table(S):
    n = S.n
    table = np.zeros((n, n, n), dtype=np.int8)
    for i in range(n):
        table[i] = S.planar_sign_block(i)
    return table


def convex_quadrilaterals(S):
    """Number of 4-subsets in convex position."""
    if S.dim != 2:
        raise DimensionError("convex_quadrilaterals needs planar points")
    n = S.n
    if n < 4:
        return 0
    o = _orientation_table(S)

    def inside(p, a, b, c):
        s = o[a, b, c]
        return o[a, b, p] == s and o[b, c, p] == s and o[c, a, p] == s

    count = 0
    for a, b, c, d in combinations(range(n), 4):
        for t in ((a, b, c), (a, b, d), (a, c, d), (b, c, d)):
            if o[t] == 0:
                raise DegenerateError(t)
        if not (inside(d, a, b, c) or inside(c, a, b, d) or inside(b, a, c, d) or inside(a, b, c, d)):
            count += 1
    return count


@dataclass(frozen=True)
class CrossingIdentity:
    lhs: int
    rhs: Fraction
    equal: bool


def crossing_rhs(n, fv):
    """Sum over k < (n-2)/2 of (n-2k-3) E_k, minus 3/4 C(n,3), plus the odd-n term."""
    top = -(-(n - 2) // 2) - 1
    total = Fraction(sum((n - 2 * k - 3) * fv.E_at(k) for k in range(top + 1)))
    total -= Fraction(3, 4) * math.comb(n, 3)
    if n % 2:
        total += Fraction(fv.E_at((n - 3) // 2), 4)
    return total


def crossing_identity(S, fv=None):
    """Compare the convex-quadrilateral count with its (<=k)-edge expression."""
    if S.dim != 2:
        raise DimensionError("crossing_identity needs planar points")
    if S.n < 4:
        raise GeometryError("need at least 4 points")
    fv = fv or count_facets(S)
    lhs = convex_quadrilaterals(S)
    rhs = crossing_rhs(S.n, fv)
    return CrossingIdentity(lhs, rhs, lhs == rhs)
