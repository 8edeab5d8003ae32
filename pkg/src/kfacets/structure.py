"""Half-nets, epsilon-net and centerpoint verification, and the structural
consequences of a planar set having the minimum number of (<=k)-edges."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
import math

import numpy as np

from .bounds import lb_planar_basic
from .counting import adjacent_leq_k, count_facets, leq_k_facets, oriented_facets
from .exact import (
    DegenerateError,
    DimensionError,
    GeometryError,
    _det,
    _zero_outside,
    as_rational,
    convex_hull_2d,
    convex_layers_2d,
    hyperplane,
)


@dataclass(frozen=True)
class Halfspace:
    """{x : normal . x >= offset} when closed, {x : normal . x > offset} when open.

    ``members`` are the indices of the points of S inside it.  ``facet`` and
    ``side`` record the d points and orientation it was derived from, if any.
    """

    normal: tuple
    offset: Fraction
    closed: bool
    members: frozenset
    facet: tuple = None
    side: int = 0

    def contains(self, point):
        value = sum(a * as_rational(x) for a, x in zip(self.normal, point))
        return value >= self.offset if self.closed else value > self.offset


@dataclass(frozen=True)
class SimplicialNet:
    vertices: tuple
    epsilon: Fraction
    iterations: int = 0
    trace: tuple = ()


def _solve(matrix, rhs):
    """Exact solution of a square linear system over the rationals, or None."""
    size = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        for r in range(size):
            if r != c and m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[r][size] / m[r][r] for r in range(size)]


def _closed_witness(S, facet, side, members, include):
    """An explicit closed halfspace containing exactly ``members``.

    Start from the hyperplane through ``facet`` (positive side = ``side``)
    and tilt it slightly so that the facet points in ``include`` fall inside
    and the remaining facet points fall outside.
    """
    pts = S.ints
    normal, base = hyperplane([pts[i] for i in facet])
    normal = [side * a for a in normal]
    d = S.dim
    off = [b + a for a, b in zip(normal, base)]
    rows = [list(pts[i]) + [1] for i in facet] + [off + [1]]
    rhs = [1 if i in include else -1 for i in facet] + [0]
    coeffs = _solve(rows, rhs)
    w, w0 = coeffs[:d], coeffs[d]
    t = Fraction(1)
    on_facet = set(facet)
    for i in range(S.n):
        if i in on_facet:
            continue
        lin = sum(a * (x - b) for a, x, b in zip(normal, pts[i], base))
        f = sum(a * x for a, x in zip(w, pts[i])) + w0
        if f != 0:
            t = min(t, Fraction(abs(lin)) / (2 * abs(f)))
    full = [a + t * b for a, b in zip(normal, w)]
    offset = sum(a * b for a, b in zip(normal, base)) - t * w0
    # The integer image is the rational set scaled by S.scale.
    return Halfspace(tuple(Fraction(a) for a in full), Fraction(offset) / S.scale, True,
                     frozenset(members), tuple(facet), side)


class EpsNetChecker:
    """Precomputed closed-halfspace ranges of S, for testing many candidate nets.

    Every set cut out by a closed halfspace is P u U' where U is a d-subset,
    P is one open side of U's hyperplane and U' is a subset of U (tilt the
    hyperplane about U until it rests on d points).  A net N misses such a
    range iff P avoids N and U' is taken inside U \\ N, so the worst range
    for a given (U, side) has |P| + |U \\ N| points.
    """

    def __init__(self, S):
        self.S = S
        self.n = S.n
        rows = []
        for facet, signs in S.facet_signs():
            bad = _zero_outside(signs, facet)
            if bad is not None:
                raise DegenerateError(tuple(sorted(facet + (bad,))))
            fmask = sum(1 << i for i in facet)
            for side in (1, -1):
                inside = signs == side
                mask = int.from_bytes(np.packbits(inside, bitorder="little").tobytes(), "little")
                rows.append((int(inside.sum()), mask, fmask, facet, side))
        rows.sort(key=lambda r: -r[0])
        self.rows = rows

    def violation(self, net, eps):
        """A closed halfspace with more than eps*n points avoiding ``net``, or None."""
        eps = Fraction(eps)
        limit = eps * self.n
        nmask = sum(1 << i for i in net)
        d = self.S.dim
        for count, mask, fmask, facet, side in self.rows:
            if count + d <= limit:
                break
            if mask & nmask:
                continue
            free = fmask & ~nmask
            if count + bin(free).count("1") > limit:
                include = {i for i in facet if (free >> i) & 1}
                members = {i for i in range(self.n) if (mask >> i) & 1} | include
                return _closed_witness(self.S, facet, side, members, include)
        return None


def verify_eps_net(S, N, eps):
    """None when N meets every closed halfspace holding more than eps*n points."""
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise GeometryError("eps must lie strictly between 0 and 1")
    N = set(N)
    if not N <= set(range(S.n)):
        raise GeometryError("N must be a set of point indices")
    return EpsNetChecker(S).violation(N, eps)


def find_half_net_2d(S):
    """A triangle of hull vertices that is a 1/2-net of a planar set.

    Start with the three lowest-index hull vertices.  An edge is good when the
    closed halfplane on the side of the third vertex holds at least n/2
    points; at most one edge can be bad.  While one is, replace the opposite
    vertex by the hull vertex beyond the bad edge that lies farthest from
    it.  The hull vertices beyond the bad edge form a strictly shrinking
    arc, which bounds the number of rounds by the hull size.
    """
    if S.dim != 2:
        raise DimensionError("find_half_net_2d needs planar points")
    if S.n < 3:
        raise GeometryError("need at least 3 points")
    hull = convex_hull_2d(S)
    tri = tuple(sorted(hull)[:3])
    trace = []
    rounds = 0
    while True:
        bad = []
        for a, b, c in ((tri[0], tri[1], tri[2]), (tri[1], tri[2], tri[0]), (tri[0], tri[2], tri[1])):
            vals = S.side_values((a, b))
            signs = S.signs((a, b))
            toward = signs[c]
            closed = int((signs == toward).sum()) + 2
            if 2 * closed < S.n:
                bad.append((a, b, c, vals, signs, toward))
        if not bad:
            return SimplicialNet(tuple(sorted(tri)), Fraction(1, 2), rounds, tuple(trace))
        if len(bad) > 1:
            raise RuntimeError(f"triangle {tri} has {len(bad)} bad edges")
        a, b, c, vals, signs, toward = bad[0]
        far = [v for v in hull if signs[v] == -toward]
        if not far or (trace and len(far) >= trace[-1]):
            raise RuntimeError("candidate arc did not shrink")
        trace.append(len(far))
        pick = max(far, key=lambda v: (abs(int(vals[v])), -v))
        tri = tuple(sorted((a, b, pick)))
        rounds += 1


# ---------------------------------------------------------------- centerpoints

def _to_int_vector(v):
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // math.gcd(den, Fraction(x).denominator)
    return tuple(int(Fraction(x) * den) for x in v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _independent_subset(vectors):
    """Indices of a maximal linearly independent subset, chosen greedily."""
    basis_rows, chosen = [], []
    for idx, v in enumerate(vectors):
        row = [Fraction(x) for x in v]
        for pivot, b in basis_rows:
            if row[pivot] != 0:
                f = row[pivot] / b[pivot]
                row = [x - f * y for x, y in zip(row, b)]
        pivot = next((j for j, x in enumerate(row) if x != 0), None)
        if pivot is not None:
            basis_rows.append((pivot, row))
            chosen.append(idx)
    return chosen


def _orthogonal_ray(vectors, dim):
    """A nonzero integer vector orthogonal to dim-1 independent integer vectors."""
    return tuple((-1) ** j * _det([list(v[:j]) + list(v[j + 1:]) for v in vectors]) for j in range(dim))


def _best_direction(vectors, dim):
    """Max over directions y of #{w : y . w > 0}, with a direction attaining it.

    The optimum is attained arbitrarily close to a ray orthogonal to dim-1 of
    the vectors; the vectors on that ray's hyperplane are handled by
    recursing inside it, and a small tilt combines the two.
    """
    if not vectors:
        return 0, tuple([1] + [0] * (dim - 1))
    if dim == 1:
        pos = sum(1 for w in vectors if w[0] > 0)
        neg = len(vectors) - pos
        return (pos, (1,)) if pos >= neg else (neg, (-1,))
    basis = _independent_subset(vectors)
    if len(basis) < dim:
        # Only the projection of y on the span matters: change coordinates.
        b = [vectors[i] for i in basis]
        reduced = [tuple(_dot(bi, w) for bi in b) for w in vectors]
        count, beta = _best_direction(reduced, len(b))
        y = tuple(sum(Fraction(beta[i]) * b[i][j] for i in range(len(b))) for j in range(dim))
        return count, y
    best = (-1, None)
    for sub in combinations(range(len(vectors)), dim - 1):
        chosen = [vectors[i] for i in sub]
        if len(_independent_subset(chosen)) < dim - 1:
            continue
        ray0 = _orthogonal_ray(chosen, dim)
        for sgn in (1, -1):
            ray = tuple(sgn * x for x in ray0)
            dots = [_dot(ray, w) for w in vectors]
            on = [w for w, v in zip(vectors, dots) if v == 0]
            pos = sum(1 for v in dots if v > 0)
            sub_count, y_sub = _best_direction(on, dim) if on else (0, None)
            total = pos + sub_count
            if total <= best[0]:
                continue
            if y_sub is None:
                y = ray
            else:
                t = Fraction(1)
                for w, v in zip(vectors, dots):
                    s = _dot(y_sub, w)
                    if v != 0 and s != 0:
                        t = min(t, Fraction(abs(v)) / (2 * abs(s)))
                y = tuple(r + t * s for r, s in zip(ray, y_sub))
            best = (total, y)
            if total == len(vectors):
                return best
    return best


def deepest_open_halfspace(S, c):
    """Largest number of points of S in an open halfspace whose boundary passes through c.

    Any open halfspace avoiding c can be translated until c is on its
    boundary without losing points, so this is the max over all open
    halfspaces avoiding c.  Returns (count, normal direction).
    """
    c = tuple(as_rational(x) for x in c)
    vectors = []
    for p in S.points:
        diff = tuple(a - b for a, b in zip(p, c))
        if any(diff):
            vectors.append(_to_int_vector(diff))
    return _best_direction(vectors, S.dim)


def centerpoint_bound(n, d):
    return -(-d * n // (d + 1))


@dataclass(frozen=True)
class Centerpoint:
    """A point no open halfspace avoiding it covers more than ``bound`` points of S.

    ``max_count`` is the exact largest open-halfspace count, attained by
    ``direction``; ``tried`` is how many candidates were examined.
    """

    point: tuple
    max_count: int
    bound: int
    direction: tuple
    tried: int = 1


class CenterpointSearchExhausted(RuntimeError):
    pass


def verify_centerpoint(S, c):
    """None if c is a centerpoint of S, else an open halfspace that refutes it."""
    c = tuple(as_rational(x) for x in c)
    if len(c) != S.dim:
        raise DimensionError("point dimension does not match the set")
    count, y = deepest_open_halfspace(S, c)
    if count <= centerpoint_bound(S.n, S.dim):
        return None
    y = tuple(Fraction(x) for x in y)
    offset = _dot(y, c)
    members = frozenset(i for i, p in enumerate(S.points) if _dot(y, p) > offset)
    return Halfspace(y, offset, False, members)


def _centerpoint_planes(S):
    """Hyperplanes through d points that constrain where a centerpoint can be.

    If the open side of such a hyperplane holds pos points and pos + d
    exceeds the bound, a slight shift captures too many points, so every
    centerpoint lies on the closed side.  Those with pos within d of the
    bound are where the region's vertices come from.
    """
    n, d = S.n, S.dim
    top = centerpoint_bound(n, d)
    bounding, spanning = [], []
    for facet, signs in S.facet_signs():
        bad = _zero_outside(signs, facet)
        if bad is not None:
            raise DegenerateError(tuple(sorted(facet + (bad,))))
        pos = int((signs > 0).sum())
        normal, base = hyperplane([S.ints[i] for i in facet])
        offset = _dot(normal, base)
        for side, count in ((1, pos), (-1, n - d - pos)):
            if count + d > top:
                bounding.append(([side * a for a in normal], side * offset))
        if any(top + 1 - d <= x <= top for x in (pos, n - d - pos)):
            spanning.append((normal, offset))
    return bounding, spanning


def centerpoint_candidates(S, chunk=20000):
    """Vertices of the arrangement of constraining hyperplanes, best first.

    Vertices that (in floating point) satisfy every constraint come first,
    then the rest; each group is sorted by distance to the centroid.  Floats
    only decide the order; every yielded point is solved exactly.
    """
    d = S.dim
    bounding, spanning = _centerpoint_planes(S)
    if len(spanning) < d:
        return
    a = np.array([[float(x) for x in p[0]] for p in spanning])
    b = np.array([float(p[1]) for p in spanning])
    ca = np.array([[float(x) for x in p[0]] for p in bounding]).reshape(-1, d)
    cb = np.array([float(p[1]) for p in bounding])
    scale = np.abs(ca).sum(axis=1) + 1.0
    centroid = np.array([float(sum(p[j] for p in S.ints)) / S.n for j in range(d)])
    combos = np.array(list(combinations(range(len(spanning)), d)), dtype=np.int64)
    ranked = []
    for lo in range(0, len(combos), chunk):
        part = combos[lo:lo + chunk]
        mats, rhs = a[part], b[part]
        with np.errstate(all="ignore"):
            ok = np.abs(np.linalg.det(mats)) > 1e-12 * np.prod(np.abs(mats).sum(axis=2) + 1, axis=1)
            x = np.full((len(part), d), np.inf)
            if ok.any():
                x[ok] = np.linalg.solve(mats[ok], rhs[ok][:, :, None])[:, :, 0]
            slack = (x @ ca.T - cb) / (scale * (np.abs(x).sum(axis=1, keepdims=True) + 1))
            feasible = ok & np.all(slack >= -1e-9, axis=1)
            dist = np.where(ok, ((x - centroid) ** 2).sum(axis=1), np.inf)
        ranked.append(np.stack([~feasible, dist, lo + np.arange(len(part))], axis=1))
    ranked = np.concatenate(ranked)
    order = np.lexsort((ranked[:, 1], ranked[:, 0]))
    seen = set()
    for r in order:
        combo = combos[int(ranked[r, 2])]
        sol = _solve([spanning[i][0] for i in combo], [spanning[i][1] for i in combo])
        if sol is None:
            continue
        point = tuple(x / S.scale for x in sol)
        if point not in seen:
            seen.add(point)
            yield point


def find_centerpoint(S):
    """First arrangement vertex that passes verify_centerpoint."""
    top = centerpoint_bound(S.n, S.dim)
    if S.n <= S.dim + 1:
        centroid = tuple(sum(p[j] for p in S.points) / S.n for j in range(S.dim))
        count, y = deepest_open_halfspace(S, centroid)
        if count <= top:
            return Centerpoint(centroid, count, top, y, 1)
    tried = 0
    for cand in centerpoint_candidates(S):
        tried += 1
        count, y = deepest_open_halfspace(S, cand)
        if count <= top:
            return Centerpoint(cand, count, top, y, tried)
    raise CenterpointSearchExhausted(f"none of {tried} arrangement vertices is a centerpoint")


# ------------------------------------------------------- structural optimality

@dataclass(frozen=True)
class OptimalityReport:
    k: int
    n: int
    E: tuple              # E_0..E_k as counted
    e: tuple              # e_0..e_k as counted
    hull_size: int
    layer_sizes: tuple
    optimal: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "optimal", self.E[self.k] == lb_planar_basic(self.k))

    @property
    def E_optimal(self):
        return tuple(x == lb_planar_basic(j) for j, x in enumerate(self.E))

    @property
    def e_expected(self):
        return tuple(3 * (j + 1) for j in range(self.k + 1))

    @property
    def hull_is_triangle(self):
        return self.hull_size == 3

    @property
    def triangular_layers(self):
        count = 0
        for size in self.layer_sizes:
            if size != 3:
                break
            count += 1
        return count

    @property
    def required_triangular_layers(self):
        return -(-self.k // 2)

    @property
    def checks(self):
        return {
            "hull_is_triangle": self.hull_is_triangle,
            "outer_layers_triangular": self.triangular_layers >= self.required_triangular_layers,
            "all_E_optimal": all(self.E_optimal),
            "e_is_3_j_plus_1": self.e == self.e_expected,
        }

    @property
    def consistent(self):
        """False only when the set is optimal at k and some consequence fails."""
        return not self.optimal or all(self.checks.values())


def check_structural_optimality(S, k, fv=None):
    if S.dim != 2:
        raise DimensionError("structural checks are planar")
    if not 0 <= k <= S.n // 3 - 1:
        raise GeometryError(f"k must lie in [0, {S.n // 3 - 1}]")
    fv = fv or count_facets(S)
    return OptimalityReport(
        k=k,
        n=S.n,
        E=fv.E[:k + 1],
        e=fv.e[:k + 1],
        hull_size=len(convex_hull_2d(S)),
        layer_sizes=tuple(len(layer) for layer in convex_layers_2d(S)),
    )


@dataclass(frozen=True)
class Decomposition:
    """(<=k-2)-facets of S minus T (reindexed into S) next to the (<=k)-facets of S touching T."""

    k: int
    inner: frozenset
    adjacent: frozenset
    full: frozenset

    @property
    def disjoint(self):
        return not (self.inner & self.adjacent)

    @property
    def contained(self):
        return self.inner <= self.full and self.adjacent <= self.full

    @property
    def union_equal(self):
        return (self.inner | self.adjacent) == self.full


def leq_k_decomposition(S, T, k):
    """Split the (<=k)-facets of S by whether they touch the half-net T."""
    rest, keep = S.without(T)
    inner = frozenset()
    if k >= 2:
        inner = frozenset(f.relabel(keep) for f in leq_k_facets(rest, min(k - 2, rest.n - rest.dim)))
    return Decomposition(k, inner, adjacent_leq_k(S, T, k), leq_k_facets(S, k))


@dataclass(frozen=True)
class EdgeClassification:
    """Exactly-k edges of S sorted into those that are (k-2)-edges of S minus T
    and those that touch T; ``neither`` lists any that fit no category."""

    k: int
    inner: int
    adjacent: int
    neither: tuple


def classify_k_edges(S, T, k):
    T = set(T)
    rest, keep = S.without(T)
    rest_values = {}
    for f in oriented_facets(rest):
        rest_values[(tuple(keep[i] for i in f.indices), f.sign)] = f.k
    inner = adjacent = 0
    neither = []
    for f in oriented_facets(S):
        if f.k != k:
            continue
        if T.intersection(f.indices):
            adjacent += 1
        elif rest_values.get((f.indices, f.sign)) == k - 2:
            inner += 1
        else:
            neither.append(f)
    return EdgeClassification(k, inner, adjacent, tuple(neither))
