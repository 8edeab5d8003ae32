"""Exact geometric kernel: rational coordinates, orientation, sidedness, hulls.

Every predicate is decided on integers.  A PointSet keeps its rational
coordinates and, alongside, an integer image scaled by the common
denominator; positive scaling changes no orientation sign.
"""

from fractions import Fraction
from itertools import combinations
import math
import re

import numpy as np

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")

# Coordinates below this bound keep every d x d cofactor product inside int64.
_INT64_SAFE = {1: 2**60, 2: 2**29, 3: 2**18, 4: 2**12}


class GeometryError(ValueError):
    """Raised for inputs the kernel refuses to handle."""


class DegenerateError(GeometryError):
    """Points that violate general position; ``tuple`` names the culprits."""

    def __init__(self, indices, message=None):
        self.tuple = tuple(int(i) for i in indices)
        super().__init__(message or f"degenerate tuple {self.tuple}")


class DimensionError(GeometryError):
    pass


def as_rational(x):
    """Convert ints, Fractions, or "p/q" strings to a Fraction.

    Floats are refused: a float has usually lost the value it was meant to
    carry before it gets here.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (bool, float)):
        raise GeometryError(f"refusing inexact coordinate {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        if not _RATIONAL_RE.match(x):
            raise GeometryError(f"not a rational literal: {x!r}")
        num, _, den = x.partition("/")
        if den and int(den) == 0:
            raise GeometryError(f"zero denominator in {x!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise GeometryError(f"cannot read {x!r} as a rational")


def _det(rows):
    """Exact determinant of a square matrix of ints (fraction-free Bareiss)."""
    m = [list(r) for r in rows]
    size = len(m)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for c in range(size - 1):
        if m[c][c] == 0:
            for r in range(c + 1, size):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(c + 1, size):
            for j in range(c + 1, size):
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) // prev
        prev = m[c][c]
    return sign * m[-1][-1]


def _scale_to_ints(rows):
    den = 1
    for r in rows:
        for x in r:
            den = den * x.denominator // math.gcd(den, x.denominator)
    return [[int(x * den) for x in r] for r in rows]


def _sign(x):
    return (x > 0) - (x < 0)


def orientation(points, dim=None):
    """Sign of the homogeneous determinant of d+1 points in R^d.

    +1 means the last point lies on the positive side of the hyperplane
    through the first d points, taken in the given order.  In the plane the
    positive side of a->b is the left side.
    """
    pts = [[as_rational(c) for c in p] for p in points]
    d = len(pts[0]) if dim is None and pts else dim
    if d is None or len(pts) != d + 1 or any(len(p) != d for p in pts):
        raise DimensionError(f"need {d}+1 points of dimension {d}")
    base = pts[0]
    diffs = [[p[j] - base[j] for j in range(d)] for p in pts[1:]]
    det = _det(_scale_to_ints(diffs))
    return _sign(det) * (-1) ** d


def hyperplane(int_points):
    """Normal vector and base point of the hyperplane through d integer points.

    For any point p, sign(normal . (p - base)) equals the orientation of
    (points..., p).
    """
    d = len(int_points)
    base = int_points[0]
    rows = [[p[j] - base[j] for j in range(d)] for p in int_points[1:]]
    normal = []
    for j in range(d):
        minor = [r[:j] + r[j + 1:] for r in rows]
        normal.append((-1) ** (j + 1) * _det(minor))
    return normal, list(base)


class PointSet:
    """An indexed collection of points with exact rational coordinates."""

    def __init__(self, points, dim=None, check=False):
        pts = tuple(tuple(as_rational(c) for c in p) for p in points)
        if dim is None:
            if not pts:
                raise DimensionError("cannot infer dimension of an empty set")
            dim = len(pts[0])
        if dim < 1 or any(len(p) != dim for p in pts):
            raise DimensionError(f"every point must have dimension {dim}")
        self.points = pts
        self.dim = dim
        self.n = len(pts)
        den = 1
        for p in pts:
            for c in p:
                den = den * c.denominator // math.gcd(den, c.denominator)
        self.scale = den
        self.ints = tuple(tuple(int(c * den) for c in p) for p in pts)
        biggest = max((abs(c) for p in self.ints for c in p), default=0)
        safe = biggest < _INT64_SAFE.get(dim, 0)
        self._array = np.array(self.ints, dtype=np.int64 if safe else object).reshape(self.n, dim)
        if check:
            require_general_position(self)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points and self.dim == other.dim

    def __hash__(self):
        return hash((self.dim, self.points))

    def __repr__(self):
        return f"PointSet(n={self.n}, dim={self.dim})"

    def without(self, removed):
        """The set minus ``removed``; also returns new-index -> old-index."""
        removed = set(removed)
        keep = tuple(i for i in range(self.n) if i not in removed)
        return PointSet([self.points[i] for i in keep], self.dim), keep

    def side_values(self, facet):
        """normal . (p - base) on the integer image, for every point p.

        The sign is the orientation of (facet..., p); the magnitude is
        proportional to the distance from the facet's hyperplane.
        """
        normal, base = hyperplane([self.ints[i] for i in facet])
        arr = self._array
        if arr.dtype == object:
            normal_arr = np.array(normal, dtype=object)
            base_arr = np.array(base, dtype=object)
        else:
            normal_arr = np.array(normal, dtype=np.int64)
            base_arr = np.array(base, dtype=np.int64)
        return ((arr - base_arr) * normal_arr).sum(axis=1)

    def signs(self, facet):
        """Orientation of (facet..., p) for every point p, as an int array."""
        vals = self.side_values(facet)
        return (vals > 0).astype(np.int8) - (vals < 0).astype(np.int8)

    def planar_sign_block(self, i):
        """Matrix M with M[j, l] = orientation(p_i, p_j, p_l); planar sets only."""
        diff = self._array - self._array[i]
        x = diff[:, 0]
        y = diff[:, 1]
        cross = np.multiply.outer(x, y) - np.multiply.outer(y, x)
        return (cross > 0).astype(np.int8) - (cross < 0).astype(np.int8)

    def facet_signs(self):
        """Yield (facet, signs) for every d-subset in lexicographic order."""
        if self.dim == 2:
            for i in range(self.n):
                block = self.planar_sign_block(i)
                for j in range(i + 1, self.n):
                    yield (i, j), block[j]
        else:
            for facet in combinations(range(self.n), self.dim):
                yield facet, self.signs(facet)


def _zero_outside(signs, facet):
    """First index off the facet whose sign is zero, or None."""
    zeros = np.flatnonzero(signs == 0)
    if len(zeros) == len(facet):
        return None
    members = set(facet)
    for z in zeros:
        if int(z) not in members:
            return int(z)
    return None


def side_counts(facet, orient, S):
    """Points strictly on the (pos, neg) side of the oriented facet.

    ``orient`` = +1 takes the positive side of the facet in the given order;
    -1 swaps the sides.
    """
    facet = tuple(facet)
    if len(facet) != S.dim or len(set(facet)) != S.dim:
        raise GeometryError(f"a facet needs {S.dim} distinct indices, got {facet}")
    if orient not in (1, -1):
        raise GeometryError("orient must be +1 or -1")
    signs = S.signs(facet)
    bad = _zero_outside(signs, facet)
    if bad is not None:
        raise DegenerateError(tuple(sorted(facet + (bad,))))
    pos = int((signs == orient).sum())
    return pos, S.n - S.dim - pos


def find_degeneracy(S):
    """Lexicographically first (d+1)-tuple with zero orientation, or None."""
    d = S.dim
    if S.n <= d:
        return None
    for facet, signs in S.facet_signs():
        if not np.any(signs):
            # The facet points themselves are affinely dependent.
            nxt = facet[-1] + 1
            if nxt < S.n:
                return facet + (nxt,)
            continue
        zeros = np.flatnonzero(signs[facet[-1] + 1:] == 0)
        if len(zeros):
            return facet + (facet[-1] + 1 + int(zeros[0]),)
    return None


def is_general_position(S):
    return find_degeneracy(S) is None


def require_general_position(S):
    bad = find_degeneracy(S)
    if bad is not None:
        raise DegenerateError(bad)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_of(S, indices):
    pts = S.ints
    order = sorted(indices, key=lambda i: pts[i])
    for a, b in zip(order, order[1:]):
        if pts[a] == pts[b]:
            raise DegenerateError((a, b), f"repeated point at indices {a} and {b}")
    if len(order) < 3:
        return order

    def chain(seq):
        out = []
        for i in seq:
            while len(out) >= 2:
                c = _cross(pts[out[-2]], pts[out[-1]], pts[i])
                if c == 0:
                    raise DegenerateError(tuple(sorted((out[-2], out[-1], i))))
                if c > 0:
                    break
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]


def _rotate_to_min(cycle):
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def convex_hull_2d(S):
    """Hull vertex indices in counterclockwise order, starting at the smallest index."""
    if S.dim != 2:
        raise DimensionError("convex_hull_2d needs planar points")
    if S.n < 3:
        raise GeometryError("need at least 3 points")
    return _rotate_to_min(_hull_of(S, range(S.n)))


def convex_layers_2d(S):
    """Peel hulls from the outside in; returns a list of CCW index cycles."""
    if S.dim != 2:
        raise DimensionError("convex_layers_2d needs planar points")
    left = list(range(S.n))
    layers = []
    while left:
        hull = _rotate_to_min(_hull_of(S, left)) if len(left) >= 3 else sorted(left)
        layers.append(hull)
        gone = set(hull)
        left = [i for i in left if i not in gone]
    return layers


def hull_vertices(S):
    """Indices lying on some facet with all other points strictly on one side."""
    d = S.dim
    if S.n <= d + 1:
        return frozenset(range(S.n))
    found = set()
    for facet, signs in S.facet_signs():
        bad = _zero_outside(signs, facet)
        if bad is not None:
            raise DegenerateError(tuple(sorted(facet + (bad,))))
        pos = int((signs > 0).sum())
        if pos == 0 or pos == S.n - d:
            found.update(facet)
    return frozenset(found)
