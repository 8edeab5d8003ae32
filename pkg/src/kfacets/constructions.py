"""Generators for configurations that meet the (<=k)-facet lower bounds with
equality, and exact verifiers for the properties those generators rely on.

Rotational symmetry is realized by an exact integer linear map of finite
order rather than by an irrational rotation.  In dimension d the map sends
e_1 -> e_2 -> ... -> e_d -> -(e_1 + ... + e_d) -> e_1, so it permutes the
d+1 ray directions cyclically.  Only the combinatorics of the symmetry is
needed: the map permutes chains and preserves (or, for odd d, reverses)
every orientation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exact import PointSet, _zero_outside, find_degeneracy, hyperplane, orientation


class ConstructionError(RuntimeError):
    """A parameterized template failed its own verification."""


@dataclass(frozen=True)
class ChainedConfig:
    """A point set whose points are labeled by chain, depth and (optionally) subchain.

    Depth 0 is the outermost point of a chain (the hull vertex).
    """

    points: PointSet
    kind: str
    chain: tuple
    depth: tuple
    subchain: tuple = None
    params: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def n(self):
        return self.points.n

    @property
    def d(self):
        return self.points.dim

    @property
    def chains(self):
        return max(self.chain) + 1

    def members(self, chain, sub=None):
        """Indices of one chain (or one subchain), outermost first."""
        idx = [i for i in range(self.n)
               if self.chain[i] == chain and (sub is None or self.subchain[i] == sub)]
        return sorted(idx, key=lambda i: self.depth[i])

    def rotation_permutation(self):
        """perm[i] = the point that the generating symmetry sends point i to."""
        where = {(self.chain[i], self.depth[i]): i for i in range(self.n)}
        c = self.chains
        return [where[((self.chain[i] + 1) % c, self.depth[i])] for i in range(self.n)]


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    passed: bool
    witness: tuple = None
    detail: str = ""


@dataclass(frozen=True)
class ConstructionReport:
    checks: tuple

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def cyclic_map(v):
    """Apply the order-(d+1) map e_j -> e_(j+1), e_d -> -(e_1 + ... + e_d)."""
    last = v[-1]
    return (-last,) + tuple(v[j - 1] - last for j in range(1, len(v)))


def _orbit(base_chain, d):
    out = [tuple(base_chain)]
    for _ in range(d):
        out.append(tuple(cyclic_map(p) for p in out[-1]))
    return out


def _ray_chain(d, m, delta):
    """Chain along e_1, depths 0..m-1 at radii m..1, bent along a moment curve."""
    pts = []
    for i in range(m):
        r = Fraction(m - i)
        pts.append(tuple(delta ** j * r ** (j + 1) for j in range(d)))
    return pts


def _assemble(chains):
    points, chain, depth = [], [], []
    for c, pts in enumerate(chains):
        for i, p in enumerate(pts):
            points.append(p)
            chain.append(c)
            depth.append(i)
    return points, tuple(chain), tuple(depth)


def gen_tight_simplicial(d, m, max_halvings=40):
    """(d+1) chains of m points on rays, meeting (d+1) C(k+d,d) for k < m."""
    if d < 2 or m < 1:
        raise ValueError("need d >= 2 and m >= 1")
    delta = Fraction(1, 4 * m)
    for _ in range(max_halvings):
        points, chain, depth = _assemble(_orbit(_ray_chain(d, m, delta), d))
        config = ChainedConfig(PointSet(points, d), "simplicial", chain, depth,
                               params={"d": d, "m": m, "delta": delta})
        if find_degeneracy(config.points) is None and verify_ray_config(config).passed:
            return config
        delta /= 2
    raise ConstructionError(f"no admissible perturbation found for d={d}, m={m}")


def gen_tight_planar_basic(n):
    """Three rotated chains of n/3 points meeting 3 C(k+2,2) for k < n/3."""
    if n < 3 or n % 3:
        raise ValueError("n must be a positive multiple of 3")
    config = gen_tight_simplicial(2, n // 3)
    return ChainedConfig(config.points, "basic", config.chain, config.depth,
                         params={"n": n, **config.params})


def verify_ray_config(config):
    """Check that low facets use distinct chains and have k = sum of depths."""
    S, d = config.points, config.d
    m = S.n // (d + 1)
    gp_witness = distinct_witness = depth_witness = None
    for facet, signs in S.facet_signs():
        if _zero_outside(signs, facet) is not None:
            gp_witness = gp_witness or facet
            continue
        pos = int((signs > 0).sum())
        neg = S.n - d - pos
        chains = {config.chain[i] for i in facet}
        if len(chains) < d:
            if min(pos, neg) < m and distinct_witness is None:
                distinct_witness = facet
            continue
        normal, base = hyperplane([S.ints[i] for i in facet])
        at_origin = -sum(a * b for a, b in zip(normal, base))
        inward = neg if at_origin > 0 else pos
        expected = sum(config.depth[i] for i in facet)
        if (at_origin == 0 or inward != expected) and depth_witness is None:
            depth_witness = facet
    return ConstructionReport((
        PropertyCheck("general_position", gp_witness is None, gp_witness),
        PropertyCheck("low_facets_use_distinct_chains", distinct_witness is None, distinct_witness,
                      f"facets with k < {m} must meet {d} different chains"),
        PropertyCheck("k_equals_depth_sum", depth_witness is None, depth_witness,
                      "inward k-value of a rainbow facet must equal the sum of depths"),
    ))


def check_rotational_symmetry(config):
    """Every (d+1)-tuple keeps (or, for odd d, flips) its orientation under the symmetry."""
    S, d = config.points, config.d
    perm = config.rotation_permutation()
    flip = (-1) ** d
    for t in combinations(range(S.n), d + 1):
        a = orientation([S.points[i] for i in t])
        b = orientation([S.points[perm[i]] for i in t])
        if b != flip * a:
            return PropertyCheck("rotational_symmetry", False, t)
    return PropertyCheck("rotational_symmetry", True)


# Planar three-chain template with a hole, laid out in a frame where the
# symmetry is a true 120 degree rotation.  Chain 0 has its apex at (100, 0);
# A and B bend slightly to the right on their way in, the hole sits between
# them, and C is a short segment pointing from the hole to a spot south of
# the centre, bent slightly to the left.
_APEX = Fraction(100)
_A_END = Fraction(85)
_B_START, _B_END = Fraction(42), Fraction(37)
_HOLE = Fraction(45)
_C_TARGET = (Fraction(15), Fraction(-11, 2))
_C_SPAN = Fraction(1, 10)
# Rational stand-in for 1/sqrt(3) in the map from the template frame to
# the frame where cyclic_map acts.
_INV_SQRT3 = Fraction(56, 97)


def _template_chain(u, bend, cbend):
    def on_arc(x):
        return (x, bend * (_APEX - x) ** 2)

    a = [on_arc(_APEX - (_APEX - _A_END) * i / (2 * u - 1)) for i in range(2 * u)]
    if u == 1:
        b = [on_arc(_B_END)]
    else:
        b = [on_arc(_B_START - (_B_START - _B_END) * i / (u - 1)) for i in range(u)]
    hole = on_arc(_HOLE)
    dx, dy = _C_TARGET[0] - hole[0], _C_TARGET[1] - hole[1]
    normal = (-dy / 30, dx / 30)
    c = []
    for i in range(u):
        s = 1 if u == 1 else 1 - _C_SPAN / 2 + _C_SPAN * i / (u - 1)
        bulge = cbend * (10 * (s - 1)) ** 2
        c.append((hole[0] + dx * s + normal[0] * bulge, hole[1] + dy * s + normal[1] * bulge))
    return a, b, c


def _to_symmetric_frame(p):
    x, y = p
    return (x + y * _INV_SQRT3, 2 * y * _INV_SQRT3)


def gen_tight_planar_extended(n, max_halvings=30):
    """Three chains with subchains A, B, C that stay tight past k = n/3."""
    if n < 12 or n % 12:
        raise ValueError("n must be a positive multiple of 12")
    u = n // 12
    scale = Fraction(1, 1000)
    for _ in range(max_halvings):
        for cbend in (scale, -scale):
            a, b, c = _template_chain(u, scale, cbend)
            base = [_to_symmetric_frame(p) for p in a + b + c]
            points, chain, depth = _assemble(_orbit(base, 2))
            sub = tuple(("A" * len(a) + "B" * len(b) + "C" * len(c))[i] for i in depth)
            config = ChainedConfig(PointSet(points, 2), "extended", chain, depth, sub,
                                   params={"n": n, "bend": scale, "cbend": cbend})
            if find_degeneracy(config.points) is None and verify_extended_properties(config).passed:
                return config
        scale /= 2
    raise ConstructionError(f"extended template failed verification for n={n}")


def _sq_dist(p, q):
    return sum((a - b) ** 2 for a, b in zip(p, q))


def verify_extended_properties(config):
    """Check the five defining properties of the three-chain A/B/C layout.

    (i)   A and B together bend right going inward, C bends left;
    (ii)  sizes n/6, n/12, n/12, depth runs outward-in, and the A-B gap is
          wider than any gap inside A or inside B;
    (iii) every line through two points of A and B, directed inward, has the
          next chain counterclockwise strictly on its right and its own C
          plus the remaining chain strictly on its left;
    (iv)  every line through two points of C separates its own A from its
          own B and has the other two C subchains on its right;
    (v)   every C point lies strictly inside the triangle of innermost B points.
    """
    S = config.points
    pts = S.points
    n = S.n
    checks = []

    def orient(a, b, p):
        return orientation([pts[a], pts[b], pts[p]])

    chains = range(3)
    ab = {c: config.members(c, "A") + config.members(c, "B") for c in chains}
    cc = {c: config.members(c, "C") for c in chains}

    witness = None
    for c in chains:
        for run, want in ((ab[c], -1), (cc[c], 1)):
            for t in zip(run, run[1:], run[2:]):
                if orient(*t) != want:
                    witness = witness or t
    checks.append(PropertyCheck("convexity", witness is None, witness))

    witness = None
    for c in chains:
        a, b, cs = config.members(c, "A"), config.members(c, "B"), cc[c]
        if n % 12 or (len(a), len(b), len(cs)) != (n // 6, n // 12, n // 12):
            witness = witness or (c,)
            continue
        seq = a + b
        apex = pts[seq[0]]
        dists = [_sq_dist(apex, pts[i]) for i in seq]
        if any(x >= y for x, y in zip(dists, dists[1:])):
            witness = witness or tuple(seq)
            continue
        inner_gaps = [_sq_dist(pts[x], pts[y]) for run in (a, b) for x, y in zip(run, run[1:])]
        gap = _sq_dist(pts[a[-1]], pts[b[0]])
        if any(gap <= g for g in inner_gaps):
            witness = witness or (a[-1], b[0])
    checks.append(PropertyCheck("hole_between_A_and_B", witness is None, witness))

    witness = None
    for c in chains:
        nxt, rest = (c + 1) % 3, (c + 2) % 3
        right = config.members(nxt)
        left = cc[c] + config.members(rest)
        for x, y in combinations(ab[c], 2):
            for p in right:
                if orient(x, y, p) != -1:
                    witness = witness or (x, y, p)
            for p in left:
                if orient(x, y, p) != 1:
                    witness = witness or (x, y, p)
    checks.append(PropertyCheck("lines_in_A_and_B", witness is None, witness))

    witness = None
    for c in chains:
        a, b = config.members(c, "A"), config.members(c, "B")
        others = [i for o in chains if o != c for i in cc[o]]
        for x, y in combinations(cc[c], 2):
            sa = {orient(x, y, p) for p in a}
            sb = {orient(x, y, p) for p in b}
            if len(sa) != 1 or len(sb) != 1 or sa == sb or 0 in sa | sb:
                witness = witness or (x, y)
            for p in others:
                if orient(x, y, p) != -1:
                    witness = witness or (x, y, p)
    checks.append(PropertyCheck("lines_in_C", witness is None, witness))

    witness = None
    inner = [config.members(c, "B")[-1] if config.members(c, "B") else None for c in chains]
    if None in inner:
        witness = ()
    else:
        turn = orient(*inner)
        for c in chains:
            for p in cc[c]:
                if not all(orient(inner[i], inner[(i + 1) % 3], p) == turn for i in range(3)):
                    witness = witness or (p,)
    checks.append(PropertyCheck("C_inside_inner_B_triangle", witness is None, witness))
    return ConstructionReport(tuple(checks))


def relabel_as_extended(config):
    """Reinterpret a three-chain config with A/B/C blocks of sizes 2u, u, u."""
    per_chain = config.n // 3
    u = per_chain // 4
    tags = "A" * (2 * u) + "B" * u + "C" * (per_chain - 3 * u)
    sub = tuple(tags[i] for i in config.depth)
    return ChainedConfig(config.points, "extended", config.chain, config.depth, sub, dict(config.params))


def verify_construction(config):
    """Run the verifier that matches the configuration's kind."""
    if config.kind == "extended":
        report = verify_extended_properties(config)
    else:
        report = verify_ray_config(config)
    return ConstructionReport(report.checks + (check_rotational_symmetry(config),))
