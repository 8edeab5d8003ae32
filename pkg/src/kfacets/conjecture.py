"""Random search for point sets without a simplicial half-net."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import random

import numpy as np

from .exact import PointSet, hull_vertices, hyperplane, orientation
from .structure import EpsNetChecker, SimplicialNet, verify_eps_net

HALF = Fraction(1, 2)


class ResampleBudgetExceeded(RuntimeError):
    pass


def random_point_set(n, d, seed, coord_bound=None, max_resamples=10000):
    """n integer points uniform in [-B, B]^d, redrawing any point that would break general position."""
    if n < d + 1 or d < 1:
        raise ValueError("need d >= 1 and n >= d+1")
    bound = coord_bound if coord_bound is not None else 10 * n
    if bound < n:
        raise ValueError("coord_bound must be at least n")
    rng = random.Random(seed)
    dtype = np.int64 if bound < 2 ** (40 // d) else object
    pts = []
    normals = np.zeros((0, d), dtype=dtype)
    offsets = np.zeros(0, dtype=dtype)
    redraws = 0
    while len(pts) < n:
        p = tuple(rng.randint(-bound, bound) for _ in range(d))
        clash = p in pts
        if not clash and len(pts) >= d:
            clash = bool(np.any(normals @ np.array(p, dtype=dtype) == offsets))
        if clash:
            redraws += 1
            if redraws > max_resamples:
                raise ResampleBudgetExceeded(f"gave up after {redraws} redraws")
            continue
        new_normals, new_offsets = [], []
        for rest in combinations(pts, d - 1):
            normal, base = hyperplane(list(rest) + [p])
            if not any(normal):
                continue
            new_normals.append(normal)
            new_offsets.append(sum(a * b for a, b in zip(normal, base)))
        if new_normals:
            normals = np.vstack([normals, np.array(new_normals, dtype=dtype)])
            offsets = np.concatenate([offsets, np.array(new_offsets, dtype=dtype)])
        pts.append(p)
    return PointSet(pts, d)


def _search(S, checker=None):
    checker = checker or EpsNetChecker(S)
    hull = sorted(hull_vertices(S))
    examined = 0
    for sub in combinations(hull, S.dim + 1):
        if orientation([S.points[i] for i in sub]) == 0:
            continue
        examined += 1
        if checker.violation(sub, HALF) is None:
            return SimplicialNet(sub, HALF), examined, len(hull)
    return None, examined, len(hull)


def search_half_net(S):
    """First (d+1)-subset of hull vertices, in lexicographic order, that is a 1/2-net."""
    return _search(S)[0]


@dataclass(frozen=True)
class TrialRecord:
    seed: int
    n: int
    d: int
    hull_size: int
    found: tuple          # vertex indices, or None
    examined: int
    work: int             # examined subsets times the number of halfspace ranges
    verified: bool        # independent re-check of the found net
    points: tuple = None  # coordinates, kept only when nothing was found


@dataclass(frozen=True)
class Exploration:
    trials: int
    n: int
    d: int
    seed0: int
    records: tuple

    @property
    def found(self):
        return sum(1 for r in self.records if r.found is not None)

    @property
    def not_found(self):
        return [r for r in self.records if r.found is None]

    @property
    def verification_failures(self):
        return sum(1 for r in self.records if r.found is not None and not r.verified)

    def summary(self):
        return {
            "trials": self.trials, "n": self.n, "d": self.d, "seed0": self.seed0,
            "found": self.found, "not_found": len(self.not_found),
            "verification_failures": self.verification_failures,
        }


def run_trial(n, d, seed, coord_bound=None):
    S = random_point_set(n, d, seed, coord_bound)
    checker = EpsNetChecker(S)
    net, examined, hull_size = _search(S, checker)
    verified = net is not None and verify_eps_net(S, net.vertices, HALF) is None
    return TrialRecord(
        seed=seed, n=n, d=d, hull_size=hull_size,
        found=net.vertices if net else None,
        examined=examined, work=examined * len(checker.rows), verified=verified,
        points=None if net else S.points,
    )


def explore(trials, n, d, seed0=0, coord_bound=None):
    """Run seeded trials seed0, seed0+1, ...; records come back in seed order."""
    if trials < 1 or n < d + 1 or d < 1:
        raise ValueError("need trials >= 1 and n >= d+1")
    records = tuple(run_trial(n, d, seed0 + t, coord_bound) for t in range(trials))
    return Exploration(trials, n, d, seed0, records)
