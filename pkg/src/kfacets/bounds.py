"""Lower bounds on the number of (<=k)-facets and reports against counts."""

from dataclasses import dataclass
from math import comb

from .counting import count_facets


def binom(a, b):
    """Binomial coefficient that is zero outside 0 <= b <= a."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def lb_planar_basic(k):
    if k < 0:
        raise ValueError("k must be nonnegative")
    return 3 * binom(k + 2, 2)


def lb_planar_improved(n, k):
    """3 C(k+2,2) plus the sum of (3j - n + 3) for floor(n/3) <= j <= k."""
    if k < 0 or n < 3:
        raise ValueError("need k >= 0 and n >= 3")
    return lb_planar_basic(k) + sum(3 * j - n + 3 for j in range(n // 3, k + 1))


def lb_planar_improved_closed(n, k):
    """Closed form of lb_planar_improved for n divisible by 3."""
    if n % 3:
        raise ValueError("closed form needs n divisible by 3")
    return 3 * binom(k + 2, 2) + 3 * binom(k - n // 3 + 2, 2)


def lb_simplicial(n, d, k):
    """(d+1) C(k+d,d) for k < floor(n/(d+1)); None outside that range."""
    if n < d + 1:
        raise ValueError("need n >= d+1")
    if not 0 <= k < n // (d + 1):
        return None
    return (d + 1) * binom(k + d, d)


def simplicial_split(d, k, j):
    """Number of (<=k)-facets of the ray construction meeting the apex simplex in j vertices."""
    return binom(d + 1, j) * (d - j + 1) * binom(k, d - j)


@dataclass(frozen=True)
class BoundRow:
    k: int
    counted: int
    bounds: dict          # name -> value, or None where the bound does not apply
    satisfied: bool
    tight: bool
    optimal: bool


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    rows: tuple

    @property
    def satisfied(self):
        return all(r.satisfied for r in self.rows)

    def violations(self):
        return [r for r in self.rows if not r.satisfied]


def applicable_bounds(n, d, k):
    if d == 2:
        basic = lb_planar_basic(k) if k < (n - 2) // 2 else None
        improved = lb_planar_improved(n, k) if k < (n - 2) // 2 else None
        return {"planar_basic": basic, "planar_improved": improved,
                "simplicial": lb_simplicial(n, d, k)}
    return {"simplicial": lb_simplicial(n, d, k)}


def verify_bounds(S, k_max, fv=None):
    """Compare counted E_k with every bound that applies, for k = 0..k_max."""
    fv = fv or count_facets(S)
    n, d = S.n, S.dim
    if not 0 <= k_max <= n - d:
        raise ValueError(f"k_max must lie in [0, {n - d}]")
    rows = []
    for k in range(k_max + 1):
        counted = fv.E_at(k)
        bounds = applicable_bounds(n, d, k)
        values = [v for v in bounds.values() if v is not None]
        optimal = d == 2 and k <= n // 3 - 1 and counted == lb_planar_basic(k)
        rows.append(BoundRow(
            k=k,
            counted=counted,
            bounds=bounds,
            satisfied=all(counted >= v for v in values),
            tight=bool(values) and counted == max(values),
            optimal=optimal,
        ))
    return BoundReport(n, d, tuple(rows))
