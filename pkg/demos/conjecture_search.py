"""Look for random point sets in R^3 with no simplicial half-net."""

import sys

from kfacets import explore

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 200
res = explore(trials, n=12, d=3)
print(res.summary())
for rec in res.not_found:
    print("no half-net for seed", rec.seed, rec.points)
