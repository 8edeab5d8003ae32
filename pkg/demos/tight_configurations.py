"""Build the three families of tight configurations and compare their
(<=k)-facet counts with the lower bounds they meet."""

from kfacets import (
    count_facets,
    gen_tight_planar_basic,
    gen_tight_planar_extended,
    gen_tight_simplicial,
    lb_planar_basic,
    lb_planar_improved,
    lb_simplicial,
)


def show(title, E, bound, ks):
    print(title)
    for k in ks:
        mark = "=" if E[k] == bound(k) else ">"
        print(f"  k={k:2d}  E_k={E[k]:5d} {mark} {bound(k)}")


n = 24
E = count_facets(gen_tight_planar_basic(n).points).E
show(f"three rays, n={n}", E, lb_planar_basic, range(n // 3 + 2))

E = count_facets(gen_tight_planar_extended(n).points).E
show(f"A/B/C chains, n={n}", E, lambda k: lb_planar_improved(n, k), range(5 * n // 12 + 1))

d, m = 3, 3
E = count_facets(gen_tight_simplicial(d, m).points).E
show(f"four rays in R^3, m={m}", E, lambda k: lb_simplicial((d + 1) * m, d, k), range(m))
