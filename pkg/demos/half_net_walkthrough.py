"""Find a triangle of hull vertices that meets every closed halfplane holding
at least half the points, then use it to split the (<=k)-edges."""

from fractions import Fraction

from kfacets import find_half_net_2d, random_point_set, verify_eps_net
from kfacets.structure import leq_k_decomposition

S = random_point_set(40, 2, seed=4)
net = find_half_net_2d(S)
print("net", net.vertices, "after", net.iterations, "replacement rounds, arc sizes", net.trace)
print("verified:", verify_eps_net(S, net.vertices, Fraction(1, 2)) is None)

# a proper subset of the net misses some heavy halfplane; show the witness
witness = verify_eps_net(S, net.vertices[:2], Fraction(1, 2))
a, b = (str(c) for c in witness.normal)
print(f"two vertices are not enough: {len(witness.members)} points satisfy {a}*x + {b}*y >= {witness.offset}")

for k in range(2, 7):
    dec = leq_k_decomposition(S, net.vertices, k)
    print(f"k={k}: inner {len(dec.inner):4d} + adjacent {len(dec.adjacent):3d} vs all {len(dec.full):4d}",
          "disjoint" if dec.disjoint else "OVERLAP")
