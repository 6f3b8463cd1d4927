"""Joins of complete graphs are additive: r_R(K_p * K_q) = r_R(K_p) + r_R(K_q).

A characteristic map of K_p * K_q is a good pair: p vectors S and q
vectors T whose shadows (elements plus pairwise sums) are disjoint.  The
witness at the sum puts S and T in complementary coordinate blocks; the
refutation one level down is an exhaustive search with symmetry breaking.
"""

from bux.demos import demo_join_additivity
from bux.gf2 import to_bits
from bux.goodpairs import shadow, standard_pair

print(demo_join_additivity().render())

P = standard_pair(4, 4)
print(f"\nwitness for K4 * K4 in GF(2)^{P.l}:")
print("  S =", [to_bits(v, P.l) for v in P.S])
print("  T =", [to_bits(v, P.l) for v in P.T])
print("  shadows meet in", shadow(P.S) & shadow(P.T) or "nothing")
