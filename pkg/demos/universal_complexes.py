"""The universal complex RU_l, its links, and the 0/1 lift.

RU_l has the nonzero vectors of GF(2)^l as vertices and the independent
sets as simplices.  The link of a k-simplex is equivalent to RU_(l-k):
complete the simplex to a basis and drop its coordinates.  Over Z, a 0/1
matrix of size at most 3 has |det| <= 2, so an odd determinant is +-1 and
every GF(2) simplex of dimension <= 2 lifts to a unimodular set.
"""

from itertools import combinations

from bux import is_nondegenerate_map, link_equivalence_maps, max_abs_det_01, real_universal_skeleton
from bux.gf2 import is_independent, to_bits
from bux.lattice import is_unimodular_set, lift_01
from bux.universal import real_link

for l in range(1, 5):
    U = real_universal_skeleton(l)
    print(f"RU_{l}: {U.m} vertices, {len(U.facets)} facets, dim {U.dim}")

L, index = real_link(3, [1])
print("\nlink of e1 in RU_3:", [to_bits(i + 1, 3) for i in index], f"({len(L.facets)} edges)")
p, q = link_equivalence_maps(3, [1])
print("p nondegenerate:", is_nondegenerate_map(p), " q nondegenerate:", is_nondegenerate_map(q))
print("q sends link vertices to", [to_bits(i + 1, 2) for i in q.image])

print("\nmax |det| of 0/1 matrices:", {n: max_abs_det_01(n) for n in (2, 3, 4)})
l = 5
triples = [s for s in combinations(range(1, 1 << l), 3) if is_independent(s)]
lifted = sum(is_unimodular_set([lift_01(v, l) for v in s]) for s in triples)
print(f"independent triples of GF(2)^5 lifting to unimodular triples: {lifted}/{len(triples)}")
