"""q-regular colorings of RU_l and the obstruction they give.

A color class of a q-regular coloring of RU_l contains no q + 1
independent vectors, so it spans at most a q-space and has at most
2^q - 1 members.  When q divides l, the scalar orbits of GF(2^q) on
GF(2^q)^(l/q) split the nonzero vectors into exactly such classes (a
spread), so gamma_q(RU_l) = (2^l - 1) / (2^q - 1).

A characteristic map K -> GF(2)^l pulls a q-regular coloring of RU_l back
to one of K, so gamma_q(K) > gamma_q(RU_l) rules out level l.  For the
2-skeleton of the simplex on 63 vertices, gamma_2 = 32 > 21 = gamma_2(RU_6).
"""

import time

from bux import gamma_q_bounds, obstruction_lower_bound, simplex_skeleton
from bux.demos import demo_spreads

print(demo_spreads().render())

K = simplex_skeleton(63, 2)
t0 = time.perf_counter()
fast = gamma_q_bounds(K, 2)
exact = gamma_q_bounds(K, 2, fast=False)
print(f"\nDelta_62^(2): gamma_2 = {fast.lower} (complete-hypergraph formula), "
      f"{exact.lower} (branch and bound), {time.perf_counter() - t0:.2f}s")
print("obstruction: r_R >=", obstruction_lower_bound(K, q_list=[1, 2]))
