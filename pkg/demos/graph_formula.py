"""Graphs: r_R and r are both ceil(log2(gamma + 1)).

For a graph the only simplices are vertices and edges, so a characteristic
map over GF(2) is just a proper coloring by nonzero vectors of GF(2)^l.
The least l is therefore the least l with 2^l - 1 >= gamma.  This script
computes all three numbers independently and prints them side by side.
"""

from bux import chromatic_number, r_bounds, r_real
from bux.demos import graph_suite
from bux.invariants import log_bound

print(f"{'graph':<10}{'m':>4}{'gamma':>7}{'formula':>9}{'r_R':>5}{'r':>4}")
for name, G in graph_suite():
    g = chromatic_number(G)
    rb = r_bounds(G)
    print(f"{name:<10}{G.m:>4}{g:>7}{log_bound(g):>9}{r_real(G):>5}{rb.lower:>4}")

# The r upper bound comes with an integer witness; for a graph it is the
# 0/1 lift of a GF(2) witness, and every edge is checked for unimodularity.
rb = r_bounds(graph_suite()[-1][1])
print("\nGrotzsch integer witness:", [list(v) for v in rb.witness.images])
