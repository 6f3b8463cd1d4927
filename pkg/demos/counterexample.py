"""K4 * Grotzsch: r_R and r are not additive under joins.

Both factors have r_R = r = 3.  The join needs at least
r_R(Grotzsch) + dim(K4) + 1 = 5 coordinates, and a map at l = 5 exists:
Grotzsch vertices get vectors with last coordinate 1, K4 vertices get the
unit vectors e1..e4.  Lifting the 0/1 vectors to integers keeps every
maximal 4 x 5 minor matrix unimodular, so r = 5 as well.
"""

from bux.demos import demo_counterexample
from bux.gf2 import to_bits
from bux.invariants import verify_counterexample

# With search=True the certificate is found from scratch instead of
# loaded from the committed golden file.
print(demo_counterexample(search=True).render())

rep = verify_counterexample()
print("\nvertex -> vector (coordinate i is character i)")
for v, x in enumerate(rep.gf2.images):
    side = "Grotzsch" if v < 11 else "K4"
    print(f"  {v:>2} {side:<9}{to_bits(x, 5)}  lift {list(rep.integer.images[v])}")
