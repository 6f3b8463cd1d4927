"""Good pairs and the moves on them.

t_one (add one vector of a side to the others on that side) always keeps a
pair good: the new shadow lies inside the old one.  t_mix, which mixes the
two sides, does not once a side has three or more vectors, and neither do
compositions built from it.  Every move here checks its output and raises
TransformError instead of returning a bad pair.
"""

from bux import GoodPair, double_shift, is_good_pair, push_into_hyperplane, shadow, t_mix, t_one
from bux.gf2 import to_bits
from bux.goodpairs import TransformError, random_good_pairs


def show(P):
    return f"S={[to_bits(v, P.l) for v in P.S]} T={[to_bits(v, P.l) for v in P.T]}"


P = GoodPair(4, [1, 2], [4, 8])
print("start      ", show(P), is_good_pair(P))
print("t_mix(0,0) ", show(t_mix(P, 0, 0)))
print("t_one(1,0) ", show(t_one(P, 1, 0)))
print("shift      ", show(double_shift(P, 0, 1, 0, 1)))

# a pair where t_mix breaks goodness
bad = GoodPair(5, (16, 31, 23, 17), (11, 30))
try:
    t_mix(bad, 0, 0)
except TransformError:
    print("\nt_mix(0,0) breaks", show(bad))

pairs = random_good_pairs(1000, seed=0)
kept = total = 0
for Q in pairs:
    for a in range(len(Q.S)):
        for g in range(len(Q.T)):
            total += 1
            try:
                t_mix(Q, a, g)
                kept += 1
            except TransformError:
                pass
print(f"t_mix keeps goodness on {kept}/{total} moves over 1000 random pairs")

Q = GoodPair(4, [1, 2 ^ 8], [8, 4 ^ 8])
res = push_into_hyperplane(Q, 3)
print(f"\npush {show(Q)} into v[3] = 0: {res.flagged} inside after {res.loops} move(s), {show(res.pair)}")
assert not shadow(res.pair.S) & shadow(res.pair.T)
