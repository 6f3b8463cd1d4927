"""Backtracking search for characteristic maps over GF(2) and over Z.

GF(2) search: a vertex's image must avoid the span of the images already
placed on each facet through it; candidate sets are kept up to date
(forward checking) and the next vertex is the one with fewest candidates,
after the vertices of the first (largest) facet.  Candidates are tried in
increasing mask order, or in a seeded shuffled order when an ``rng`` is
passed.

:func:`find_char_map_gf2` runs the search with restarts: run ``i`` uses
seed ``i`` and at most ``first * 2**i`` nodes.  Any run that finishes
inside its limit has covered its whole tree, so a ``None`` answer is still
a proof.  Satisfiable instances tend to have a few hopeless subtrees that
a single fixed order can get stuck in (K4 * Grotzsch at l=5 is one).

Symmetry reduction: the maps fixing the images placed so far act
transitively on the vectors outside their span, which is always
<e_1..e_r>.  So only e_{r+1} is tried outside it.  In particular the
first facet's images are fixed to e_1, ..., e_k.
"""

from __future__ import annotations

import random
from itertools import product

from .budget import Budget, SearchExhausted
from .complex import constraint_sets, search_order
from .lattice import is_primitive, is_unimodular_set


def iter_char_maps_gf2(K, l, budget=None, allowed=None, symmetry=True, rng=None):
    """Yield characteristic maps ``K -> GF(2)^l`` as image tuples.

    ``allowed[v]``, if given, is a bitmask over the 2^l vectors of
    GF(2)^l (bit ``x`` set means vector ``x`` may be used at vertex
    ``v``); symmetry reduction is turned off in that case since the
    restriction need not be GL-invariant.
    """
    budget = Budget.coerce(budget)
    m = K.m
    if m == 0:
        yield ()
        return
    if l < 1 or len(K.facets[0]) > l:
        return
    symmetry = symmetry and allowed is None
    nonzero = (1 << (1 << l)) - 2
    facets = K.facets
    facets_of = [[] for _ in range(m)]
    for j, f in enumerate(facets):
        for v in f:
            facets_of[v].append(j)
    adj = K.adjacency()
    if allowed is None:
        cand = [nonzero] * m
    else:
        cand = [allowed[v] & nonzero for v in range(m)]
    spans = [[0] for _ in facets]
    image = [0] * m
    prefix = list(facets[0])
    trail = []

    def assign(u, x):
        """Set image[u] = x and narrow the candidates of u's facet mates."""
        image[u] = x
        for j in facets_of[u]:
            old = spans[j]
            added = [e ^ x for e in old]
            spans[j] = old + added
            trail.append((j, old))
            hit = 0
            for e in added:
                hit |= 1 << e
            for w in facets[j]:
                if not image[w] and cand[w] & hit:
                    trail.append((~w, cand[w]))
                    cand[w] &= ~hit

    def undo(mark, u):
        while len(trail) > mark:
            key, old = trail.pop()
            if key >= 0:
                spans[key] = old
            else:
                cand[~key] = old
        image[u] = 0

    def effective(v, rank):
        c = cand[v]
        if not symmetry:
            return c
        # images so far span <e_1..e_rank>; outside it only e_{rank+1}
        inside = c & ((1 << (1 << rank)) - 1)
        if rank < l:
            inside |= c & (1 << (1 << rank))
        return inside

    def choose(depth, rank):
        if depth < len(prefix):
            v = prefix[depth]
            return v, effective(v, rank)
        best, best_key, best_eff = None, None, 0
        for v in range(m):
            if image[v]:
                continue
            eff = effective(v, rank)
            n = eff.bit_count()
            if n == 0:
                return v, 0
            key = (n, -(adj[v] & placed[0]).bit_count(), -adj[v].bit_count(), v)
            if best_key is None or key < best_key:
                best, best_key, best_eff = v, key, eff
        return best, best_eff

    placed = [0]

    def rec(depth, rank):
        if depth == m:
            yield tuple(image)
            return
        v, eff = choose(depth, rank)
        values = []
        while eff:
            low = eff & -eff
            eff ^= low
            values.append(low.bit_length() - 1)
        if rng is not None:
            rng.shuffle(values)
        for x in values:
            budget.tick()
            mark = len(trail)
            assign(v, x)
            placed[0] |= 1 << v
            yield from rec(depth + 1, rank + 1 if symmetry and x == 1 << rank else rank)
            placed[0] &= ~(1 << v)
            undo(mark, v)

    yield from rec(0, 0)


def find_char_map_gf2(K, l, budget=None, allowed=None, first=1000):
    """First characteristic map found by restarted search, or ``None``.

    Raises :class:`SearchExhausted` once ``budget`` is used up.
    """
    budget = Budget.coerce(budget)
    limit, seed = first, 0
    while True:
        remaining = budget.limit - budget.used
        last = limit >= remaining
        run = Budget(min(limit, remaining))
        rng = random.Random(seed) if seed else None
        try:
            found = next(iter_char_maps_gf2(K, l, run, allowed, rng=rng), None)
        except SearchExhausted:
            budget.used += run.used
            if last:
                raise SearchExhausted(f"budget of {budget.limit} nodes exhausted") from None
            limit, seed = 2 * limit, seed + 1
            continue
        budget.used += run.used
        return found


def primitive_vectors(l, height):
    """Primitive vectors of Z^l with entries in [-height, height], sorted."""
    rng = range(-height, height + 1)
    return [v for v in product(rng, repeat=l) if any(v) and is_primitive(v)]


def iter_char_maps_int(K, l, height, budget=None):
    """Yield integer characteristic maps with bounded coordinates.

    Exhaustive only within the height bound; no symmetry reduction is
    applied since the bound is not preserved by GL(l, Z).
    """
    budget = Budget.coerce(budget)
    if K.m == 0:
        yield ()
        return
    if len(K.facets[0]) > l:
        return
    order = search_order(K)
    constraints = constraint_sets(K, order)
    vectors = primitive_vectors(l, height)
    image = [None] * K.m

    def ok(c, w):
        rows = [image[u] for u in c] + [w]
        return len(set(rows)) == len(rows) and is_unimodular_set(rows)

    def rec(i):
        if i == len(order):
            yield tuple(image)
            return
        v = order[i]
        for w in vectors:
            budget.tick()
            if all(ok(c, w) for c in constraints[i] if c):
                image[v] = w
                yield from rec(i + 1)
        image[v] = None

    yield from rec(0)
