"""Finite simplicial complexes stored by their facets, and simplicial maps."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import Budget


def _mask(vertices):
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _members(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class SimplicialComplex:
    """A complex on vertices ``0..m-1`` given by its maximal simplices.

    Instances are immutable and hashable; two complexes compare equal iff
    they have the same vertex count and the same facet set.  Use
    :func:`build_complex` to construct one from arbitrary input.
    """

    __slots__ = ("m", "facets", "_masks", "_hash")

    def __init__(self, m, facets):
        # trusted constructor: facets already sorted, maximal, covering 0..m-1
        self.m = m
        self.facets = tuple(sorted(facets, key=lambda f: (-len(f), f)))
        self._masks = tuple(_mask(f) for f in self.facets)
        self._hash = hash((m, self.facets))

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.m == other.m
            and set(self.facets) == set(other.facets)
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if len(self.facets) > 6:
            shown = ", ".join(map(str, self.facets[:6])) + ", ..."
        else:
            shown = ", ".join(map(str, self.facets))
        return f"SimplicialComplex(m={self.m}, facets=[{shown}])"

    @property
    def dim(self):
        return dimension(self)

    @property
    def facet_masks(self):
        return self._masks

    def contains(self, simplex):
        """Membership: is ``simplex`` a face of some facet?"""
        mask = _mask(simplex)
        if mask >> self.m:
            return False
        return any(mask & ~f == 0 for f in self._masks)

    __contains__ = contains

    def simplices(self, d):
        """Iterate the ``d``-dimensional simplices as sorted tuples."""
        seen = set()
        for f in self.facets:
            if len(f) <= d:
                continue
            for s in combinations(f, d + 1):
                if s not in seen:
                    seen.add(s)
                    yield s

    def simplex_masks(self, d):
        return {_mask(s) for s in self.simplices(d)}

    def edges(self):
        return sorted(self.simplices(1))

    def adjacency(self):
        """Neighbour bitmask per vertex (the 1-skeleton)."""
        adj = [0] * self.m
        for f in self.facets:
            fm = _mask(f)
            for v in f:
                adj[v] |= fm & ~(1 << v)
        return adj


def build_complex(m, facets):
    if m < 1:
        raise ValueError("a complex needs at least one vertex")
    cleaned = set()
    for f in facets:
        s = tuple(sorted(set(int(v) for v in f)))
        for v in s:
            if not 0 <= v < m:
                raise ValueError(f"vertex {v} out of range 0..{m - 1}")
        if s:
            cleaned.add(s)
    return _from_simplices(m, cleaned)


def _from_simplices(m, simplices):
    by_size = sorted(simplices, key=len, reverse=True)
    kept, larger, current, size = [], [], [], None
    for s in by_size:
        if len(s) != size:
            larger += current
            current, size = [], len(s)
        sm = _mask(s)
        if any(sm & ~k == 0 for k in larger):
            continue
        kept.append(s)
        current.append(sm)
    covered = 0
    for km in larger + current:
        covered |= km
    for v in range(m):
        if not covered >> v & 1:
            kept.append((v,))
    return SimplicialComplex(m, kept)


def dimension(K):
    if not K.facets:
        return -1
    return max(len(f) for f in K.facets) - 1


def skeleton(K, d):
    if d < 0:
        raise ValueError("skeleton dimension must be non-negative")
    if d >= dimension(K):
        return K
    # d-faces are pairwise incomparable, and a facet with at most d + 1
    # vertices lies in no other facet, so nothing needs maximalizing
    out = set()
    for f in K.facets:
        if len(f) <= d + 1:
            out.add(f)
        else:
            out.update(combinations(f, d + 1))
    return SimplicialComplex(K.m, out)


def join(K, N):
    shift = K.m
    facets = [f + tuple(v + shift for v in g) for f in K.facets for g in N.facets]
    return SimplicialComplex(K.m + N.m, facets)


def link(K, sigma):
    """Link of ``sigma`` in ``K``.

    Returns ``(L, index)`` where ``index[i]`` is the vertex of ``K`` that
    became vertex ``i`` of ``L``.  The link of a facet is the complex with
    no vertices (``m == 0``).
    """
    sigma = tuple(sorted(set(sigma)))
    if not sigma:
        return K, tuple(range(K.m))
    if sigma not in K:
        raise ValueError(f"{sigma} is not a simplex of the complex")
    sm = _mask(sigma)
    rests = {f & ~sm for f in K.facet_masks if sm & ~f == 0}
    rests.discard(0)
    vertices = 0
    for r in rests:
        vertices |= r
    index = tuple(_members(vertices))
    new_id = {v: i for i, v in enumerate(index)}
    facets = [tuple(new_id[v] for v in _members(r)) for r in rests]
    if not index:
        return SimplicialComplex(0, []), index
    return _from_simplices(len(index), facets), index


def relabel(K, perm):
    """Image of ``K`` under the vertex bijection ``v -> perm[v]``."""
    return SimplicialComplex(K.m, [tuple(sorted(perm[v] for v in f)) for f in K.facets])


# --- named complexes ----------------------------------------------------------


def simplex(n):
    """The full simplex on ``n`` vertices (dimension ``n - 1``)."""
    return SimplicialComplex(n, [tuple(range(n))])


def boundary_of_simplex(n):
    """Boundary of the simplex on ``n >= 2`` vertices."""
    return SimplicialComplex(n, list(combinations(range(n), n - 1)))


def simplex_skeleton(n, d):
    return skeleton(simplex(n), d)


def points(m):
    return SimplicialComplex(m, [(v,) for v in range(m)])


def graph(m, edges):
    return build_complex(m, [tuple(e) for e in edges])


def complete_graph(n):
    if n == 1:
        return points(1)
    return SimplicialComplex(n, list(combinations(range(n), 2)))


def cycle_graph(n):
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph(10, outer + spokes + inner)


def mycielskian(G):
    """Mycielski construction on the 1-skeleton of ``G``."""
    n = G.m
    edges = list(G.edges())
    for u, v in G.edges():
        edges += [(u, n + v), (v, n + u)]
    edges += [(n + i, 2 * n) for i in range(n)]
    return graph(2 * n + 1, edges)


def grotzsch_graph():
    return mycielskian(cycle_graph(5))


# --- simplicial maps ----------------------------------------------------------


@dataclass(frozen=True)
class VertexMap:
    source: SimplicialComplex
    target: SimplicialComplex
    image: tuple

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if len(image) != self.source.m:
            raise ValueError("image must assign every source vertex")
        if any(not 0 <= w < self.target.m for w in image):
            raise ValueError("image refers to a vertex outside the target")

    def __call__(self, v):
        return self.image[v]

    def then(self, other):
        """Composition ``other o self``."""
        if other.source != self.target:
            raise ValueError("maps are not composable")
        return VertexMap(self.source, other.target, tuple(other.image[w] for w in self.image))


def is_nondegenerate_map(f):
    targets = f.target.facet_masks
    for facet in f.source.facets:
        img = _mask(f.image[v] for v in facet)
        if img.bit_count() != len(facet):
            return False
        if not any(img & ~t == 0 for t in targets):
            return False
    return True


def search_order(K):
    """Vertex order used by the map searches.

    A largest facet comes first (its vertices in increasing order); then
    repeatedly the unplaced vertex adjacent to the most placed vertices,
    ties broken by in-facet constraint count and lowest id.
    """
    if not K.facets:
        return []
    adj = K.adjacency()
    order = list(K.facets[0])
    placed = _mask(order)
    while len(order) < K.m:
        best, best_key = None, None
        for v in range(K.m):
            if placed >> v & 1:
                continue
            key = ((adj[v] & placed).bit_count(), adj[v].bit_count(), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def constraint_sets(K, order):
    """For each position, the maximal sets of earlier vertices sharing a facet.

    Entry ``i`` is a list of vertex lists ``C`` such that ``C + [order[i]]``
    lies in a facet; subsets of another entry are dropped.
    """
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for i, v in enumerate(order):
        cands = set()
        for f in K.facets:
            if v in f:
                earlier = tuple(sorted((u for u in f if pos[u] < i), key=pos.get))
                cands.add(earlier)
        masks = {c: _mask(c) for c in cands}
        maximal = [
            list(c)
            for c in cands
            if not any(c2 != c and masks[c] & ~masks[c2] == 0 for c2 in cands)
        ]
        maximal.sort()
        out.append(maximal)
    return out


def exists_nondegenerate_map(K, N, budget=None, allowed=None):
    """Search for a nondegenerate simplicial map ``K -> N``.

    Returns a :class:`VertexMap` or ``None`` when none exists; raises
    :class:`SearchExhausted` when the node budget runs out first.
    ``allowed`` optionally restricts vertex ``v`` to the target vertices in
    the bitmask ``allowed[v]``.
    """
    budget = Budget.coerce(budget)
    if K.m == 0:
        return VertexMap(K, N, ())
    if N.m == 0:
        return None
    order = search_order(K)
    constraints = constraint_sets(K, order)
    tfacets = N.facet_masks
    everything = (1 << N.m) - 1
    cache = {}

    def extensions(img_mask):
        hit = cache.get(img_mask)
        if hit is None:
            hit = 0
            for t in tfacets:
                if img_mask & ~t == 0:
                    hit |= t
            hit &= ~img_mask
            cache[img_mask] = hit
        return hit

    image = [None] * K.m

    def rec(i):
        if i == len(order):
            return True
        v = order[i]
        cand = everything if allowed is None else allowed[v]
        for c in constraints[i]:
            if not c:
                continue
            cand &= extensions(_mask(image[u] for u in c))
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            budget.tick()
            image[v] = low.bit_length() - 1
            if rec(i + 1):
                return True
        image[v] = None
        return False

    if not rec(0):
        return None
    f = VertexMap(K, N, tuple(image))
    assert is_nondegenerate_map(f)
    return f
