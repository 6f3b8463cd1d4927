"""Exact colorings of complexes: proper colorings and q-regular colorings.

A q-regular coloring forbids monochromatic q-simplices, i.e. it is a
proper coloring of the (q+1)-uniform hypergraph of q-simplices; q = 1 is
ordinary graph coloring of the 1-skeleton.  Both go through the same
branch-and-bound, whose lower bound is the larger of a greedily grown
complete core (every (q+1)-subset an edge, so it needs ceil(|W|/q)
colors) and the counting bound ceil(n / alpha).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .budget import Budget, SearchExhausted

EXACT_LIMIT = 40


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int
    coloring: tuple = ()

    @property
    def exact(self):
        return self.lower == self.upper


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _ceil_div(a, b):
    return -(-a // b)


class Hypergraph:
    """Vertices ``0..n-1`` and a set of edge bitmasks, all of size ``r``."""

    def __init__(self, n, edges, r):
        self.n = n
        self.r = r
        self.edges = frozenset(edges)
        inc = [[] for _ in range(n)]
        for e in self.edges:
            for v in _bits(e):
                inc[v].append(e & ~(1 << v))
        self.incident = inc

    @classmethod
    def of_complex(cls, K, q):
        return cls(K.m, K.simplex_masks(q), q + 1)

    @property
    def complete(self):
        return len(self.edges) == comb(self.n, self.r)

    def degree(self, v):
        return len(self.incident[v])

    def complete_core(self):
        """Greedy vertex set all of whose r-subsets are edges."""
        order = sorted(range(self.n), key=lambda v: (-self.degree(v), v))
        core = []
        for v in order:
            if self._extends_core(core, v):
                core.append(v)
        return core

    def _extends_core(self, core, v):
        for sub in combinations(core, self.r - 1):
            e = 1 << v
            for u in sub:
                e |= 1 << u
            if e not in self.edges:
                return False
        return True

    def core_bound(self):
        q = self.r - 1
        if not self.edges:
            return 1, []
        core = self.complete_core()
        return max(1, _ceil_div(len(core), q)), core

    def max_independent(self, budget=None):
        """Largest vertex set containing no edge (exact, budgeted)."""
        budget = Budget.coerce(budget)
        best = [0]

        def rec(chosen, cand, size):
            if size > best[0]:
                best[0] = size
            while cand:
                if size + cand.bit_count() <= best[0]:
                    return
                v = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                budget.tick()
                nxt = cand
                withv = chosen | (1 << v)
                for rest in self.incident[v]:
                    out = rest & ~withv
                    if out and out & (out - 1) == 0:
                        nxt &= ~out
                rec(withv, nxt, size + 1)

        rec(0, (1 << self.n) - 1, 0)
        return best[0]

    def conflicts(self, colors, v, c):
        """Would giving ``v`` color ``c`` complete a monochromatic edge?"""
        for rest in self.incident[v]:
            if all(colors[u] == c for u in _bits(rest)):
                return True
        return False

    def greedy(self, order):
        colors = [None] * self.n
        for v in order:
            c = 0
            while self.conflicts(colors, v, c):
                c += 1
            colors[v] = c
        return colors

    def dsatur(self):
        """Saturation-degree greedy coloring for graphs (r = 2)."""
        adj = [0] * self.n
        for e in self.edges:
            a, b = _bits(e)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        colors = [None] * self.n
        seen = [set() for _ in range(self.n)]
        for _ in range(self.n):
            v = max(
                (u for u in range(self.n) if colors[u] is None),
                key=lambda u: (len(seen[u]), adj[u].bit_count(), -u),
            )
            c = 0
            while c in seen[v]:
                c += 1
            colors[v] = c
            for w in _bits(adj[v]):
                seen[w].add(c)
        return colors

    def search_order(self, core):
        order = list(core)
        placed = set(order)
        touched = [0] * self.n
        for v in order:
            for rest in self.incident[v]:
                for u in _bits(rest):
                    touched[u] += 1
        while len(order) < self.n:
            v = max(
                (u for u in range(self.n) if u not in placed),
                key=lambda u: (touched[u], self.degree(u), -u),
            )
            order.append(v)
            placed.add(v)
            for rest in self.incident[v]:
                for u in _bits(rest):
                    touched[u] += 1
        return order

    def colorable(self, k, order, budget, alpha=None):
        """A coloring with at most ``k`` colors, or ``None``.

        Colors are introduced in increasing order, which removes the
        symmetric group on colors from the search tree.
        """
        n = self.n
        alpha = n if alpha is None else alpha
        pos = {v: i for i, v in enumerate(order)}
        # edges checked when their last vertex (in order) is colored
        closing = [[] for _ in range(n)]
        for e in self.edges:
            last = max(_bits(e), key=pos.get)
            closing[last].append(e & ~(1 << last))
        classes = [0] * k
        sizes = [0] * k
        colors = [None] * n

        def rec(i, used):
            if i == n:
                return True
            remaining = n - i
            capacity = sum(alpha - sizes[c] for c in range(used)) + (k - used) * alpha
            if remaining > capacity:
                return False
            v = order[i]
            for c in range(min(used + 1, k)):
                cls = classes[c]
                if any(rest & ~cls == 0 for rest in closing[v]):
                    continue
                budget.tick()
                classes[c] |= 1 << v
                sizes[c] += 1
                colors[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
                sizes[c] -= 1
            colors[v] = None
            return False

        if rec(0, 0):
            return tuple(colors)
        return None


def hypergraph_chromatic(H, budget=None, exact_limit=None):
    """Exact chromatic number of ``H`` as :class:`Bounds`.

    When the budget runs out (or ``n`` exceeds ``exact_limit``) the
    returned bounds may be non-exact rather than raising.
    """
    budget = Budget.coerce(budget)
    if H.n == 0:
        return Bounds(0, 0, ())
    if not H.edges:
        return Bounds(1, 1, (0,) * H.n)
    lower, core = H.core_bound()
    order = H.search_order(core)
    best = H.dsatur() if H.r == 2 else H.greedy(order)
    upper = max(best) + 1
    if lower == upper:
        return Bounds(lower, upper, tuple(best))
    alpha = None
    try:
        alpha = H.max_independent(Budget(min(budget.limit, 200_000)))
        lower = max(lower, _ceil_div(H.n, alpha))
    except SearchExhausted:
        pass
    if lower == upper or (exact_limit is not None and H.n > exact_limit):
        return Bounds(lower, upper, tuple(best))
    try:
        for k in range(lower, upper):
            found = H.colorable(k, order, budget, alpha)
            if found is not None:
                return Bounds(k, k, found)
            lower = k + 1
    except SearchExhausted:
        return Bounds(lower, upper, tuple(best))
    return Bounds(upper, upper, tuple(best))


def chromatic_bounds(K, budget=None, exact_limit=EXACT_LIMIT):
    return hypergraph_chromatic(Hypergraph.of_complex(K, 1), budget, exact_limit)


def chromatic_number(K, budget=None, exact_limit=EXACT_LIMIT):
    """Minimal number of colors of a proper coloring of the 1-skeleton.

    Raises :class:`SearchExhausted` carrying the (clique, greedy) bound
    pair when the value could not be pinned down.
    """
    b = chromatic_bounds(K, budget, exact_limit)
    if not b.exact:
        raise SearchExhausted("chromatic number not determined", b.lower, b.upper)
    return b.lower


def is_proper_coloring(K, colors):
    return all(colors[a] != colors[b] for a, b in K.simplices(1))


def is_q_regular(K, colors, q):
    """No q-simplex of ``K`` has all its vertices the same color."""
    if len(colors) != K.m:
        raise ValueError("one color per vertex expected")
    for s in K.simplices(q):
        c = colors[s[0]]
        if all(colors[v] == c for v in s[1:]):
            return False
    return True
