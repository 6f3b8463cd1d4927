"""The universal complexes over GF(2) (materialized) and over Z (predicate only).

Vertex ``i`` of the real universal complex RU_l is the nonzero vector with
mask ``i + 1``; its simplices are the linearly independent sets.  The
integer universal complex U_l has infinitely many vertices and is only
ever queried through :func:`is_simplex_int`.
"""

from __future__ import annotations

from math import factorial, prod

from .complex import SimplicialComplex, VertexMap, join, link
from .gf2 import in_span, is_independent, reduce_basis
from .lattice import is_primitive, is_unimodular_set, mod2_reduce

MAX_MATERIALIZE = 12
MAX_FACETS = 2_000_000


def vertex_of(v):
    return v - 1


def vector_of(i):
    return i + 1


def count_independent(l, k):
    """Number of unordered independent k-subsets of GF(2)^l."""
    if k > l:
        return 0
    return prod((1 << l) - (1 << i) for i in range(k)) // factorial(k)


def independent_sets(l, k):
    """Independent k-subsets of GF(2)^l, as increasing mask tuples."""
    top = 1 << l

    def rec(chosen, basis, start):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for v in range(start, top):
            if in_span(v, basis):
                continue
            nb = dict(basis)
            w = v
            while w:
                t = w.bit_length() - 1
                if t not in nb:
                    nb[t] = w
                    break
                w ^= nb[t]
            chosen.append(v)
            yield from rec(chosen, nb, v + 1)
            chosen.pop()

    yield from rec([], {}, 1)


def real_universal_skeleton(l, d=None):
    """The d-skeleton of RU_l (the full complex when ``d`` is None)."""
    if not 1 <= l <= MAX_MATERIALIZE:
        raise ValueError(f"RU_{l} is too large to materialize (l <= {MAX_MATERIALIZE})")
    if d is None or d > l - 1:
        d = l - 1
    if d < 0:
        raise ValueError("skeleton dimension must be non-negative")
    n = count_independent(l, d + 1)
    if n > MAX_FACETS:
        raise ValueError(f"the {d}-skeleton of RU_{l} has {n} facets (limit {MAX_FACETS})")
    facets = [tuple(v - 1 for v in s) for s in independent_sets(l, d + 1)]
    return SimplicialComplex((1 << l) - 1, facets)


def is_simplex_real(l, vs):
    vs = list(vs)
    if any(v <= 0 or v >> l for v in vs):
        return False
    return len(set(vs)) == len(vs) and is_independent(vs)


def is_simplex_int(l, vs):
    vs = [tuple(v) for v in vs]
    if any(len(v) != l for v in vs):
        return False
    if len(set(vs)) != len(vs):
        return False
    return all(is_primitive(v) for v in vs) and is_unimodular_set(vs)


def reduction_map(vs):
    """Coordinatewise reduction mod 2 of integer vectors."""
    out = []
    for v in vs:
        r = mod2_reduce(v)
        if r == 0:
            raise ValueError(f"{tuple(v)} reduces to zero mod 2")
        out.append(r)
    return out


# --- link and join maps -----------------------------------------------------


def complete_basis(l, sigma):
    """Extend independent ``sigma`` to a basis, adding least vectors first."""
    if not is_independent(sigma):
        raise ValueError("sigma must be an independent set")
    basis = list(sigma)
    echelon = reduce_basis(basis)
    v = 1
    while len(basis) < l:
        if not in_span(v, echelon):
            basis.append(v)
            echelon = reduce_basis(basis)
        v += 1
    return basis


def coordinates(v, basis):
    """Coordinates of ``v`` in ``basis`` (a list of l vectors), as a mask."""
    # solve by elimination on augmented vectors: (vector, coordinate-mask)
    rows = {}
    for j, b in enumerate(basis):
        w, c = b, 1 << j
        while w:
            t = w.bit_length() - 1
            if t not in rows:
                rows[t] = (w, c)
                break
            w ^= rows[t][0]
            c ^= rows[t][1]
    out = 0
    while v:
        t = v.bit_length() - 1
        w, c = rows[t]
        v ^= w
        out ^= c
    return out


def real_link(l, sigma):
    """``link(RU_l, sigma)`` with its vertex index map (into RU_l)."""
    U = real_universal_skeleton(l)
    return link(U, [vertex_of(v) for v in sigma])


def link_equivalence_maps(l, sigma):
    """Nondegenerate maps between RU_{l-k} and ``link(RU_l, sigma)``.

    ``sigma`` is completed to a basis b_1..b_l (sigma first).  Then
    ``p(w) = sum_j w_j b_{k+j}`` and ``q(u)`` drops the first ``k``
    coordinates of ``u`` in that basis.  Returns ``(p, q)`` as
    :class:`VertexMap` objects; ``q o p`` is the identity.
    """
    sigma = list(sigma)
    k = len(sigma)
    if not is_independent(sigma) or any(v <= 0 or v >> l for v in sigma):
        raise ValueError("sigma must be a set of independent nonzero vectors")
    L, index = real_link(l, sigma)
    if k == l:
        empty = SimplicialComplex(0, [])
        return VertexMap(empty, L, ()), VertexMap(L, empty, ())
    basis = complete_basis(l, sigma)
    R = real_universal_skeleton(l - k)
    link_id = {vector_of(u): i for i, u in enumerate(index)}
    p_img = []
    for w in range(1, 1 << (l - k)):
        v = 0
        for j in range(l - k):
            if w >> j & 1:
                v ^= basis[k + j]
        p_img.append(link_id[v])
    q_img = []
    for u in index:
        c = coordinates(vector_of(u), basis) >> k
        q_img.append(vertex_of(c))
    return VertexMap(R, L, tuple(p_img)), VertexMap(L, R, tuple(q_img))


def join_embedding(l, k):
    """Vertex map RU_l * RU_k -> RU_{l+k}, ``v -> (v|0)``, ``w -> (0|w)``."""
    A = real_universal_skeleton(l)
    B = real_universal_skeleton(k)
    J = join(A, B)
    T = real_universal_skeleton(l + k)
    img = [vertex_of(v) for v in range(1, 1 << l)]
    img += [vertex_of(w << l) for w in range(1, 1 << k)]
    return VertexMap(J, T, tuple(img))


def real_to_int_search(l, height, budget=None):
    """Height-bounded exploratory search for a nondegenerate map RU_l -> U_l.

    Integer images range over primitive vectors with coordinates in
    ``[-height, height]``.  Returns a tuple of images or ``None`` when no
    such map exists *within the height bound*; this says nothing about
    larger heights.
    """
    from .invariants import search_char_map_int

    return search_char_map_int(real_universal_skeleton(l), l, height, budget)

