"""Characteristic maps and the numbers r_R, r, s_R, gamma, gamma_q.

Over GF(2) a characteristic map to level ``l`` sends each vertex to a
nonzero vector of GF(2)^l so that every facet goes to an independent set;
over Z every facet must go to a unimodular set.  ``r_R(K)`` and ``r(K)``
are the least levels at which such maps exist, and

    dim K + 1 <= r_R(K) <= r(K) <= gamma(K)

where gamma is the chromatic number of the 1-skeleton (a proper coloring
``c`` gives the map ``v -> e_{c(v)}``).  A map to level ``l`` restricts,
for any q, to a q-regular coloring problem: its color classes are the
preimages of the vertices of RU_l, so ``gamma_q(K) <= gamma_q(RU_l)``.
When ``q | l`` the right side is known exactly, which gives the
obstruction lower bound below.
"""

from __future__ import annotations

import random
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget, SearchExhausted
from .coloring import (
    EXACT_LIMIT,
    Bounds,
    Hypergraph,
    chromatic_bounds,
    hypergraph_chromatic,
    is_q_regular,
)
from .complex import SimplicialComplex, complete_graph, grotzsch_graph, join
from .gf2 import GF2Field, canonical_modulus, is_independent, rank, scalar_action, to_bits
from .lattice import is_primitive, is_unimodular_set, lift_01
from .search import find_char_map_gf2, iter_char_maps_gf2, iter_char_maps_int

LIFT_TRIES = 64


def log_bound(gamma):
    """ceil(log2(gamma + 1)): fewest bits whose nonzero vectors number >= gamma."""
    return gamma.bit_length()


# --- characteristic maps --------------------------------------------------------


@dataclass(frozen=True)
class CharMapGF2:
    K: SimplicialComplex
    l: int
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(v) for v in self.images))


@dataclass(frozen=True)
class CharMapInt:
    K: SimplicialComplex
    l: int
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(int(c) for c in v) for v in self.images))


def _check_gf2_shape(c):
    if len(c.images) != c.K.m:
        raise ValueError(f"{len(c.images)} images for {c.K.m} vertices")
    for v in c.images:
        if v < 0 or v >> c.l:
            raise ValueError(f"vector {v} does not live in GF(2)^{c.l}")


def _check_int_shape(c):
    if len(c.images) != c.K.m:
        raise ValueError(f"{len(c.images)} images for {c.K.m} vertices")
    for v in c.images:
        if len(v) != c.l:
            raise ValueError(f"vector {v} does not live in Z^{c.l}")


def first_bad_facet_gf2(c):
    """The first facet whose images are not independent, or ``None``."""
    _check_gf2_shape(c)
    for f in c.K.facets:
        img = [c.images[v] for v in f]
        if 0 in img or not is_independent(img):
            return f
    return None


def first_bad_facet_int(c):
    """The first facet whose images are not unimodular, or ``None``."""
    _check_int_shape(c)
    for f in c.K.facets:
        img = [c.images[v] for v in f]
        if not all(is_primitive(v) for v in img) or not is_unimodular_set(img):
            return f
    return None


def is_characteristic_gf2(c):
    return first_bad_facet_gf2(c) is None


def is_characteristic_int(c):
    return first_bad_facet_int(c) is None


def search_char_map_gf2(K, l, budget=None, allowed=None):
    """A characteristic map ``K -> GF(2)^l`` or ``None`` if there is none.

    Raises :class:`SearchExhausted` if the budget runs out first.
    """
    images = find_char_map_gf2(K, l, budget, allowed)
    if images is None:
        return None
    c = CharMapGF2(K, l, images)
    assert is_characteristic_gf2(c)
    return c


def search_char_map_int(K, l, height, budget=None):
    """Integer characteristic map with coordinates in ``[-height, height]``.

    ``None`` only means there is none within the height bound.
    """
    images = next(iter_char_maps_int(K, l, height, budget), None)
    if images is None:
        return None
    c = CharMapInt(K, l, images)
    assert is_characteristic_int(c)
    return c


def coloring_char_map(K, colors):
    """The map ``v -> e_{colors[v]}`` for a proper coloring, over GF(2)."""
    l = max(colors) + 1
    return CharMapGF2(K, l, tuple(1 << c for c in colors))


class LiftError(ValueError):
    """The 0/1 lift of a GF(2) map is not unimodular on ``facet``."""

    def __init__(self, facet, vectors):
        super().__init__(f"facet {facet} lifts to non-unimodular {vectors}")
        self.facet = facet
        self.vectors = vectors


def lift_char_map(c):
    """0/1 lift of a GF(2) characteristic map (unchecked)."""
    return CharMapInt(c.K, c.l, tuple(lift_01(v, c.l) for v in c.images))


def certify_int_upper(K, c):
    """Lift ``c`` coordinatewise to 0/1 vectors and check it over Z.

    Success certifies ``r(K) <= c.l``.  Raises :class:`LiftError` naming
    the first facet whose lift fails; that cannot happen when dim K <= 2
    since 3x3 0/1 matrices have |det| <= 2.
    """
    if c.K != K:
        raise ValueError("certificate is for a different complex")
    if not is_characteristic_gf2(c):
        raise ValueError("not a GF(2) characteristic map")
    lifted = lift_char_map(c)
    bad = first_bad_facet_int(lifted)
    if bad is not None:
        raise LiftError(bad, [lifted.images[v] for v in bad])
    return lifted


def find_liftable_char_map(K, l, budget=None, allowed=None, tries=LIFT_TRIES):
    """A GF(2) characteristic map at level ``l`` whose 0/1 lift works over Z.

    Tries the restarted search's witness first, then up to ``tries``
    further witnesses.  Returns ``(gf2_map, int_map)`` or ``None``.
    """
    budget = Budget.coerce(budget)
    first = search_char_map_gf2(K, l, budget, allowed)
    if first is None:
        return None
    try:
        return first, certify_int_upper(K, first)
    except LiftError:
        pass
    for seed in range(1, tries):
        run = Budget(min(20_000, budget.limit - budget.used))
        try:
            found = next(iter_char_maps_gf2(K, l, run, allowed, rng=random.Random(seed)), None)
        except SearchExhausted:
            found = None
        budget.used += run.used
        if found is not None:
            c = CharMapGF2(K, l, found)
            try:
                return c, certify_int_upper(K, c)
            except LiftError:
                pass
        if budget.used >= budget.limit:
            break
    return None


# --- r_R and r ----------------------------------------------------------------------


@dataclass(frozen=True)
class RealNumber:
    """Outcome of the r_R computation: exact when ``lower == upper``."""

    lower: int
    upper: int
    witness: CharMapGF2

    @property
    def exact(self):
        return self.lower == self.upper


_memo = {}
_memo_lock = threading.Lock()


def _start_level(K, budget):
    gb = chromatic_bounds(K, budget)
    return max(K.dim + 1, log_bound(gb.lower)), gb


def real_number(K, budget=None, max_l=None, floor=None):
    """Bounds on r_R(K) with a witness at the upper bound.

    Levels are tried upward from ``max(dim + 1, ceil(log2(gamma + 1)))``,
    or from ``floor`` if that is a larger certified lower bound; the first
    level with a map is r_R.  When the budget (or ``max_l``) stops the
    climb, the result is an interval.
    """
    budget = Budget.coerce(budget)
    key = (K.m, K.facets)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None and (max_l is None or hit.exact):
        return hit
    start, gb = _start_level(K, budget)
    if floor is not None:
        start = max(start, floor)
    upper_map = coloring_char_map(K, gb.coloring) if gb.coloring else None
    if upper_map is None or upper_map.l > K.m:
        upper_map = CharMapGF2(K, K.m, tuple(1 << i for i in range(K.m)))
    lower = start
    top = upper_map.l if max_l is None else min(upper_map.l, max_l)
    result = None
    for l in range(start, top + 1):
        try:
            c = search_char_map_gf2(K, l, budget)
        except SearchExhausted:
            break
        if c is None:
            lower = l + 1
            continue
        result = RealNumber(l, l, c)
        break
    if result is None:
        if lower >= upper_map.l:
            result = RealNumber(upper_map.l, upper_map.l, upper_map)
        else:
            result = RealNumber(lower, upper_map.l, upper_map)
    if result.exact:
        with _memo_lock:
            _memo[key] = result
    return result


def minimal_char_map_gf2(K, budget=None):
    res = real_number(K, budget)
    if not res.exact:
        raise SearchExhausted("r_R not determined", res.lower, res.upper)
    return res.witness


def r_real(K, budget=None):
    """r_R(K); raises :class:`SearchExhausted` with the interval if undecided."""
    return minimal_char_map_gf2(K, budget).l


def s_real(K, budget=None):
    return K.m - r_real(K, budget)


@dataclass(frozen=True)
class RBounds:
    lower: int
    upper: int
    witness: CharMapInt | None = None

    @property
    def exact(self):
        return self.lower == self.upper


def r_bounds(K, budget=None):
    """Certified bounds on the integer number r(K).

    The lower bound is r_R (or its lower bound) joined with the
    obstruction bound.  The upper bound comes from a 0/1 lift of a GF(2)
    witness at the lowest level where one lifts, else from a proper
    coloring.  For dim K <= 2 every lift works, so the bounds meet.
    """
    budget = Budget.coerce(budget)
    obstruction = obstruction_lower_bound(K, budget)
    real = real_number(K, budget, floor=obstruction)
    lower = max(real.lower, obstruction)
    gb = chromatic_bounds(K, budget)
    if gb.coloring:
        best = lift_char_map(coloring_char_map(K, gb.coloring))
    else:
        best = CharMapInt(K, K.m, tuple(tuple(int(i == j) for j in range(K.m)) for i in range(K.m)))
    if best.l > K.m:
        best = CharMapInt(K, K.m, tuple(tuple(int(i == j) for j in range(K.m)) for i in range(K.m)))
    assert is_characteristic_int(best)
    try:
        witness = certify_int_upper(K, real.witness)
        if witness.l < best.l:
            best = witness
    except LiftError:
        pass
    if real.exact:
        for l in range(real.upper, best.l):
            try:
                found = find_liftable_char_map(K, l, Budget(min(budget.limit, 500_000)))
            except SearchExhausted:
                break
            if found is not None:
                best = found[1]
                break
    return RBounds(lower, best.l, best)


def obstruction_lower_bound(K, budget=None, q_list=None):
    """Least level not excluded by dim K + 1 or a gamma_q count.

    Level ``l`` is excluded when gamma_q(K) > (2^l - 1)/(2^q - 1) for some
    ``q`` dividing ``l`` (q = 1 is the chromatic bound).  Exclusion is
    downward closed, so r_R exceeds every excluded level.
    """
    budget = Budget.coerce(budget)
    d = K.dim
    qs = range(1, max(d, 1) + 1) if q_list is None else [q for q in q_list if q >= 1]
    best = d + 1
    for q in qs:
        if q > d:
            continue
        try:
            lo = gamma_q_bounds(K, q, budget).lower
        except SearchExhausted as e:
            lo = e.lower or 1
        for l in range(q, K.m + 1, q):
            if lo * ((1 << q) - 1) > (1 << l) - 1:
                best = max(best, l + 1)
    return best


def is_optimal(K, budget=None):
    """``True``/``False`` when r(K) = dim K + 1 is decided, else ``None``."""
    b = r_bounds(K, budget)
    if b.upper == K.dim + 1:
        return True
    if b.lower > K.dim + 1:
        return False
    return None


# --- gamma_q and spreads ----------------------------------------------------------------


def gamma_q_bounds(K, q, budget=None, fast=True):
    """Bounds on gamma_q(K), the fewest colors with no monochromatic q-simplex."""
    if q < 1:
        raise ValueError("q must be positive")
    if q > K.dim:
        return Bounds(1, 1, (0,) * K.m)
    H = Hypergraph.of_complex(K, q)
    if fast and H.complete:
        k = -(-K.m // q)
        return Bounds(k, k, tuple(v // q for v in range(K.m)))
    return hypergraph_chromatic(H, budget, EXACT_LIMIT if q == 1 else None)


def gamma_q(K, q, budget=None, fast=True):
    b = gamma_q_bounds(K, q, budget, fast)
    if not b.exact:
        raise SearchExhausted(f"gamma_{q} not determined", b.lower, b.upper)
    return b.lower


def gamma(K, budget=None):
    return gamma_q(K, 1, budget)


@dataclass(frozen=True)
class SpreadColoring:
    """A q-regular coloring of RU_l; ``colors[i]`` colors the vector ``i + 1``."""

    l: int
    q: int
    colors: tuple

    @property
    def classes(self):
        out = [[] for _ in range(max(self.colors) + 1)]
        for i, c in enumerate(self.colors):
            out[c].append(i + 1)
        return out


def spread_coloring(l, q):
    """Color GF(2)^l - 0 by GF(2^q)-lines, numbered in order of least element."""
    if q < 1 or l % q:
        raise ValueError(f"q={q} does not divide l={l}")
    F = GF2Field(q, canonical_modulus(q))
    colors = [-1] * ((1 << l) - 1)
    n = 0
    for v in range(1, 1 << l):
        if colors[v - 1] >= 0:
            continue
        for c in range(1, 1 << q):
            colors[scalar_action(F, c, v, l) - 1] = n
        n += 1
    return SpreadColoring(l, q, tuple(colors))


def is_q_regular_real(l, colors, q):
    """Direct check: no q+1 independent vectors of GF(2)^l share a color."""
    if len(colors) != (1 << l) - 1:
        raise ValueError("one color per nonzero vector expected")
    classes = {}
    for i, c in enumerate(colors):
        classes.setdefault(c, []).append(i + 1)
    for members in classes.values():
        if rank(members) <= q:
            continue
        for s in combinations(members, q + 1):
            if is_independent(s):
                return False
    return True


def is_q_regular_real_skeleton(l, colors, q):
    """Same check against the materialized q-skeleton of RU_l."""
    from .universal import real_universal_skeleton

    return is_q_regular(real_universal_skeleton(l, q), colors, q)


def gamma_q_universal(l, q):
    """``(lower, exact)`` for gamma_q(RU_l); ``exact`` is ``None`` if unknown.

    A color class has no q+1 independent vectors, so it lies in a q-space
    and has at most 2^q - 1 members.  Spreads attain this when q | l, and
    RU_l has no q-simplex at all when q >= l.
    """
    if l < 1 or q < 1:
        raise ValueError("l and q must be positive")
    if q >= l:
        return 1, 1
    lower = -(-((1 << l) - 1) // ((1 << q) - 1))
    return lower, lower if l % q == 0 else None


# --- full report --------------------------------------------------------------------


@dataclass
class InvariantReport:
    m: int
    dim: int
    gamma: tuple
    gamma_q: dict
    r_real: tuple
    s_real: tuple
    obstruction: int
    r: tuple
    r_exact: bool
    s: tuple
    optimal: bool | None
    witnesses: dict = field(default_factory=dict)
    budget: int = 0

    @property
    def exact(self):
        return (
            self.r_real[0] == self.r_real[1]
            and self.r_exact
            and self.gamma[0] == self.gamma[1]
            and all(lo == hi for lo, hi in self.gamma_q.values())
        )

    def as_dict(self):
        return {
            "m": self.m,
            "dim": self.dim,
            "gamma": list(self.gamma),
            "gamma_q": {str(q): list(b) for q, b in sorted(self.gamma_q.items())},
            "r_real": list(self.r_real),
            "s_real": list(self.s_real),
            "obstruction_lower_bound": self.obstruction,
            "r": list(self.r),
            "r_exact": self.r_exact,
            "s": list(self.s),
            "optimal": self.optimal,
            "exact": self.exact,
            "witnesses": self.witnesses,
            "budget": self.budget,
        }


def invariant_report(K, budget=None, max_l=None, q_list=None, threads=1):
    """All invariants of ``K`` with certified bounds and witnesses."""
    budget = Budget.coerce(budget)
    limit = budget.limit
    d = K.dim
    qs = sorted(set(range(2, d + 1) if q_list is None else [q for q in q_list if q >= 2]))
    if threads > 1 and qs:
        with ThreadPoolExecutor(threads) as pool:
            gq = dict(zip(qs, pool.map(lambda q: gamma_q_bounds(K, q, Budget(limit)), qs)))
    else:
        gq = {q: gamma_q_bounds(K, q, Budget(limit)) for q in qs}
    gb = chromatic_bounds(K, Budget(limit))
    obstruction = max(
        [d + 1, log_bound(gb.lower)]
        + [_excluded(K.m, q, b.lower) for q, b in gq.items()]
    )
    real = real_number(K, Budget(limit), max_l, floor=obstruction)
    lower_real = max(real.lower, obstruction)
    upper_real = real.upper
    if max_l is None or real.exact:
        rb = r_bounds(K, Budget(limit)) if d <= 2 or real.exact else None
    else:
        rb = None
    if rb is None:
        r_lo, r_hi, int_witness = lower_real, gb.upper, lift_char_map(coloring_char_map(K, gb.coloring))
    else:
        r_lo, r_hi, int_witness = max(rb.lower, lower_real), rb.upper, rb.witness
    if d <= 2 and real.exact:
        r_lo = lower_real
    if r_hi == d + 1:
        optimal = True
    elif r_lo > d + 1:
        optimal = False
    else:
        optimal = None
    witnesses = {
        "gf2": {"l": real.witness.l, "vectors": [to_bits(v, real.witness.l) for v in real.witness.images]},
        "int": {"l": int_witness.l, "vectors": [list(v) for v in int_witness.images]},
    }
    gamma_table = {1: (gb.lower, gb.upper)}
    gamma_table.update({q: (b.lower, b.upper) for q, b in gq.items()})
    return InvariantReport(
        m=K.m,
        dim=d,
        gamma=(gb.lower, gb.upper),
        gamma_q=gamma_table,
        r_real=(lower_real, upper_real),
        s_real=(K.m - upper_real, K.m - lower_real),
        obstruction=obstruction,
        r=(r_lo, r_hi),
        r_exact=r_lo == r_hi,
        s=(K.m - r_hi, K.m - r_lo),
        optimal=optimal,
        witnesses=witnesses,
        budget=limit,
    )


def _excluded(m, q, lo):
    best = 0
    for l in range(q, m + 1, q):
        if lo * ((1 << q) - 1) > (1 << l) - 1:
            best = l + 1
    return best


# --- the K4 * Grotzsch counterexample ------------------------------------------------


@dataclass
class CounterexampleReport:
    r_real_k4: int
    r_k4: int
    r_real_grotzsch: int
    r_grotzsch: int
    lower: int
    refuted_below: bool
    gf2: CharMapGF2
    integer: CharMapInt
    r_real_join: int
    r_join: int
    source: str
    claims: list

    @property
    def gap(self):
        return self.r_real_k4 + self.r_real_grotzsch - self.r_real_join

    @property
    def ok(self):
        return all(ok for _, ok in self.claims)


def counterexample_complex():
    """K4 * Grotzsch with the Grotzsch graph first (vertices 0..10)."""
    return join(grotzsch_graph(), complete_graph(4))


def counterexample_allowed(l=5):
    """Grotzsch images with last coordinate 1; K4 images among e_1..e_{l-1}.

    Then every K4 vector and pairwise sum has weight <= 2 and last entry
    0, so the Grotzsch edge sums (last entry 0) must have weight >= 3.
    """
    top = 1 << (l - 1)
    high = sum(1 << v for v in range(top, 1 << l))
    units = sum(1 << (1 << i) for i in range(l - 1))
    return [high] * 11 + [units] * 4


def has_counterexample_shape(c):
    """Does ``c`` have the hyperplane shape of :func:`counterexample_allowed`?"""
    allowed = counterexample_allowed(c.l)
    return all(allowed[v] >> x & 1 for v, x in enumerate(c.images))


def verify_counterexample(budget=None, certificate=None):
    """Check r_R = r = 5 for K4 * Grotzsch against 3 + 3 for the factors.

    ``certificate`` is a GF(2) map on :func:`counterexample_complex` at
    level 5 (e.g. the committed golden one); without it one is searched
    for in the hyperplane shape.
    """
    budget = Budget.coerce(budget)
    K4, G = complete_graph(4), grotzsch_graph()
    J = counterexample_complex()
    claims = []
    rk = r_bounds(K4, budget)
    rg = r_bounds(G, budget)
    r_real_k4, r_real_g = r_real(K4, budget), r_real(G, budget)
    claims.append(("r_R(K4) = r(K4) = 3", r_real_k4 == 3 and rk.exact and rk.lower == 3))
    claims.append(("r_R(Grotzsch) = r(Grotzsch) = 3", r_real_g == 3 and rg.exact and rg.lower == 3))
    # r_R(K * N) >= r_R(K) + dim N + 1, with K = Grotzsch, N = K4
    lower = r_real_g + K4.dim + 1
    claims.append(("join lower bound = 5", lower == 5))
    refuted = search_char_map_gf2(J, lower - 1, budget) is None
    claims.append(("no GF(2) map at level 4", refuted))
    if certificate is None:
        found = find_liftable_char_map(J, 5, budget, counterexample_allowed(5))
        if found is None:
            raise AssertionError("no hyperplane-shaped certificate at level 5")
        gf2_map, int_map = found
        source = "search"
    else:
        gf2_map = certificate
        int_map = certify_int_upper(J, gf2_map)
        source = "certificate"
    claims.append(("GF(2) certificate at level 5", is_characteristic_gf2(gf2_map) and gf2_map.l == 5))
    claims.append(("Grotzsch side has last entry 1, K4 side unit vectors", has_counterexample_shape(gf2_map)))
    claims.append(("0/1 lift is unimodular on every facet", is_characteristic_int(int_map)))
    r_real_join = r_join = gf2_map.l if gf2_map.l == lower else None
    claims.append(("r_R(join) = r(join) = 5 < 6", r_join == 5 and r_real_k4 + r_real_g == 6))
    return CounterexampleReport(
        r_real_k4, rk.lower, r_real_g, rg.lower, lower, refuted,
        gf2_map, int_map, r_real_join, r_join, source, claims,
    )
