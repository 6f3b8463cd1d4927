"""Good pairs of vector sets and the transformations that preserve them.

A pair (S, T) of sets of nonzero vectors in GF(2)^l is good when the
shadows (elements together with all pairwise sums) of S and of T are
disjoint.  Sending the vertices of K_p and K_q to S and T is then exactly
a characteristic map of the join K_p * K_q.

Every transformation checks its output (see ``VERIFY``).  The checks do
fire: t_mix can break goodness once one side has three or more vectors,
e.g. a relation x_a + x_b + x_alpha = y_j turns into a shadow collision.
t_one never does, its new shadow being contained in the old one.

Indices into S and T are 0-based throughout.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations

from .budget import Budget
from .complex import complete_graph, join
from .invariants import CharMapGF2, is_characteristic_gf2, log_bound, search_char_map_gf2

VERIFY = True


@dataclass(frozen=True)
class GoodPair:
    """A candidate pair; use :func:`is_good_pair` to check it."""

    l: int
    S: tuple
    T: tuple

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(self.S))
        object.__setattr__(self, "T", tuple(self.T))


class TransformError(RuntimeError):
    """A transformation produced a pair that is not good."""


def shadow(X):
    X = list(X)
    if len(set(X)) != len(X):
        raise ValueError("shadow of a set with repeated elements")
    out = set(X)
    for a, b in combinations(X, 2):
        out.add(a ^ b)
    return out


def is_good_pair(P):
    for X in (P.S, P.T):
        if len(set(X)) != len(X) or any(v <= 0 or v >> P.l for v in X):
            return False
    return not shadow(P.S) & shadow(P.T)


def _checked(P, op):
    if VERIFY and not is_good_pair(P):
        raise TransformError(f"{op} produced a pair that is not good: {P}")
    return P


def _require_good(P):
    if not is_good_pair(P):
        raise ValueError("input is not a good pair")


def _index(X, i, name):
    if not 0 <= i < len(X):
        raise IndexError(f"{name} index {i} out of range 0..{len(X) - 1}")


def _mix(P, alpha, gamma):
    xa, yg = P.S[alpha], P.T[gamma]
    S = tuple(x if i == alpha else x ^ yg for i, x in enumerate(P.S))
    T = tuple(y if j == gamma else y ^ xa for j, y in enumerate(P.T))
    return GoodPair(P.l, S, T)


def t_mix(P, alpha, gamma):
    """x_i += y_gamma for i != alpha and y_j += x_alpha for j != gamma."""
    _require_good(P)
    _index(P.S, alpha, "S")
    _index(P.T, gamma, "T")
    return _checked(_mix(P, alpha, gamma), "t_mix")


def t_one(P, side, alpha):
    """On one side, add the alpha-th element to every other element."""
    _require_good(P)
    if side not in (1, 2):
        raise ValueError("side must be 1 (S) or 2 (T)")
    X = P.S if side == 1 else P.T
    _index(X, alpha, "S" if side == 1 else "T")
    xa = X[alpha]
    X = tuple(x if i == alpha else x ^ xa for i, x in enumerate(X))
    Q = GoodPair(P.l, X, P.T) if side == 1 else GoodPair(P.l, P.S, X)
    return _checked(Q, "t_one")


def _shift_indices(P, alpha, beta, gamma, delta):
    if len(P.S) < 2 or len(P.T) < 2:
        raise ValueError("double shift needs |S| >= 2 and |T| >= 2")
    for i, name in ((alpha, "S"), (beta, "S")):
        _index(P.S, i, name)
    for j, name in ((gamma, "T"), (delta, "T")):
        _index(P.T, j, name)
    if alpha == beta or gamma == delta:
        raise ValueError("need alpha != beta and gamma != delta")


def double_shift(P, alpha, beta, gamma, delta):
    """Add x_beta to y_gamma and y_delta; everything else stays fixed.

    This is the net effect the four-fold composite
    :func:`double_shift_literal` is meant to have; that composite moves
    other vectors as well.  The shifted pair is not good in general, so
    it is checked and :class:`TransformError` raised when it is not.
    ``alpha`` is only validated.  The operation is an involution.
    """
    _require_good(P)
    _shift_indices(P, alpha, beta, gamma, delta)
    xb = P.S[beta]
    T = tuple(y ^ xb if j in (gamma, delta) else y for j, y in enumerate(P.T))
    return _checked(GoodPair(P.l, P.S, T), "double_shift")


def double_shift_literal(P, alpha, beta, gamma, delta):
    """``t_mix(alpha, delta) o t_mix(beta, gamma) o t_mix(beta, delta) o t_mix(alpha, gamma)``.

    The innermost map t_mix(alpha, gamma) is applied first.
    """
    _require_good(P)
    _shift_indices(P, alpha, beta, gamma, delta)
    Q = _mix(P, alpha, gamma)
    Q = _mix(Q, beta, delta)
    Q = _mix(Q, beta, gamma)
    return _checked(_mix(Q, alpha, delta), "double_shift_literal")


@dataclass(frozen=True)
class PushResult:
    pair: GoodPair
    flagged: str
    steps: tuple

    @property
    def loops(self):
        return len(self.steps)


def push_into_hyperplane(P, coordinate):
    """Transform P until S or T lies in the hyperplane ``v[coordinate] = 0``.

    Returns the new pair, which side ended up inside (``"S"`` or ``"T"``)
    and the list of moves made.  Needs |S| > 1 and an even |T| > 1.
    """
    _require_good(P)
    if not 0 <= coordinate < P.l:
        raise IndexError(f"coordinate {coordinate} out of range 0..{P.l - 1}")
    if len(P.S) < 2 or len(P.T) < 2 or len(P.T) % 2:
        raise ValueError("need |S| > 1 and |T| > 1 even")
    bit = 1 << coordinate

    def outside(X):
        return [i for i, v in enumerate(X) if v & bit]

    steps = []
    out_t = outside(P.T)
    if len(out_t) % 2:
        P = t_one(P, 2, out_t[0])
        steps.append(("t_one", 2, out_t[0]))
    while True:
        out_t = outside(P.T)
        if not out_t:
            return PushResult(P, "T", tuple(steps))
        out_s = outside(P.S)
        if not out_s:
            return PushResult(P, "S", tuple(steps))
        beta = out_s[0]
        alpha = 0 if beta else 1
        gamma, delta = out_t[0], out_t[1]
        P = double_shift(P, alpha, beta, gamma, delta)
        steps.append(("double_shift", alpha, beta, gamma, delta))
        if len(outside(P.T)) >= len(out_t):
            raise TransformError("double shift did not reduce T outside the hyperplane")


# --- pairs as characteristic maps -----------------------------------------------------


def pair_complex(p, q):
    return join(complete_graph(p), complete_graph(q))


def pair_to_char_map(P):
    K = pair_complex(len(P.S), len(P.T))
    return CharMapGF2(K, P.l, P.S + P.T)


def char_map_to_pair(c, p):
    return GoodPair(c.l, c.images[:p], c.images[p:])


def standard_pair(p, q):
    """The first p nonzero vectors of GF(2)^a next to the first q of GF(2)^b.

    Here a = ceil(log2(p + 1)), b = ceil(log2(q + 1)); the pair lives in
    GF(2)^(a + b) with S in the first a coordinates and T in the rest.
    """
    a, b = log_bound(p), log_bound(q)
    S = tuple(range(1, p + 1))
    T = tuple(v << a for v in range(1, q + 1))
    return GoodPair(a + b, S, T)


def random_good_pair(rng, l, p, q, tries=1000):
    """Rejection-sample a good pair with |S| = p, |T| = q, or ``None``."""
    vectors = range(1, 1 << l)
    if p + q > len(vectors):
        return None
    for _ in range(tries):
        chosen = rng.sample(vectors, p + q)
        P = GoodPair(l, chosen[:p], chosen[p:])
        if is_good_pair(P):
            return P
    return None


def random_good_pairs(n, seed=0, max_l=6):
    """``n`` seeded random good pairs with 2 <= l <= max_l."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        l = rng.randint(2, max_l)
        p = rng.randint(1, min(4, l))
        q = rng.randint(1, min(4, l))
        P = random_good_pair(rng, l, p, q, tries=50)
        if P is not None:
            out.append(P)
    return out


@dataclass(frozen=True)
class AdditivityReport:
    p: int
    q: int
    r_p: int
    r_q: int
    witness: GoodPair
    refuted: bool
    nodes: int
    seconds: float

    @property
    def level(self):
        return self.r_p + self.r_q

    @property
    def ok(self):
        return self.refuted and is_good_pair(self.witness) and self.witness.l == self.level


def verify_complete_join_additivity(p, q, budget=None):
    """r_R(K_p * K_q) = r_R(K_p) + r_R(K_q): witness at the sum, none below.

    The factors' values come from the graph formula ceil(log2(n + 1)).
    """
    budget = Budget.coerce(budget)
    r_p, r_q = log_bound(p), log_bound(q)
    witness = standard_pair(p, q)
    assert is_good_pair(witness)
    assert is_characteristic_gf2(pair_to_char_map(witness))
    K = pair_complex(p, q)
    start, t0 = budget.used, time.perf_counter()
    refuted = search_char_map_gf2(K, r_p + r_q - 1, budget) is None
    return AdditivityReport(
        p, q, r_p, r_q, witness, refuted, budget.used - start, time.perf_counter() - t0
    )
