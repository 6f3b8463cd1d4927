"""Integer vectors: primitivity, unimodular sets, mod-2 reduction, 0/1 lifts.

Vectors are tuples of Python ints (arbitrary precision).  A set of ``k``
vectors in Z^l is unimodular, i.e. part of a basis, iff the gcd of the
k x k minors of the matrix they form is 1.  That gcd is invariant under
unimodular column operations, so we column-reduce the matrix to lower
trapezoidal form [L | 0] and read it off as |det L|.
"""

from __future__ import annotations

from itertools import combinations, product
from math import gcd

import numpy as np

from .gf2 import MAX_DIM


class TooManyVectors(ValueError):
    """More vectors than the lattice rank: never part of a basis."""


def is_primitive(v):
    g = 0
    for c in v:
        g = gcd(g, c)
    return g == 1


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        t, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    return a, x0, y0


def column_reduce(rows):
    """Lower-trapezoidal form of ``rows`` under unimodular column operations.

    Returns the list of diagonal entries (one per row, possibly zero).
    """
    A = [list(r) for r in rows]
    k = len(A)
    l = len(A[0]) if k else 0
    diag = []
    col = 0
    for i in range(k):
        if col >= l:
            diag.append(0)
            continue
        # fold every entry of row i at columns >= col into column col
        for j in range(col + 1, l):
            a, b = A[i][col], A[i][j]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            p, s = a // g, b // g
            # [c_col, c_j] <- [x c_col + y c_j, -s c_col + p c_j], det = 1
            for r in range(i, k):
                u, w = A[r][col], A[r][j]
                A[r][col] = x * u + y * w
                A[r][j] = -s * u + p * w
        d = A[i][col]
        diag.append(d)
        if d != 0:
            col += 1
    return diag


def is_unimodular_set(vs, strict=False):
    """Do the integer vectors ``vs`` extend to a basis of Z^l?

    With ``strict=True`` an input with more vectors than coordinates
    raises :class:`TooManyVectors` instead of returning ``False``.
    """
    vs = [tuple(v) for v in vs]
    if not vs:
        return True
    l = len(vs[0])
    if any(len(v) != l for v in vs):
        raise ValueError("vectors of different lengths")
    if len(vs) > l:
        if strict:
            raise TooManyVectors(f"{len(vs)} vectors in Z^{l}")
        return False
    return all(abs(d) == 1 for d in column_reduce(vs))


def minor_gcd(vs):
    """gcd of all maximal minors, by direct enumeration (slow oracle)."""
    k = len(vs)
    l = len(vs[0])
    g = 0
    for cols in combinations(range(l), k):
        g = gcd(g, bareiss_det([[v[c] for c in cols] for v in vs]))
    return g


def bareiss_det(M):
    """Fraction-free exact determinant of a square integer matrix."""
    A = [list(r) for r in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for i in range(n - 1):
        if A[i][i] == 0:
            for r in range(i + 1, n):
                if A[r][i] != 0:
                    A[i], A[r] = A[r], A[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                A[r][c] = (A[r][c] * A[i][i] - A[r][i] * A[i][c]) // prev
        prev = A[i][i]
    return sign * A[n - 1][n - 1]


def mod2_reduce(v):
    if len(v) > MAX_DIM:
        raise ValueError(f"vector longer than {MAX_DIM}")
    out = 0
    for i, c in enumerate(v):
        if c % 2:
            out |= 1 << i
    return out


def lift_01(v, l):
    """The 0/1 integer vector with the same support as the bitmask ``v``."""
    if v == 0:
        raise ValueError("cannot lift the zero vector")
    if v >> l:
        raise ValueError(f"vector does not live in GF(2)^{l}")
    return tuple((v >> i) & 1 for i in range(l))


def max_abs_det_01(n):
    """Maximum |det| over n x n 0/1 matrices, n <= 5.

    |det| ignores row order and vanishes on repeated rows, so it is enough
    to run over sets of ``n`` distinct rows.
    """
    if not 1 <= n <= 5:
        raise ValueError("exhaustive scan only supported for 1 <= n <= 5")
    rows = np.array(list(product((0, 1), repeat=n)), dtype=np.float64)
    best = 0
    combos = np.array(list(combinations(range(len(rows)), n)), dtype=np.int64)
    for start in range(0, len(combos), 50_000):
        mats = rows[combos[start:start + 50_000]]
        dets = np.rint(np.abs(np.linalg.det(mats))).astype(np.int64)
        best = max(best, int(dets.max()))
    return best
