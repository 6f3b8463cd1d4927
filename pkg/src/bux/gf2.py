"""Linear algebra over GF(2) on integer bitmasks, and GF(2^q) arithmetic.

A vector of GF(2)^l is an ``int`` whose bit ``i`` is coordinate ``i``
(so e_1 is ``1``, e_2 is ``2``, ...).  Increasing mask value is the
canonical vector order used by every search in the package.
"""

from __future__ import annotations

from functools import lru_cache

MAX_DIM = 62
MAX_FIELD_DEGREE = 16


def _check_dim(vs, l):
    if l is None:
        return
    bound = 1 << l
    for v in vs:
        if v < 0 or v >= bound:
            raise ValueError(f"vector {v:#b} does not live in GF(2)^{l}")


def reduce_basis(vs):
    """Return an echelon basis of span(vs): ``{leading bit: vector}``."""
    basis = {}
    for v in vs:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return basis


def rank(vs, l=None):
    _check_dim(vs, l)
    return len(reduce_basis(vs))


def is_independent(vs, l=None):
    _check_dim(vs, l)
    basis = {}
    for v in vs:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
        else:
            return False
    return True


def span(vs):
    """All elements of span(vs), zero included, as a set."""
    out = {0}
    for b in reduce_basis(vs).values():
        out |= {x ^ b for x in out}
    return out


def in_span(v, basis):
    """Is ``v`` in the span of an echelon ``basis`` from reduce_basis?"""
    while v:
        top = v.bit_length() - 1
        if top not in basis:
            return False
        v ^= basis[top]
    return True


def enumerate_nonzero(l):
    if not 1 <= l <= MAX_DIM:
        raise ValueError(f"dimension {l} outside 1..{MAX_DIM}")
    return list(range(1, 1 << l))


def unit(i):
    """The standard basis vector e_{i+1} (0-based coordinate ``i``)."""
    return 1 << i


def in_hyperplane(v, coordinate, l=None):
    if coordinate < 0 or (l is not None and coordinate >= l):
        raise IndexError(f"coordinate {coordinate} out of range")
    return not (v >> coordinate) & 1


def weight(v):
    return bin(v).count("1")


def to_bits(v, l):
    """0/1 string, character ``i`` is coordinate ``i``."""
    return "".join("1" if (v >> i) & 1 else "0" for i in range(l))


def from_bits(s):
    if not s or set(s) - {"0", "1"}:
        raise ValueError(f"not a 0/1 string: {s!r}")
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


# --- binary polynomials and GF(2^q) ------------------------------------------


def clmul(a, b):
    """Carry-less product of two binary polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def poly_mod(a, m):
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(poly):
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for div in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, div) == 0:
                return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(q):
    """Numerically least irreducible polynomial of degree ``q``."""
    if not 1 <= q <= MAX_FIELD_DEGREE:
        raise ValueError(f"field degree {q} outside 1..{MAX_FIELD_DEGREE}")
    for poly in range(1 << q, 1 << (q + 1)):
        if is_irreducible(poly):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


class GF2Field:
    """The field GF(2^q) as polynomials modulo an irreducible ``modulus``."""

    __slots__ = ("q", "modulus")

    def __init__(self, q, modulus=None):
        if modulus is None:
            modulus = canonical_modulus(q)
        elif modulus.bit_length() - 1 != q or not is_irreducible(modulus):
            raise ValueError(f"{modulus:#b} is not an irreducible polynomial of degree {q}")
        self.q = q
        self.modulus = modulus

    @property
    def order(self):
        return 1 << self.q

    def __repr__(self):
        return f"GF2Field(q={self.q}, modulus={self.modulus:#b})"

    def __eq__(self, other):
        return isinstance(other, GF2Field) and (self.q, self.modulus) == (other.q, other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    def mul(self, a, b):
        return gf2q_mul(self, a, b)

    def pow(self, a, n):
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            n >>= 1
        return out

    def inverse(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.order - 2)


def gf2q_mul(field, a, b):
    return poly_mod(clmul(a, b), field.modulus)


def scalar_action(field, c, v, l):
    """Multiply ``v`` in GF(2)^l = GF(2^q)^(l/q) by the scalar ``c``.

    Block ``j`` of ``v`` is bits ``j*q .. j*q+q-1``.
    """
    q = field.q
    if l % q:
        raise ValueError(f"dimension {l} is not divisible by field degree {q}")
    mask = (1 << q) - 1
    out = 0
    for j in range(l // q):
        block = (v >> (j * q)) & mask
        out |= gf2q_mul(field, c, block) << (j * q)
    return out
