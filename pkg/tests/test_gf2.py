from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bux import GF2Field, enumerate_nonzero, gf2q_mul, in_hyperplane, is_independent, rank, scalar_action
from bux.gf2 import canonical_modulus, from_bits, is_irreducible, span, to_bits

vectors = st.lists(st.integers(0, 63), max_size=8)


def naive_rank(vs):
    # size of the span, found by closing under xor
    sp = {0}
    for v in vs:
        sp |= {x ^ v for x in sp}
    return len(sp).bit_length() - 1


def test_independent_examples():
    assert is_independent([0b001, 0b010])
    assert not is_independent([0b101, 0b101])
    assert not is_independent([from_bits("110"), from_bits("011"), from_bits("101")])


def test_rank_examples():
    assert rank([]) == 0
    assert rank([1 << i for i in range(5)]) == 5
    assert rank(range(1, 8)) == 3


def test_enumerate_nonzero():
    assert enumerate_nonzero(1) == [1]
    assert enumerate_nonzero(2) == [1, 2, 3]
    assert len(enumerate_nonzero(4)) == 15


def test_in_hyperplane():
    assert in_hyperplane(0b10, 0)
    assert not in_hyperplane(0b01, 0)
    assert not in_hyperplane(from_bits("1011"), 3)


def test_bits_round_trip():
    assert to_bits(0b101, 4) == "1010"
    for v in range(64):
        assert from_bits(to_bits(v, 6)) == v


@given(vectors)
def test_rank_matches_span_size(vs):
    assert rank(vs) == naive_rank(vs)
    assert len(span(vs)) == 1 << rank(vs)


@given(vectors)
def test_independent_iff_full_rank(vs):
    assert is_independent(vs) == (rank(vs) == len(vs))


@given(vectors, st.permutations(range(6)))
def test_rank_invariant_under_coordinate_permutation(vs, perm):
    moved = [sum(((v >> i) & 1) << perm[i] for i in range(6)) for v in vs]
    assert rank(moved) == rank(vs)


@given(vectors, st.integers(0, 63))
def test_rank_subadditive(vs, w):
    assert rank(vs) <= rank(vs + [w]) <= rank(vs) + 1


# --- fields -----------------------------------------------------------------------


def test_gf4_and_gf8():
    F4 = GF2Field(2, 0b111)
    assert gf2q_mul(F4, 0b10, 0b10) == 0b11
    F8 = GF2Field(3, 0b1011)
    x, seen = 0b10, set()
    p = 1
    for _ in range(7):
        p = gf2q_mul(F8, p, x)
        seen.add(p)
    assert p == 1 and len(seen) == 7


def test_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        GF2Field(2, 0b101)


def test_canonical_moduli_irreducible():
    for q in range(1, 9):
        m = canonical_modulus(q)
        assert m.bit_length() == q + 1 and is_irreducible(m)


@pytest.mark.parametrize("q", range(1, 9))
def test_field_axioms(q):
    F = GF2Field(q)
    els = range(F.order)
    sample = els if q <= 4 else range(0, F.order, max(1, F.order // 23))
    for a in sample:
        assert F.mul(a, 1) == a and F.mul(a, 0) == 0
        if a:
            assert F.mul(a, F.inverse(a)) == 1
        for b in sample:
            assert F.mul(a, b) == F.mul(b, a)
            for c in list(sample)[:6]:
                assert F.mul(a, b ^ c) == F.mul(a, b) ^ F.mul(a, c)
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_multiplicative_group_is_cyclic():
    for q in range(1, 7):
        F = GF2Field(q)
        orders = set()
        for a in range(1, F.order):
            n, p = 1, a
            while p != 1:
                p, n = F.mul(p, a), n + 1
            orders.add(n)
        assert max(orders) == F.order - 1


def test_scalar_action_examples():
    F = GF2Field(2)
    v = 0b0101  # blocks (1, 1)
    assert scalar_action(F, 1, v, 4) == v
    assert scalar_action(F, 0, v, 4) == 0
    assert scalar_action(F, 0b10, v, 4) == 0b1010


@pytest.mark.parametrize("q,l", [(1, 3), (2, 4), (2, 6), (3, 6), (4, 8)])
def test_scalar_orbits_partition(q, l):
    F = GF2Field(q)
    seen = set()
    for v in range(1, 1 << l):
        if v in seen:
            continue
        orbit = {scalar_action(F, c, v, l) for c in range(1, F.order)}
        assert len(orbit) == F.order - 1 and not orbit & seen
        # an orbit plus zero is a q-dimensional subspace
        assert rank(orbit) == q
        assert all(a ^ b in orbit for a, b in combinations(orbit, 2))
        seen |= orbit
    assert len(seen) == (1 << l) - 1
