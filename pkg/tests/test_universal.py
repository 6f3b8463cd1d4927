import random
from itertools import combinations

import pytest

from bux import (
    complete_graph,
    exists_nondegenerate_map,
    is_nondegenerate_map,
    is_simplex_int,
    is_simplex_real,
    join_embedding,
    link_equivalence_maps,
    real_universal_skeleton,
    reduction_map,
)
from bux.gf2 import from_bits, is_independent
from bux.lattice import is_unimodular_set
from bux.universal import count_independent, real_link


def test_ru2_is_triangle_graph():
    U = real_universal_skeleton(2)
    assert U == complete_graph(3) and U.dim == 1


def test_ru3_one_skeleton_is_k7():
    assert real_universal_skeleton(3, 1) == complete_graph(7)


def test_ru3_has_28_triangles():
    U = real_universal_skeleton(3)
    assert len(U.facets) == 28 == count_independent(3, 3)
    brute = sum(is_independent(t) for t in combinations(range(1, 8), 3))
    assert brute == 28


@pytest.mark.parametrize("l", range(1, 5))
def test_facets_are_bases(l):
    U = real_universal_skeleton(l)
    assert all(len(f) == l and is_independent([v + 1 for v in f]) for f in U.facets)
    assert len(U.facets) == count_independent(l, l)


def test_size_guard():
    with pytest.raises(ValueError):
        real_universal_skeleton(13)


def test_simplex_predicates():
    assert is_simplex_real(3, [1, 2, 4])
    assert not is_simplex_real(3, [0, 1])
    assert not is_simplex_real(3, [from_bits("110"), from_bits("011"), from_bits("101")])
    assert is_simplex_int(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not is_simplex_int(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert not is_simplex_int(2, [(1, 0), (1, 2)])
    assert is_simplex_int(2, [(1, 0), (1, 1)])


def test_reduction_map_examples():
    assert reduction_map([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == [1, 2, 4]
    assert reduction_map([(1, 2, 0)]) == [1]
    with pytest.raises(ValueError):
        reduction_map([(2, 0)])


def test_reduction_of_random_unimodular_pairs():
    rng = random.Random(0)
    hits = 0
    while hits < 200:
        vs = [tuple(rng.randint(-3, 3) for _ in range(4)) for _ in range(2)]
        if not is_unimodular_set(vs):
            continue
        hits += 1
        assert is_independent(reduction_map(vs))


def test_link_equivalence_small_cases():
    _, index = real_link(2, [1])
    assert [i + 1 for i in index] == [0b10, 0b11]
    p, q = link_equivalence_maps(2, [1])
    assert p.image == (0,) and q.image == (0, 0)
    p, q = link_equivalence_maps(3, [1])
    assert p.target.m == 6
    assert sorted(q.image) == [0, 0, 1, 1, 2, 2]


def test_link_of_basis_is_empty():
    p, q = link_equivalence_maps(2, [1, 2])
    assert p.target.m == 0 and q.source.m == 0


def _independent_sets(l, k):
    return [s for s in combinations(range(1, 1 << l), k) if is_independent(s)]


@pytest.mark.parametrize("l,k", [(l, k) for l in range(2, 5) for k in (1, 2) if k < l])
def test_link_equivalence_maps_are_nondegenerate(l, k):
    for sigma in _independent_sets(l, k)[:5]:
        p, q = link_equivalence_maps(l, sigma)
        assert is_nondegenerate_map(p) and is_nondegenerate_map(q)
        assert p.then(q).image == tuple(range(p.source.m))


@pytest.mark.parametrize("l,k", [(2, 1), (3, 1), (3, 2)])
def test_join_embedding(l, k):
    f = join_embedding(l, k)
    assert is_nondegenerate_map(f)


def test_join_embedding_of_points():
    f = join_embedding(1, 1)
    assert f.image == (0, 1) and is_nondegenerate_map(f)


def test_join_embedding_sends_bases_to_bases():
    f = join_embedding(2, 2)
    for facet in f.source.facets:
        assert is_independent([f(v) + 1 for v in facet])
        assert len(facet) == 4


def test_link_equivalence_found_by_search():
    L, _ = real_link(3, [1])
    R = real_universal_skeleton(2)
    assert exists_nondegenerate_map(L, R) is not None
    assert exists_nondegenerate_map(R, L) is not None
