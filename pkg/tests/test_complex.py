import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bux import (
    SearchExhausted,
    boundary_of_simplex,
    build_complex,
    chromatic_number,
    complete_graph,
    cycle_graph,
    dimension,
    exists_nondegenerate_map,
    grotzsch_graph,
    is_nondegenerate_map,
    join,
    link,
    petersen_graph,
    points,
    simplex,
    simplex_skeleton,
    skeleton,
)
from bux.complex import VertexMap, relabel
from bux.universal import real_universal_skeleton


@st.composite
def complexes(draw, max_m=7):
    m = draw(st.integers(1, max_m))
    facets = draw(st.lists(st.lists(st.integers(0, m - 1), min_size=1, max_size=4), max_size=8))
    return build_complex(m, facets)


def all_faces(K):
    out = set()
    for f in K.facets:
        for k in range(1, len(f) + 1):
            out.update(combinations(f, k))
    return out


# --- construction -----------------------------------------------------------------


def test_build_full_triangle():
    K = build_complex(3, [[0, 1, 2]])
    assert K.facets == ((0, 1, 2),)
    assert K == simplex(3)


def test_build_triangle_boundary():
    K = build_complex(3, [[0, 1], [1, 2], [0, 2]])
    assert len(K.facets) == 3
    assert K == boundary_of_simplex(3)


def test_build_absorbs_faces_and_adds_missing_vertices():
    K = build_complex(4, [[0, 1, 2], [0, 1]])
    assert set(K.facets) == {(0, 1, 2), (3,)}


def test_build_rejects_bad_vertex():
    with pytest.raises(ValueError):
        build_complex(3, [[0, 3]])


def test_dimension_examples():
    assert dimension(simplex(3)) == 2
    assert dimension(points(5)) == 0
    assert dimension(boundary_of_simplex(3)) == 1


def test_skeleton_examples():
    assert skeleton(simplex(4), 1) == complete_graph(4)
    K = grotzsch_graph()
    assert skeleton(K, K.dim) is K
    S = simplex_skeleton(63, 2)
    assert S.m == 63 and len(S.facets) == comb(63, 3)


def test_join_examples():
    assert join(points(1), points(1)) == simplex(2)
    assert join(simplex(2), simplex(2)) == simplex(4)
    assert join(complete_graph(4), grotzsch_graph()).dim == 3


def test_link_examples():
    L, index = link(boundary_of_simplex(4), [0])
    assert L == boundary_of_simplex(3) and index == (1, 2, 3)
    K = petersen_graph()
    assert link(K, [])[0] is K
    # vertex 0 of RU_2 is e1 (mask 1)
    L, index = link(real_universal_skeleton(2), [0])
    assert L == points(2)
    assert [i + 1 for i in index] == [0b10, 0b11]


def test_link_of_facet_is_empty():
    L, index = link(simplex(3), [0, 1, 2])
    assert L.m == 0 and index == ()


def test_link_rejects_non_simplex():
    with pytest.raises(ValueError):
        link(cycle_graph(5), [0, 2])


def test_named_graphs():
    G = grotzsch_graph()
    assert G.m == 11 and len(G.facets) == 20 and G.dim == 1
    edges = set(G.edges())
    assert not any(all(e in edges for e in combinations(t, 2)) for t in combinations(range(11), 3))
    P = petersen_graph()
    assert P.m == 10 and len(P.facets) == 15
    assert all(bin(a).count("1") == 3 for a in P.adjacency())


# --- properties -------------------------------------------------------------------


@given(complexes())
def test_downward_closed_and_maximal(K):
    faces = all_faces(K)
    assert all(s in K for s in faces)
    for f, g in combinations(K.facets, 2):
        assert not set(f) <= set(g) and not set(g) <= set(f)
    assert set().union(*map(set, K.facets)) == set(range(K.m))


@given(complexes(), complexes())
@settings(max_examples=50)
def test_join_dimension_and_symmetry(K, N):
    J = join(K, N)
    assert J.dim == K.dim + N.dim + 1
    swap = [v + N.m for v in range(K.m)] + list(range(N.m))
    assert relabel(J, swap) == join(N, K)


@given(complexes(), st.data())
@settings(max_examples=80)
def test_link_property(K, data):
    sigma = data.draw(st.sampled_from(sorted(all_faces(K))))
    L, index = link(K, sigma)
    faces = {tuple(index[v] for v in s) for s in all_faces(L)} if L.m else set()
    expect = {
        s for s in all_faces(K)
        if not set(s) & set(sigma) and tuple(sorted(set(s) | set(sigma))) in K
    }
    assert faces == expect


@given(complexes())
@settings(max_examples=50)
def test_skeleton_faces(K):
    for d in range(K.dim + 1):
        S = skeleton(K, d)
        assert all_faces(S) == {s for s in all_faces(K) if len(s) <= d + 1}


# --- maps -------------------------------------------------------------------------


def test_identity_is_nondegenerate():
    K = petersen_graph()
    assert is_nondegenerate_map(VertexMap(K, K, range(K.m)))


def test_constant_map_is_degenerate():
    assert not is_nondegenerate_map(VertexMap(simplex(2), simplex(2), (0, 0)))


def test_three_coloring_of_c5_is_nondegenerate():
    f = VertexMap(cycle_graph(5), simplex(3), (0, 1, 0, 1, 2))
    assert is_nondegenerate_map(f)


def test_existence_examples():
    assert exists_nondegenerate_map(points(2), points(1)) is not None
    assert exists_nondegenerate_map(simplex(2), points(1)) is None
    L, _ = link(real_universal_skeleton(2), [0])
    R = real_universal_skeleton(1)
    assert exists_nondegenerate_map(L, R) is not None
    assert exists_nondegenerate_map(R, L) is not None


def test_existence_budget():
    with pytest.raises(SearchExhausted):
        exists_nondegenerate_map(grotzsch_graph(), simplex(3), budget=5)


@given(complexes(max_m=6), complexes(max_m=6), complexes(max_m=6))
@settings(max_examples=40)
def test_composition_of_nondegenerate_maps(A, B, C):
    f = exists_nondegenerate_map(A, B)
    g = exists_nondegenerate_map(B, C)
    if f is None or g is None:
        return
    assert is_nondegenerate_map(f.then(g))


@pytest.mark.parametrize("seed", range(30))
def test_map_to_simplex_iff_colorable(seed):
    rng = random.Random(seed)
    m = rng.randint(2, 8)
    K = build_complex(m, [rng.sample(range(m), rng.randint(1, min(3, m))) for _ in range(rng.randint(1, 10))])
    chi = chromatic_number(K)
    for k in range(1, m + 1):
        found = exists_nondegenerate_map(K, simplex(k)) is not None
        assert found == (chi <= k and K.dim < k)
