import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _support import complexes
from relcm.complex_core import (
    MINUS_INFINITY,
    BiGround,
    ComplexError,
    SimplicialComplex,
    VoidComplexError,
    cardinality,
    cone,
    disjoint_union,
    face,
    members,
    submasks,
)
from relcm.field_homology import reduced_homology

G22 = BiGround(2, 2)
V1, V2, W1, W2 = 0, 1, 2, 3


def matching(n):
    g = BiGround(n, n)
    return SimplicialComplex(g, [face(i, n + j) for i in range(n) for j in range(n) if i == j])


def brute_faces(delta):
    """Every subset of the ground set contained in some facet."""
    return {S for S in range(delta.ground.full + 1) if any(S & ~F == 0 for F in delta.facets)}


# -- ground sets ---------------------------------------------------------------


def test_ground_partition():
    assert G22.V == 0b0011
    assert G22.W == 0b1100
    assert G22.names == ("v1", "v2", "w1", "w2")
    assert G22.index("w2") == 3


@pytest.mark.parametrize("m,n", [(-1, 2), (0, 0)])
def test_ground_rejects_bad_sizes(m, n):
    with pytest.raises(ComplexError):
        BiGround(m, n)


def test_ground_names_must_be_distinct():
    with pytest.raises(ComplexError):
        BiGround(1, 1, ("a",), ("a",))


def test_transpose_face_roundtrip():
    g = BiGround(2, 3)
    gt = g.transpose()
    for F in range(g.full + 1):
        assert gt.transpose_face(g.transpose_face(F)) == F


# -- construction --------------------------------------------------------------


def test_facets_are_canonical():
    d = SimplicialComplex(G22, [face(V1), face(V1, W1), face(V1, W1), face(W2)])
    assert sorted(d.facets) == sorted([face(W2), face(V1, W1)])


def test_void_and_empty_are_distinct():
    void, empty = SimplicialComplex.void_on(G22), SimplicialComplex.empty_on(G22)
    assert void != empty
    assert void.all_faces() == []
    assert empty.all_faces() == [0]


def test_empty_facet_list_needs_void_flag():
    with pytest.raises(ComplexError):
        SimplicialComplex(G22, [])


def test_out_of_range_face():
    with pytest.raises(ComplexError):
        SimplicialComplex(G22, [1 << 4])


def test_immutable():
    d = matching(2)
    with pytest.raises(AttributeError):
        d.facets = ()


# -- restriction, link, star ---------------------------------------------------


def test_restrict_example():
    assert set(matching(2).restrict_W().facets) == {face(W1), face(W2)}


def test_restrict_full_is_identity():
    d = matching(2)
    assert d.restrict(G22.full) == d


def test_restrict_missing_side_gives_empty_complex():
    d = SimplicialComplex(G22, [face(V1, V2)])
    assert d.restrict_W() == SimplicialComplex.empty_on(G22)


def test_restrict_void_is_void():
    v = SimplicialComplex.void_on(G22)
    assert v.restrict_W().void


def test_link_examples():
    d = matching(2)
    assert d.link(face(W1)).facets == (face(V1),)
    assert d.link(0) == d
    assert d.link(face(V1, V2)).void


def test_star_examples():
    d = matching(2)
    assert d.star(face(W1)).facets == (face(V1, W1),)
    assert d.star(0) == d
    assert d.star(face(V1, V2)).void


def test_dim_examples():
    assert matching(2).dim() == 1
    assert SimplicialComplex.empty_on(G22).dim() == -1
    assert SimplicialComplex.void_on(G22).dim() == MINUS_INFINITY
    assert math.isinf(MINUS_INFINITY) and MINUS_INFINITY < 0


def test_purity_and_connectedness_examples():
    g = BiGround(2, 2)
    two_edges = SimplicialComplex(g, [face(V1, W1), face(V2, W2)])
    assert two_edges.is_pure() and not two_edges.is_connected()
    g3 = BiGround(0, 3)
    tri = SimplicialComplex(g3, [face(0, 1, 2)])
    assert tri.is_pure() and tri.is_connected()
    assert not SimplicialComplex(g3, [face(0, 1), face(2)]).is_pure()


def test_connectedness_undefined_on_void():
    with pytest.raises(VoidComplexError):
        SimplicialComplex.void_on(G22).is_connected()


def test_faces_are_lex_sorted():
    g = BiGround(0, 3)
    d = SimplicialComplex(g, [face(0, 1, 2)])
    assert [members(F) for F in d.faces(1)] == [(0, 1), (0, 2), (1, 2)]
    assert d.faces(-1) == [0]
    assert d.faces(3) == []


def test_f_vector_triangle():
    d = SimplicialComplex(BiGround(0, 3), [face(0, 1, 2)])
    assert d.f_vector() == {-1: 1, 0: 3, 1: 3, 2: 1}


def test_delete_vertex():
    d = matching(2).delete_vertex(V1)
    assert d.ground == BiGround(1, 2, ("v2",), ("w1", "w2"))
    assert set(d.facets) == {face(1), face(0, 2)}


def test_cone_and_disjoint_union():
    d = matching(1)
    c = cone(d, "w")
    assert c.ground.n == 2 and c.dim() == d.dim() + 1
    u = disjoint_union(d, d)
    assert u.ground == BiGround(2, 2)
    assert set(u.facets) == {face(V1, W1), face(V2, W2)}


# -- properties against brute force -------------------------------------------


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_faces_match_brute_force(delta):
    assert set(delta.all_faces()) == brute_faces(delta)
    faces = brute_faces(delta)
    for F in faces:
        assert all(S in faces for S in submasks(F))


@settings(max_examples=150, deadline=None)
@given(complexes(), st.data())
def test_link_star_consistency(delta, data):
    F = data.draw(st.integers(0, delta.ground.full))
    faces = brute_faces(delta)
    lk, star = delta.link(F), delta.star(F)
    if F not in faces:
        assert lk.void and star.void
        return
    expect_link = {H for H in faces if H & F == 0 and (H | F) in faces}
    assert set(lk.all_faces()) == expect_link
    assert set(star.all_faces()) == {H for H in faces if (H | F) in faces}
    assert lk == star.restrict(delta.ground.full & ~F)


@settings(max_examples=100, deadline=None)
@given(complexes(), st.data())
def test_restrict_composes(delta, data):
    S = data.draw(st.integers(0, delta.ground.full))
    T = data.draw(st.integers(0, delta.ground.full))
    assert delta.restrict(S).restrict(T) == delta.restrict(S & T)


@settings(max_examples=100, deadline=None)
@given(complexes())
def test_facets_incomparable(delta):
    fs = delta.facets
    for a, b in itertools.permutations(fs, 2):
        assert a & ~b != 0


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_connected_iff_h0_vanishes(delta):
    if delta.vertices() == 0:
        return
    assert delta.is_connected() == (reduced_homology(delta)[0] == 0)


def test_dim_matches_max_facet():
    d = SimplicialComplex(BiGround(1, 2), [face(0, 1, 2)])
    assert d.dim() == max(cardinality(F) for F in d.facets) - 1
