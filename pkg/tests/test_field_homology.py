import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from _support import complexes, rp2
from relcm.complex_core import BiGround, SimplicialComplex, cone, disjoint_union, face
from relcm.field_homology import (
    GF2,
    RATIONALS,
    FieldSpec,
    HomologyCheckError,
    boundary_matrix,
    column_rank,
    homology_checks,
    reduced_homology,
)

G3 = BiGround(0, 3)
HOLLOW = SimplicialComplex(G3, [face(0, 1), face(0, 2), face(1, 2)])


def sympy_rank(dense, p=0):
    if not dense or not dense[0]:
        return 0
    if p:
        return DomainMatrix.from_list([[v % p for v in r] for r in dense], GF(p)).rank()
    return Matrix(dense).rank()


def test_field_parse():
    assert FieldSpec.parse("q") == RATIONALS
    assert FieldSpec.parse("fp:2") == GF2
    assert str(FieldSpec.parse("fp:7")) == "fp:7"
    with pytest.raises(ValueError):
        FieldSpec.parse("fp:6")
    with pytest.raises(ValueError):
        FieldSpec.parse("r")


def test_hollow_triangle_boundary():
    b = boundary_matrix(HOLLOW, 1)
    assert b.shape == (3, 3)
    assert b.rank() == 2
    # columns {0,1}, {0,2}, {1,2}; rows {0}, {1}, {2}
    assert b.to_dense() == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]


def test_top_boundary_has_no_columns():
    b = boundary_matrix(HOLLOW, 2)
    assert b.shape[1] == 0


def test_empty_complex_augmentation_row():
    e = SimplicialComplex.empty_on(G3)
    b = boundary_matrix(e, 0)
    assert b.shape == (1, 0)


def test_out_of_range_k_is_empty():
    assert boundary_matrix(HOLLOW, 7).shape == (0, 0)
    assert boundary_matrix(HOLLOW, -3).shape == (0, 0)


def test_void_boundary_rejected():
    with pytest.raises(ValueError):
        boundary_matrix(SimplicialComplex.void_on(G3), 0)


def test_hollow_triangle_homology():
    h = reduced_homology(HOLLOW)
    assert h.as_dict() == {"1": 1}


def test_simplex_is_acyclic():
    for n in range(1, 6):
        assert reduced_homology(SimplicialComplex.simplex(BiGround(0, n))).is_acyclic()


def test_empty_and_void_conventions():
    assert reduced_homology(SimplicialComplex.empty_on(G3)).by_degree == {-1: 1}
    assert reduced_homology(SimplicialComplex.void_on(G3)).by_degree == {}


def test_rp2_field_dependence():
    d = rp2()
    assert reduced_homology(d, RATIONALS).is_acyclic()
    h2 = reduced_homology(d, GF2)
    assert h2[1] == 1 and h2[2] == 1


def test_rp2_ranks_against_sympy():
    d = rp2()
    for p in (0, 2, 3):
        f = FieldSpec(p)
        for k in range(0, 4):
            b = boundary_matrix(d, k, f)
            assert b.rank() == sympy_rank(b.to_dense(), p)
    # hand-checked: rank ∂1 = 5, rank ∂2 = 10 over Q; 9 over GF(2)
    assert boundary_matrix(d, 1).rank() == 5
    assert boundary_matrix(d, 2).rank() == 10
    assert boundary_matrix(d, 2, GF2).rank() == 9


def test_column_rank_fraction_free():
    cols = [{0: 2, 1: 4}, {0: 3, 1: 6}, {1: 5}]
    assert column_rank(cols) == 2
    assert column_rank(cols, FieldSpec(5)) == 1


@settings(max_examples=120, deadline=None)
@given(complexes(max_m=2, max_n=4))
def test_ranks_match_sympy(delta):
    for p in (0, 2):
        for k in range(-1, int(delta.dim()) + 2):
            b = boundary_matrix(delta, k, FieldSpec(p))
            assert b.rank() == sympy_rank(b.to_dense(), p)


@settings(max_examples=120, deadline=None)
@given(complexes(max_m=2, max_n=4))
def test_rank_nullity_and_euler(delta):
    h = reduced_homology(delta)
    fv = delta.f_vector()
    assert h.euler_characteristic() == sum((-1) ** k * c for k, c in fv.items())
    for k, c in fv.items():
        b = boundary_matrix(delta, k)
        assert b.rank() <= c
    assert all(d >= 0 for d in h.by_degree.values())
    assert all(-1 <= k <= delta.dim() for k in h.by_degree)


@settings(max_examples=100, deadline=None)
@given(complexes(max_m=2, max_n=3))
def test_checks_pass_on_random_complexes(delta):
    with homology_checks() as log:
        reduced_homology(delta)
        reduced_homology(delta, GF2)
    assert log.computations == 2 and not log.failures
    assert log.boundary_checks >= 0


@settings(max_examples=100, deadline=None)
@given(complexes(max_m=2, max_n=3), st.sampled_from(["v", "w"]))
def test_cone_acyclic(delta, side):
    assert reduced_homology(cone(delta, side)).is_acyclic()


@settings(max_examples=80, deadline=None)
@given(complexes(max_m=1, max_n=2), complexes(max_m=1, max_n=2))
def test_disjoint_union_h0(a, b):
    if a.vertices() == 0 or b.vertices() == 0:
        return
    u = disjoint_union(a, b)
    assert reduced_homology(u)[0] == reduced_homology(a)[0] + reduced_homology(b)[0] + 1


@settings(max_examples=80, deadline=None)
@given(complexes(max_m=0, max_n=5))
def test_field_independence_for_small_complexes(delta):
    # at most 5 vertices: integral homology is torsion free
    base = reduced_homology(delta).by_degree
    for p in (2, 3, 5):
        assert reduced_homology(delta, FieldSpec(p)).by_degree == base


def test_check_failure_is_raised(monkeypatch):
    import relcm.field_homology as fh

    monkeypatch.setattr(fh, "_compose_is_zero", lambda a, b: False)
    with homology_checks():
        with pytest.raises(HomologyCheckError):
            reduced_homology(HOLLOW)
