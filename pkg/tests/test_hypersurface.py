import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relcm.complex_core import BiGround, ComplexError
from relcm.hypersurface import (
    BihomogeneousForm,
    ContentIdeal,
    Verdict,
    ZeroFormError,
    artinian_report,
    content_ideal,
    is_P0_primary,
    is_system_of_parameters,
)

G12 = BiGround(1, 2)
G22 = BiGround(2, 2)
G21 = BiGround(2, 1)


def form(ground, *terms, bidegree=None):
    return BihomogeneousForm.build(ground, terms, bidegree)


def test_build_infers_bidegree():
    f = form(G12, ((2,), (1, 0)), ((2,), (0, 1)))
    assert f.bidegree == (2, 1)
    assert [t.coeff for t in f.terms] == [1, 1]


@pytest.mark.parametrize(
    "terms",
    [
        [((2,), (1, 0)), ((1,), (1, 0))],  # mixed bidegree
        [((2,), (1, 0)), ((2,), (1, 0))],  # repeated monomial
        [((2,), (-1, 2))],
        [((2, 0), (1, 0))],
        [(0, (2,), (1, 0))],
    ],
)
def test_build_rejects(terms):
    with pytest.raises(ComplexError):
        BihomogeneousForm.build(G12, terms)


def test_declared_bidegree_must_match():
    with pytest.raises(ComplexError):
        form(G12, ((2,), (1, 0)), bidegree=(1, 1))


def test_zero_form():
    with pytest.raises(ZeroFormError):
        BihomogeneousForm.build(G12, [])


def test_single_x_variable_is_artinian():
    r = artinian_report(form(G12, ((2,), (1, 0)), ((2,), (0, 1))))
    assert r.h_n_artinian is Verdict.TRUE
    assert r.h_n_minus_1_finitely_generated is False
    assert r.h_n_minus_1_artinian is False


def test_no_x_variables():
    g = BiGround(0, 3)
    r = artinian_report(form(g, ((), (2, 0, 0)), ((), (0, 1, 1))))
    assert r.h_n_minus_1_artinian is True
    assert r.h_n_artinian is Verdict.TRUE
    assert any("m = 0" in s for s in r.notes)


def test_not_primary_is_false():
    r = artinian_report(form(G22, ((2, 0), (1, 0)), ((1, 1), (0, 1))))
    assert r.content.generators == ((1, 1), (2, 0))
    assert r.h_n_artinian is Verdict.FALSE


def test_mixed_degree_parameters():
    # all coefficients of a form share one x-degree, so build this content ideal directly
    c = ContentIdeal(2, ((0, 1), (3, 0)), True)
    assert is_P0_primary(c) and is_system_of_parameters(c)
    c3 = ContentIdeal(2, ((0, 3), (2, 1), (3, 0)), True)
    assert is_P0_primary(c3) and not is_system_of_parameters(c3)


def test_system_of_parameters_content():
    f = form(G22, ((3, 0), (1, 0)), ((2, 1), (0, 1)))
    c = content_ideal(f)
    assert not is_P0_primary(c)
    g = form(G22, ((2, 0), (1, 0)), ((0, 2), (0, 1)))
    c = content_ideal(g)
    assert is_P0_primary(c) and is_system_of_parameters(c)
    assert artinian_report(g).h_n_artinian is Verdict.FALSE


def test_primary_not_parameters_is_inconclusive():
    f = form(G22, ((2, 0), (2, 0)), ((1, 1), (1, 1)), ((0, 2), (0, 2)))
    c = content_ideal(f)
    assert c.generators == ((0, 2), (1, 1), (2, 0))
    assert is_P0_primary(c) and not is_system_of_parameters(c)
    assert artinian_report(f).h_n_artinian is Verdict.INCONCLUSIVE


def test_non_monomial_coefficient_is_unsupported():
    f = form(G21, ((1, 0), (1,)), ((0, 1), (1,)))
    r = artinian_report(f)
    assert not r.content.supported
    assert r.h_n_artinian is Verdict.UNSUPPORTED
    with pytest.raises(ValueError):
        is_P0_primary(r.content)


def test_constant_content_is_not_primary():
    f = form(G21, ((0, 0), (2,)))
    assert not is_P0_primary(content_ideal(f))
    assert artinian_report(f).h_n_artinian is Verdict.FALSE


def test_small_n_notes():
    r = artinian_report(form(BiGround(2, 1), ((1, 0), (1,))))
    assert r.h_n_minus_1_finitely_generated is True
    r0 = artinian_report(form(BiGround(2, 0), ((1, 1), ())))
    assert r0.h_n_minus_1_finitely_generated and r0.h_n_minus_1_artinian


def test_report_dict_shape():
    d = artinian_report(form(G22, ((2, 0), (2, 0)), ((1, 1), (1, 1)), ((0, 2), (0, 2)))).as_dict()
    assert d["h_n_artinian"] == "inconclusive"
    assert d["content_ideal"] == {"supported": True, "generators": [[0, 2], [1, 1], [2, 0]]}


@st.composite
def monomial_coefficient_forms(draw):
    m = draw(st.integers(0, 3))
    n = draw(st.integers(1, 3))
    g = BiGround(m, n)
    dx, dy = draw(st.integers(0, 3)), draw(st.integers(1, 2))

    def compositions(total, parts):
        if parts == 0:
            return [()] if total == 0 else []
        return [(k,) + rest for k in range(total + 1) for rest in compositions(total - k, parts - 1)]

    xs, ys = compositions(dx, m), compositions(dy, n)
    if not xs:
        xs = [()]
        dx = 0
    chosen_y = draw(st.lists(st.sampled_from(ys), min_size=1, max_size=len(ys), unique=True))
    terms = [(draw(st.integers(1, 9)), draw(st.sampled_from(xs)), y) for y in chosen_y]
    return g, terms


@settings(max_examples=150, deadline=None)
@given(monomial_coefficient_forms(), st.integers(0, 2**32 - 1))
def test_verdict_invariant_under_rescaling_and_reordering(data, seed):
    g, terms = data
    base = artinian_report(BihomogeneousForm.build(g, terms))
    rng = random.Random(seed)
    scaled = [(c * rng.choice([2, -3, 5]), x, y) for c, x, y in terms]
    rng.shuffle(scaled)
    other = artinian_report(BihomogeneousForm.build(g, scaled))
    assert other.h_n_artinian == base.h_n_artinian
    assert other.content == base.content
    assert base.h_n_artinian is not Verdict.UNSUPPORTED


@settings(max_examples=100, deadline=None)
@given(monomial_coefficient_forms(), st.integers(0, 2**32 - 1))
def test_verdict_invariant_under_x_permutation(data, seed):
    g, terms = data
    rng = random.Random(seed)
    perm = list(range(g.m))
    rng.shuffle(perm)
    permuted = [(c, tuple(x[p] for p in perm), y) for c, x, y in terms]
    a = artinian_report(BihomogeneousForm.build(g, terms))
    b = artinian_report(BihomogeneousForm.build(g, permuted))
    assert a.h_n_artinian == b.h_n_artinian
