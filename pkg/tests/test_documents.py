import json

import pytest
from hypothesis import given, settings

from _support import complexes, pairs_complex, monomial_ideals
from relcm.complex_core import BiGround, SimplicialComplex
from relcm.documents import (
    DocumentError,
    canonical_digest,
    dump_complex,
    dump_form,
    dump_monomial,
    loads,
    parse_document,
    read_document,
)
from relcm.hypersurface import BihomogeneousForm, ZeroFormError

PAIRS = {"m": 2, "n": 2, "facets": [["v2", "w2"], ["v1", "w1"]]}


def test_complex_by_names():
    doc = parse_document(PAIRS)
    assert doc.kind == "complex"
    assert doc.value == pairs_complex(2)


def test_complex_by_indices_and_custom_names():
    obj = {"m": 1, "n": 1, "vertex_names": {"v": ["a"], "w": ["b"]}, "facets": [[0, "b"]]}
    d = parse_document(obj).value
    assert d.ground.names == ("a", "b")
    assert d.facets == (0b11,)


def test_complex_from_squarefree_ideal():
    obj = {"m": 2, "n": 2, "ideal": [[1, 1, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 0, 1, 1]]}
    assert parse_document(obj).value == pairs_complex(2)


def test_void_complex_document():
    d = parse_document({"m": 1, "n": 1, "void": True}).value
    assert d.void


def test_monomial_document():
    obj = {"m": 1, "n": 1, "generators": [{"x": [2], "y": [1]}, {"x": [3], "y": [2]}]}
    doc = parse_document(obj)
    assert doc.kind == "monomial"
    assert doc.value.generators == (((2,), (1,)),)


def test_form_document():
    obj = {"m": 1, "n": 2, "terms": [{"x": [2], "y": [1, 0]}, {"coeff": 3, "x": [2], "y": [0, 1]}]}
    doc = parse_document(obj)
    assert doc.kind == "form"
    assert doc.value.bidegree == (2, 1)


def test_zero_form_document():
    with pytest.raises(ZeroFormError):
        parse_document({"m": 1, "n": 1, "terms": []})


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({"n": 2, "facets": [[0]]}, "'m'"),
        ({"m": 1, "n": 1, "facets": []}, "non-empty"),
        ({"m": 1, "n": 1, "facets": [["zz"]]}, "zz"),
        ({"m": 1, "n": 1, "facets": [[5]]}, "out of range"),
        ({"m": 1, "n": 1, "facets": [[True]]}, "bad vertex"),
        ({"m": 1, "n": 1, "generators": [{"x": [1, 2], "y": [0]}]}, "x must be"),
        ({"m": 1, "n": 1, "void": True, "facets": [[0]]}, "void"),
        ({"m": -1, "n": 1, "facets": [[0]]}, "'m'"),
    ],
)
def test_document_errors(obj, fragment):
    with pytest.raises(DocumentError) as e:
        parse_document(obj)
    assert fragment in str(e.value)


def test_json_error_position():
    with pytest.raises(DocumentError) as e:
        loads('{"m": 1,\n  "n": }')
    assert (e.value.line, e.value.column) == (2, 8)
    assert "line 2, column 8" in str(e.value)


def test_top_level_must_be_object():
    with pytest.raises(DocumentError):
        loads("[1, 2]")


def test_read_document(tmp_path):
    p = tmp_path / "ex.json"
    p.write_text(json.dumps(PAIRS))
    assert read_document(p).value == pairs_complex(2)
    with pytest.raises(DocumentError):
        read_document(tmp_path / "missing.json")


def test_digest_ignores_key_order_and_whitespace():
    a = parse_document(json.loads('{"m":2,"n":2,"facets":[["v2","w2"],["v1","w1"]]}'))
    b = parse_document(json.loads('{ "facets": [["v2","w2"],["v1","w1"]],\n "n": 2, "m": 2 }'))
    assert a.digest == b.digest == canonical_digest(PAIRS)
    assert len(a.digest) == 64


@settings(max_examples=150, deadline=None)
@given(complexes())
def test_complex_round_trip(delta):
    assert parse_document(json.loads(json.dumps(dump_complex(delta)))).value == delta


def test_void_round_trip():
    v = SimplicialComplex.void_on(BiGround(2, 1))
    assert parse_document(dump_complex(v)).value == v


@settings(max_examples=150, deadline=None)
@given(monomial_ideals())
def test_monomial_round_trip(I):
    doc = parse_document(json.loads(json.dumps(dump_monomial(I))))
    assert doc.kind == "monomial" and doc.value == I


def test_form_round_trip():
    f = BihomogeneousForm.build(BiGround(2, 1), [(2, (1, 0), (1,)), (-1, (0, 1), (1,))])
    assert parse_document(dump_form(f)).value == f
