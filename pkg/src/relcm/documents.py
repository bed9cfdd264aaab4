"""JSON input documents: complexes, squarefree ideals, monomial ideals and forms.

Sample documents::

    {"m": 2, "n": 2, "vertex_names": {"v": ["v1","v2"], "w": ["w1","w2"]},
     "facets": [["v1","w1"], ["v2","w2"]]}
    {"m": 2, "n": 2, "generators": [{"x": [2,0], "y": [1,0]}, {"x": [0,1], "y": [0,3]}]}
    {"m": 2, "n": 2, "bidegree": [2,1], "terms": [{"x": [2,0], "y": [1,0]}, {"x": [1,1], "y": [0,1]}]}

A complex document may instead give ``"ideal": [[0/1 ...], ...]`` (squarefree
generators over ``x_1..x_m, y_1..y_n``).  A monomial document is recognized by
generators written as ``{"x": ..., "y": ...}`` objects.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .complex_core import BiGround, ComplexError, SimplicialComplex
from .hypersurface import BihomogeneousForm
from .monomial_ideals import MonomialIdeal
from .stanley_reisner import complex_of_squarefree_ideal


class DocumentError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message, self.line, self.column = message, line, column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


@dataclass(frozen=True)
class Document:
    kind: str  # "complex" | "monomial" | "form"
    raw: dict
    value: Any

    @property
    def digest(self) -> str:
        return canonical_digest(self.raw)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def canonical_digest(obj: Any) -> str:
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


def loads(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    if not isinstance(obj, dict):
        raise DocumentError("top-level value must be an object")
    return obj


def read_document(path: str | Path) -> Document:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise DocumentError(f"cannot read {path}: {e}") from None
    return parse_document(loads(text))


def parse_document(obj: dict) -> Document:
    try:
        if "terms" in obj:
            return Document("form", obj, parse_form(obj))
        gens = obj.get("generators")
        if gens is not None and all(isinstance(g, dict) for g in gens):
            return Document("monomial", obj, parse_monomial(obj))
        return Document("complex", obj, parse_complex(obj))
    except ComplexError as e:
        raise DocumentError(str(e)) from None


def _int(obj: dict, key: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise DocumentError(f"field {key!r} must be a nonnegative integer")
    return v


def _ground(obj: dict) -> BiGround:
    m, n = _int(obj, "m"), _int(obj, "n")
    names = obj.get("vertex_names") or {}
    if not isinstance(names, dict):
        raise DocumentError("vertex_names must be an object with keys 'v' and 'w'")
    try:
        return BiGround(m, n, tuple(names.get("v", ())), tuple(names.get("w", ())))
    except (ComplexError, TypeError) as e:
        raise DocumentError(f"bad vertex names: {e}") from None


def _exponents(v: Any, length: int, what: str) -> tuple[int, ...]:
    if not isinstance(v, list) or len(v) != length or not all(isinstance(e, int) and not isinstance(e, bool) for e in v):
        raise DocumentError(f"{what} must be a list of {length} integers, got {v!r}")
    return tuple(v)


def parse_complex(obj: dict) -> SimplicialComplex:
    g = _ground(obj)
    if obj.get("void"):
        if obj.get("facets"):
            raise DocumentError("a void complex has no facets")
        return SimplicialComplex.void_on(g)
    if "ideal" in obj or "generators" in obj:
        gens = obj.get("ideal", obj.get("generators"))
        if not isinstance(gens, list):
            raise DocumentError("ideal must be a list of exponent vectors")
        return complex_of_squarefree_ideal([_exponents(x, g.size, "generator") for x in gens], g)
    facets = obj.get("facets")
    if not isinstance(facets, list) or not facets:
        raise DocumentError("facets must be a non-empty list (or set \"void\": true)")
    parsed = []
    for f in facets:
        if not isinstance(f, list):
            raise DocumentError(f"facet {f!r} must be a list")
        mask = 0
        for x in f:
            if isinstance(x, bool) or not isinstance(x, (int, str)):
                raise DocumentError(f"bad vertex {x!r}")
            if isinstance(x, int):
                if not 0 <= x < g.size:
                    raise DocumentError(f"vertex index {x} out of range 0..{g.size - 1}")
                mask |= 1 << x
            else:
                try:
                    mask |= 1 << g.index(x)
                except ComplexError as e:
                    raise DocumentError(str(e)) from None
        parsed.append(mask)
    return SimplicialComplex(g, parsed)


def parse_monomial(obj: dict) -> MonomialIdeal:
    g = _ground(obj)
    gens = []
    for u in obj["generators"]:
        gens.append((_exponents(u.get("x", [0] * g.m), g.m, "x"), _exponents(u.get("y", [0] * g.n), g.n, "y")))
    return MonomialIdeal.minimalize(g, gens)


def parse_form(obj: dict) -> BihomogeneousForm:
    g = _ground(obj)
    terms = obj["terms"]
    if not isinstance(terms, list):
        raise DocumentError("terms must be a list")
    parsed = []
    for t in terms:
        if not isinstance(t, dict):
            raise DocumentError(f"term {t!r} must be an object")
        coeff = t.get("coeff", 1)
        parsed.append((coeff, _exponents(t.get("x", [0] * g.m), g.m, "x"), _exponents(t.get("y", [0] * g.n), g.n, "y")))
    bideg = obj.get("bidegree")
    if bideg is not None:
        bideg = _exponents(bideg, 2, "bidegree")
    return BihomogeneousForm.build(g, parsed, bideg)


# ---------------------------------------------------------------------------
# serializers


def _names_block(g: BiGround) -> dict:
    return {"v": list(g.v_names), "w": list(g.w_names)}


def dump_complex(delta: SimplicialComplex) -> dict:
    g = delta.ground
    out: dict = {"m": g.m, "n": g.n, "vertex_names": _names_block(g)}
    if delta.void:
        out["void"] = True
        out["facets"] = []
    else:
        out["facets"] = [g.face_names(F) for F in delta.facets]
    return out


def dump_monomial(I: MonomialIdeal) -> dict:
    g = I.ground
    return {
        "m": g.m,
        "n": g.n,
        "generators": [{"x": list(c), "y": list(d)} for c, d in I.generators],
    }


def dump_form(f: BihomogeneousForm) -> dict:
    g = f.ground
    return {
        "m": g.m,
        "n": g.n,
        "bidegree": list(f.bidegree),
        "terms": [{"coeff": t.coeff, "x": list(t.x), "y": list(t.y)} for t in f.terms],
    }
