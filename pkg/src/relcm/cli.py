"""``relcm`` command-line interface.

Every command builds a :class:`RunReport`.  With ``--json`` the report is
printed as canonical JSON (sorted keys); otherwise a short human summary is
printed.  Exit status: 0 on success, 1 when a property suite finds a
failure, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Sequence

from . import __version__
from .complex_core import ComplexError, SimplicialComplex
from .documents import Document, DocumentError, read_document
from .field_homology import FieldSpec
from .hypersurface import ZeroFormError, artinian_report
from .local_cohomology import (
    BigradedDegree,
    CohomologyProfile,
    component_dim,
    component_krull_dim_x,
    grade_Q,
    hochster_terms,
    is_relative_CM_Q,
    reisner_classic,
    remark_discrepancies,
    top_cohomology_artinian,
    vanishing_profile,
)
from .monomial_ideals import (
    MonomialIdeal,
    UnitIdealError,
    cohomological_dimension,
    component_dim_monomial,
    delta_ab,
    from_squarefree,
    is_relative_CM_monomial,
    radical,
    radical_complex,
    radical_criterion,
    regularity_bound,
    vanishing_profile_monomial,
)
from .propsuite import run_suite
from .stanley_reisner import (
    cd_P,
    cd_P_oracle,
    cd_Q,
    cd_Q_oracle,
    facet_primes,
    is_relative_unmixed_Q,
    stanley_reisner_ideal,
)

SCHEMA_VERSION = "1.0"

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "relcm run report",
    "type": "object",
    "required": ["schema_version", "tool", "version", "command", "input_digest", "field", "ok", "results"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "tool": {"const": "relcm"},
        "version": {"type": "string"},
        "command": {"type": "string"},
        "input_digest": {"type": ["string", "null"], "pattern": "^[0-9a-f]{64}$"},
        "field": {"type": "string", "pattern": "^(q|fp:[0-9]+)$"},
        "ok": {"type": "boolean"},
        "results": {"type": "object"},
        "error": {
            "type": "object",
            "required": ["message"],
            "properties": {
                "message": {"type": "string"},
                "line": {"type": ["integer", "null"]},
                "column": {"type": ["integer", "null"]},
            },
        },
        "timing": {
            "type": "object",
            "required": ["seconds"],
            "properties": {"seconds": {"type": "number", "minimum": 0}},
        },
    },
}


@dataclass
class RunReport:
    command: str
    field: FieldSpec
    input_digest: str | None = None
    results: dict = dc_field(default_factory=dict)
    ok: bool = True
    error: dict | None = None
    seconds: float | None = None
    version: str = __version__

    def payload(self, timing: bool = False) -> dict:
        out: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "tool": "relcm",
            "version": self.version,
            "command": self.command,
            "input_digest": self.input_digest,
            "field": str(self.field),
            "ok": self.ok,
            "results": self.results,
        }
        if self.error is not None:
            out["error"] = self.error
        if timing and self.seconds is not None:
            out["timing"] = {"seconds": round(self.seconds, 6)}
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.payload(timing), sort_keys=True, ensure_ascii=False, indent=2)


class InputError(Exception):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line, self.column = line, column


# ---------------------------------------------------------------------------
# helpers


def _num(x: float | int) -> int | str:
    """JSON-friendly dimension: integers pass, minus infinity becomes a string."""
    return x if isinstance(x, int) else "-inf"


def _csv(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _names(delta: SimplicialComplex, mask: int) -> list[str]:
    return delta.ground.face_names(mask)


def _profile_dict(delta: SimplicialComplex, prof: CohomologyProfile) -> dict:
    return {
        "nonzero": list(prof.nonzero),
        "grade": prof.grade,
        "cd": prof.cd,
        "witnesses": {
            str(i): {"F": _names(delta, w.F), "G": _names(delta, w.G), "homology_degree": w.degree, "dim": w.dim}
            for i, w in prof.witnesses.items()
        },
    }


def _monomial_profile_dict(prof: CohomologyProfile) -> dict:
    return {
        "nonzero": list(prof.nonzero),
        "grade": prof.grade,
        "cd": prof.cd,
        "witnesses": {
            str(i): {"a": list(w.a), "b": list(w.b), "homology_degree": w.degree, "dim": w.dim}
            for i, w in prof.witnesses.items()
        },
    }


def _rcm_dict(delta: SimplicialComplex, r) -> dict:
    out: dict[str, Any] = {"holds": r.holds, "q": r.q}
    if r.violation is not None:
        w = r.violation
        out["violation"] = {"F": _names(delta, w.F), "G": _names(delta, w.G), "homology_degree": w.degree, "dim": w.dim}
    return out


def _need_complex(doc: Document) -> SimplicialComplex:
    if doc.kind == "complex":
        delta = doc.value
    elif doc.kind == "monomial":
        I = doc.value
        if not I.is_squarefree():
            raise InputError("this command needs a complex or squarefree ideal; use 'relcm monomial ...'")
        delta = radical_complex(I)
    else:
        raise InputError(f"expected a complex document, got a {doc.kind} document")
    if delta.void:
        raise InputError("the void complex (unit ideal) has K[Δ] = 0")
    return delta


def _need_monomial(doc: Document) -> MonomialIdeal:
    if doc.kind == "monomial":
        return doc.value
    if doc.kind == "complex":
        delta = doc.value
        if delta.void:
            raise InputError("the unit ideal")
        return from_squarefree(stanley_reisner_ideal(delta), delta.ground)
    raise InputError(f"expected a monomial ideal document, got a {doc.kind} document")


# ---------------------------------------------------------------------------
# commands; each returns the results dict


def analyze_complex(delta: SimplicialComplex, field: FieldSpec) -> dict:
    dW, dV = delta.restrict_W(), delta.restrict_V()
    prof = vanishing_profile(delta, field)
    r = is_relative_CM_Q(delta, field)
    out: dict[str, Any] = {
        "dim": _num(delta.dim()),
        "dim_W": _num(dW.dim()),
        "dim_V": _num(dV.dim()),
        "cd_Q": cd_Q(delta),
        "cd_P": cd_P(delta),
        "cd_Q_oracle": cd_Q_oracle(delta),
        "cd_P_oracle": cd_P_oracle(delta),
        "grade_Q": grade_Q(delta, field),
        "profile": _profile_dict(delta, prof),
        "relative_cm_Q": _rcm_dict(delta, r),
        "relative_unmixed_Q": is_relative_unmixed_Q(delta),
        "delta_W_pure": dW.is_pure(),
        "delta_W_connected": dW.is_connected(),
        "facet_primes": [fp.variables() for fp in facet_primes(delta)],
    }
    if r and field.is_rational:
        out["top_cohomology_artinian"] = top_cohomology_artinian(delta)
    if delta.ground.m == 0:
        out["cohen_macaulay_classic"] = reisner_classic(delta, field)
    return out


def analyze_monomial(I: MonomialIdeal, field: FieldSpec) -> dict:
    I.require_proper()
    prof = vanishing_profile_monomial(I, field)
    r = is_relative_CM_monomial(I, field)
    rad = radical_complex(I)
    out: dict[str, Any] = {
        "generators": [{"x": list(c), "y": list(d)} for c, d in I.generators],
        "sigma": list(I.sigma),
        "rho": list(I.rho),
        "radical": [{"x": list(c), "y": list(d)} for c, d in radical(I).generators],
        "profile": _monomial_profile_dict(prof),
        "relative_cm_Q": {"holds": r.holds, "q": r.q},
        "radical_criterion": radical_criterion(I, field).holds,
        "radical_complex": analyze_complex(rad, field),
    }
    if r:
        out["regularity_bound"] = regularity_bound(I, field)
    return out


def cmd_analyze(doc: Document, args) -> dict:
    if doc.kind == "monomial":
        return analyze_monomial(doc.value, args.field)
    return analyze_complex(_need_complex(doc), args.field)


def cmd_rcm(doc: Document, args) -> dict:
    delta = _need_complex(doc)
    return _rcm_dict(delta, is_relative_CM_Q(delta, args.field))


def cmd_profile(doc: Document, args) -> dict:
    delta = _need_complex(doc)
    return _profile_dict(delta, vanishing_profile(delta, args.field))


def cmd_hochster(doc: Document, args) -> dict:
    delta = _need_complex(doc)
    terms = hochster_terms(delta, args.i, args.field)
    return {
        "i": args.i,
        "terms": [{"F": _names(delta, t.F), "G": _names(delta, t.G), "coeff": t.coeff} for t in terms],
    }


def _degree_indices(i: int | None, top: int) -> list[int]:
    return [i] if i is not None else list(range(0, top + 1))


def cmd_component(doc: Document, args) -> dict:
    delta = _need_complex(doc)
    g = delta.ground
    try:
        d = BigradedDegree(args.a, args.b).check(g.m, g.n)
    except ComplexError as e:
        raise InputError(str(e)) from None
    dims = {str(i): component_dim(delta, i, d, args.field) for i in _degree_indices(args.i, g.n)}
    return {"a": list(d.a), "b": list(d.b), "dims": dims}


def cmd_krulldim(doc: Document, args) -> dict:
    delta = _need_complex(doc)
    try:
        k = component_krull_dim_x(delta, args.i, args.b, args.field)
    except ComplexError as e:
        raise InputError(str(e)) from None
    return {"i": args.i, "b": list(args.b), "krull_dim": _num(k)}


def cmd_remark(doc: Document, args) -> dict:
    delta = _need_complex(doc)
    pairs = remark_discrepancies(delta)
    return {
        "holds": not pairs,
        "discrepancies": [{"F": _names(delta, F), "G": _names(delta, G)} for F, G in pairs],
    }


def cmd_hypersurface(doc: Document, args) -> dict:
    if doc.kind != "form":
        raise InputError(f"expected a form document, got a {doc.kind} document")
    return artinian_report(doc.value).as_dict()


def cmd_monomial(doc: Document, args) -> dict:
    I = _need_monomial(doc)
    I.require_proper()
    f = args.field
    sub = args.subcommand
    if sub == "profile":
        return _monomial_profile_dict(vanishing_profile_monomial(I, f))
    if sub == "rcm":
        r = is_relative_CM_monomial(I, f)
        return {"holds": r.holds, "q": r.q, "radical_criterion": radical_criterion(I, f).holds}
    if sub == "component":
        if len(args.a) != I.ground.m or len(args.b) != I.ground.n:
            raise InputError(f"degree must have shape ({I.ground.m}, {I.ground.n})")
        dims = {str(i): component_dim_monomial(I, i, args.a, args.b, f) for i in _degree_indices(args.i, I.ground.n)}
        return {"a": list(args.a), "b": list(args.b), "dims": dims}
    if sub == "delta":
        if len(args.a) != I.ground.m or len(args.b) != I.ground.n or any(x < 0 for x in args.a):
            raise InputError(f"degree must have shape ({I.ground.m}, {I.ground.n}) with a >= 0")
        D = delta_ab(I, args.a, args.b)
        facets = [] if D.void else [D.ground.face_names(F) for F in D.facets]
        return {"a": list(args.a), "b": list(args.b), "void": D.void, "facets": facets}
    if sub == "regbound":
        try:
            return {"bound": regularity_bound(I, f), "rho": list(I.rho), "cd": cohomological_dimension(I, f)}
        except ComplexError as e:
            raise InputError(str(e)) from None
    if sub == "radical":
        return {"generators": [{"x": list(c), "y": list(d)} for c, d in radical(I).generators]}
    raise InputError(f"unknown monomial subcommand {sub!r}")


# ---------------------------------------------------------------------------
# human summaries


def _summary(report: RunReport) -> str:
    if report.error is not None:
        e = report.error
        where = f" at line {e['line']}, column {e['column']}" if e.get("line") is not None else ""
        return f"error: {e['message']}{where}"
    lines = [f"{report.command} [{report.field}]"]
    res = report.results
    if report.command == "propsuite":
        for p in res["properties"]:
            mark = "PASS" if p["passed"] else "FAIL"
            lines.append(f"  {mark} {p['name']}: {p['checked'] - p['failures']}/{p['checked']}")
            if not p["passed"]:
                lines.append(f"       {p['message']}")
                lines.append(f"       {json.dumps(p['counterexample'], sort_keys=True)}")
        hc = res["homology_checks"]
        lines.append(f"  homology checks: {hc['computations']} computations, {len(hc['failures'])} failures")
        return "\n".join(lines)
    for k in sorted(res):
        v = res[k]
        if isinstance(v, (dict, list)):
            v = json.dumps(v, sort_keys=True, ensure_ascii=False)
        lines.append(f"  {k}: {v}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=argparse.SUPPRESS, help="q (default) or fp:<prime>")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the JSON report")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS, help="include wall time in JSON")

    p = argparse.ArgumentParser(prog="relcm", description="Relative Cohen-Macaulayness of bigraded monomial rings.")
    p.add_argument("--version", action="version", version=f"relcm {__version__}")
    p.add_argument("--field", type=_field, default=FieldSpec(0), help="q (default) or fp:<prime>")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.add_argument("--timing", action="store_true", help="include wall time in JSON")
    sub = p.add_subparsers(dest="command", required=True)

    def doc_cmd(name: str, helptext: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("path", help="input document (JSON)")
        return sp

    doc_cmd("analyze", "full report for a complex or monomial ideal")
    doc_cmd("rcm", "relative Cohen-Macaulay test along Q")
    doc_cmd("profile", "indices i with H^i_Q nonzero")
    doc_cmd("remark", "pairs (F, G) where (link F∪G)_W differs from link_{Δ_W} F")
    doc_cmd("hypersurface", "finiteness and Artinianness report for S/fS")
    sp = doc_cmd("hochster", "Hilbert series terms of H^i_Q")
    sp.add_argument("--i", type=int, required=True)
    sp = doc_cmd("component", "dim_K H^i_Q(K[Δ])_(a,b)")
    sp.add_argument("--a", type=_csv, required=True)
    sp.add_argument("--b", type=_csv, required=True)
    sp.add_argument("--i", type=int)
    sp = doc_cmd("krulldim-x", "Krull dimension of H^i_Q(K[Δ])_(*,b) over K[x]")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--b", type=_csv, required=True)

    mp = sub.add_parser("monomial", parents=[common], help="queries on a monomial ideal")
    msub = mp.add_subparsers(dest="subcommand", required=True)
    for name in ("profile", "rcm", "regbound", "radical"):
        q = msub.add_parser(name, parents=[common])
        q.add_argument("path")
    for name in ("component", "delta"):
        q = msub.add_parser(name, parents=[common])
        q.add_argument("path")
        q.add_argument("--a", type=_csv, required=True)
        q.add_argument("--b", type=_csv, required=True)
        if name == "component":
            q.add_argument("--i", type=int)

    ps = sub.add_parser("propsuite", parents=[common], help="seeded randomized property suite")
    ps.add_argument("--seed", type=int, default=1)
    ps.add_argument("--count", type=int, default=200)
    ps.add_argument("--max-m", type=int, default=3)
    ps.add_argument("--max-n", type=int, default=3)
    ps.add_argument("--workers", type=int, default=0)

    sub.add_parser("schema", parents=[common], help="print the JSON schema of run reports")
    return p


COMMANDS: dict[str, Callable[[Document, argparse.Namespace], dict]] = {
    "analyze": cmd_analyze,
    "rcm": cmd_rcm,
    "profile": cmd_profile,
    "hochster": cmd_hochster,
    "component": cmd_component,
    "krulldim-x": cmd_krulldim,
    "remark": cmd_remark,
    "hypersurface": cmd_hypersurface,
    "monomial": cmd_monomial,
}


def run(args: argparse.Namespace) -> tuple[RunReport, int]:
    command = args.command if args.command != "monomial" else f"monomial {args.subcommand}"
    report = RunReport(command, args.field)
    start = time.perf_counter()
    code = 0
    try:
        if args.command == "propsuite":
            if args.count < 1:
                raise InputError("--count must be at least 1")
            if args.seed < 0 or args.seed >= 2**64:
                raise InputError("--seed must be an unsigned 64-bit integer")
            try:
                suite = run_suite(args.seed, args.count, args.max_m, args.max_n, args.workers)
            except ValueError as e:
                raise InputError(str(e)) from None
            report.results = suite.as_dict()
            report.ok = suite.passed
            code = 0 if suite.passed else 1
        else:
            doc = read_document(args.path)
            report.input_digest = doc.digest
            report.results = COMMANDS[args.command](doc, args)
    except DocumentError as e:
        report.ok, code = False, 2
        report.error = {"message": e.message, "line": e.line, "column": e.column}
    except InputError as e:
        report.ok, code = False, 2
        report.error = {"message": str(e), "line": e.line, "column": e.column}
    except (ComplexError, UnitIdealError, ZeroFormError) as e:
        report.ok, code = False, 2
        report.error = {"message": str(e), "line": None, "column": None}
    report.seconds = time.perf_counter() - start
    return report, code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.command == "schema":
        print(json.dumps(REPORT_SCHEMA, sort_keys=True, indent=2))
        return 0
    report, code = run(args)
    if args.json:
        print(report.to_json(timing=args.timing))
    else:
        out = sys.stderr if code == 2 else sys.stdout
        print(_summary(report), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
