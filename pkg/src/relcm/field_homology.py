"""Reduced simplicial homology over the rationals or a prime field.

Boundary matrices are kept as sparse integer columns.  Ranks are computed by
column reduction: fraction-free over the rationals (entries stay integers,
columns are divided by their content after every elimination step), modular
over prime fields.
"""

from __future__ import annotations

import contextlib
from contextvars import ContextVar
from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Iterator

from .complex_core import SimplicialComplex, members

Column = dict[int, int]


class HomologyCheckError(AssertionError):
    """A self-check of a homology computation failed."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``p == 0`` means the rationals, otherwise ``GF(p)``."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("fp:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
        raise ValueError(f"bad field spec {text!r}; expected 'q' or 'fp:<prime>'")

    def __str__(self):
        return "q" if self.p == 0 else f"fp:{self.p}"


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class HomologyVector:
    """``dim H̃_i`` by degree; absent degrees are zero."""

    by_degree: dict[int, int]
    field: FieldSpec = RATIONALS

    def __getitem__(self, i: int) -> int:
        return self.by_degree.get(i, 0)

    def nonzero_degrees(self) -> list[int]:
        return sorted(i for i, d in self.by_degree.items() if d)

    def is_acyclic(self) -> bool:
        return not any(self.by_degree.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * d for i, d in self.by_degree.items())

    def as_dict(self) -> dict[str, int]:
        return {str(i): d for i, d in sorted(self.by_degree.items()) if d}


@dataclass(frozen=True)
class BoundaryMatrix:
    """The augmented boundary map ``∂_k`` from k-chains to (k-1)-chains.

    ``rows`` and ``cols`` hold the indexing faces (as bitmasks, sorted
    lexicographically); ``columns[c]`` maps a row index to a nonzero entry,
    already reduced into the field.
    """

    k: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    columns: tuple[Column, ...]
    field: FieldSpec = RATIONALS

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def to_dense(self) -> list[list[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for c, col in enumerate(self.columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def rank(self) -> int:
        return column_rank(self.columns, self.field)


def _sign(j: int, field: FieldSpec) -> int:
    s = -1 if j % 2 else 1
    return s % field.p if field.p else s


def boundary_matrix(delta: SimplicialComplex, k: int, field: FieldSpec = RATIONALS) -> BoundaryMatrix:
    if delta.void:
        raise ValueError("boundary matrix of the void complex")
    top = delta.dim() + 1
    if k < -1 or k > top:
        return BoundaryMatrix(k, (), (), (), field)
    cols = tuple(delta.faces(k))
    rows = tuple(delta.faces(k - 1))
    return BoundaryMatrix(k, rows, cols, _boundary_columns(cols, rows, field), field)


def _boundary_columns(cols, rows, field: FieldSpec) -> tuple[Column, ...]:
    row_index = {f: r for r, f in enumerate(rows)}
    out = []
    for F in cols:
        col: Column = {}
        for j, v in enumerate(members(F)):
            col[row_index[F & ~(1 << v)]] = _sign(j, field)
        out.append(col)
    return tuple(out)


def column_rank(columns, field: FieldSpec = RATIONALS) -> int:
    """Rank of a matrix given by sparse columns, by pivot-on-lowest-row reduction."""
    p = field.p
    pivots: dict[int, Column] = {}
    for raw in columns:
        col = {r: v % p for r, v in raw.items() if v % p} if p else {r: v for r, v in raw.items() if v}
        while col:
            r = max(col)
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = col
                break
            col = _eliminate(col, piv, r, p)
    return len(pivots)


def _eliminate(col: Column, piv: Column, r: int, p: int) -> Column:
    if p:
        factor = col[r] * pow(piv[r], -1, p) % p
        out = dict(col)
        for i, v in piv.items():
            nv = (out.get(i, 0) - factor * v) % p
            if nv:
                out[i] = nv
            else:
                out.pop(i, None)
        return out
    a, b = piv[r], col[r]
    out = {i: a * v for i, v in col.items()}
    for i, v in piv.items():
        nv = out.get(i, 0) - b * v
        if nv:
            out[i] = nv
        else:
            out.pop(i, None)
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {i: v // g for i, v in out.items()}
    return out


def _compose_is_zero(outer: BoundaryMatrix, inner: BoundaryMatrix) -> bool:
    p = outer.field.p
    for col in inner.columns:
        acc: dict[int, int] = {}
        for mid, v in col.items():
            for r, w in outer.columns[mid].items():
                acc[r] = acc.get(r, 0) + v * w
        if any((x % p if p else x) for x in acc.values()):
            return False
    return True


# ---------------------------------------------------------------------------
# optional self-checks, enabled per context


@dataclass
class CheckLog:
    computations: int = 0
    euler_checks: int = 0
    boundary_checks: int = 0
    failures: list[str] = dc_field(default_factory=list)


_checks: ContextVar[CheckLog | None] = ContextVar("relcm_homology_checks", default=None)


@contextlib.contextmanager
def homology_checks() -> Iterator[CheckLog]:
    """Verify Euler characteristic and ``∂∘∂ = 0`` on every homology call inside."""
    log = CheckLog()
    token = _checks.set(log)
    try:
        yield log
    finally:
        _checks.reset(token)


def reduced_homology(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> HomologyVector:
    if delta.void:
        return HomologyVector({}, field)
    log = _checks.get()
    top = delta.dim()
    mats = [boundary_matrix(delta, k, field) for k in range(0, top + 2)]
    ranks = [m.rank() for m in mats]  # ranks[k] is rank of ∂_k
    ranks.append(0)
    counts = {k: len(delta.faces(k)) for k in range(-1, top + 1)}
    out = {}
    for k in range(-1, top + 1):
        rk = ranks[k] if k >= 0 else 0
        d = counts[k] - rk - ranks[k + 1]
        if d:
            out[k] = d
    h = HomologyVector(out, field)
    if log is not None:
        _run_checks(log, delta, h, counts, mats)
    return h


def _run_checks(log: CheckLog, delta, h: HomologyVector, counts, mats) -> None:
    log.computations += 1
    chi_f = sum((-1) ** k * c for k, c in counts.items())
    log.euler_checks += 1
    if chi_f != h.euler_characteristic():
        msg = f"Euler characteristic mismatch on {delta!r}: faces {chi_f}, homology {h.euler_characteristic()}"
        log.failures.append(msg)
        raise HomologyCheckError(msg)
    for lower, upper in zip(mats, mats[1:]):
        log.boundary_checks += 1
        if not _compose_is_zero(lower, upper):
            msg = f"boundary of boundary nonzero at k={upper.k} on {delta!r}"
            log.failures.append(msg)
            raise HomologyCheckError(msg)


def betti_signature(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> tuple[tuple[int, int], ...]:
    """Hashable summary ``((degree, dim), ...)`` of the nonzero reduced homology."""
    h = reduced_homology(delta, field)
    return tuple(sorted((i, d) for i, d in h.by_degree.items() if d))

