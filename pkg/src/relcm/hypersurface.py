"""Finiteness and Artinianness of top local cohomology of ``R = S/fS``.

Only forms whose coefficients (as polynomials in the y's) are single
monomials in the x's are decided; scalars are carried as nonzero markers and
never inspected.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex_core import BiGround, ComplexError

Exponents = tuple[int, ...]


class ZeroFormError(ValueError):
    pass


class Verdict(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    INCONCLUSIVE = "inconclusive"
    UNSUPPORTED = "unsupported-coefficients"


@dataclass(frozen=True)
class Term:
    coeff: object
    x: Exponents
    y: Exponents


@dataclass(frozen=True)
class BihomogeneousForm:
    ground: BiGround
    terms: tuple[Term, ...]
    bidegree: tuple[int, int]

    @classmethod
    def build(
        cls,
        ground: BiGround,
        terms: Iterable[tuple[object, Sequence[int], Sequence[int]] | tuple[Sequence[int], Sequence[int]]],
        bidegree: Sequence[int] | None = None,
    ) -> BihomogeneousForm:
        parsed = []
        for t in terms:
            coeff, c, d = t if len(t) == 3 else (1, *t)
            c, d = tuple(int(e) for e in c), tuple(int(e) for e in d)
            if len(c) != ground.m or len(d) != ground.n:
                raise ComplexError(f"term exponents ({list(c)}, {list(d)}) do not match m={ground.m}, n={ground.n}")
            if any(e < 0 for e in c + d):
                raise ComplexError("negative exponent in term")
            if coeff == 0:
                raise ComplexError("term coefficients are nonzero markers")
            parsed.append(Term(coeff, c, d))
        if not parsed:
            raise ZeroFormError("the zero form")
        if len({(t.x, t.y) for t in parsed}) != len(parsed):
            raise ComplexError("two terms share the same monomial")
        degs = {(sum(t.x), sum(t.y)) for t in parsed}
        if bidegree is None:
            if len(degs) != 1:
                raise ComplexError(f"terms have different bidegrees {sorted(degs)}")
            (bidegree,) = degs
        bidegree = (int(bidegree[0]), int(bidegree[1]))
        if degs != {bidegree}:
            raise ComplexError(f"form is not bihomogeneous of degree {bidegree}: term degrees {sorted(degs)}")
        return cls(ground, tuple(parsed), bidegree)


@dataclass(frozen=True)
class ContentIdeal:
    """The ideal of ``K[x]`` generated by the y-coefficients of a form."""

    m: int
    generators: tuple[Exponents, ...]
    supported: bool

    def minimal_generator_count(self) -> int:
        return len(self.generators)


def _minimal_x_monomials(monos: Iterable[Exponents]) -> tuple[Exponents, ...]:
    uniq = sorted(set(monos), key=lambda c: (sum(c), c))
    kept: list[Exponents] = []
    for c in uniq:
        if not any(all(p <= q for p, q in zip(k, c)) for k in kept):
            kept.append(c)
    return tuple(sorted(kept))


def content_ideal(f: BihomogeneousForm) -> ContentIdeal:
    groups: dict[Exponents, list[Term]] = {}
    for t in f.terms:
        groups.setdefault(t.y, []).append(t)
    m = f.ground.m
    if any(len(g) > 1 for g in groups.values()):
        return ContentIdeal(m, (), False)
    return ContentIdeal(m, _minimal_x_monomials(g[0].x for g in groups.values()), True)


def is_P0_primary(c: ContentIdeal) -> bool:
    """Primary to ``(x_1, ..., x_m)``: a pure power of every variable is present.

    A monomial ideal has radical ``P₀`` exactly when each ``x_i^k`` (``k >= 1``)
    occurs among its generators; ``P₀`` is maximal, so that makes it primary.
    The unit ideal (a constant coefficient) is not primary.
    """
    if not c.supported:
        raise ValueError("content ideal has non-monomial coefficients")
    if c.m == 0:
        return False
    pure = set()
    for g in c.generators:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) == 1:
            pure.add(nz[0])
    return len(pure) == c.m


def is_system_of_parameters(c: ContentIdeal) -> bool:
    """Exactly ``m`` minimal monomial generators forming a ``P₀``-primary ideal."""
    return is_P0_primary(c) and c.minimal_generator_count() == c.m


@dataclass(frozen=True)
class ArtinianReport:
    m: int
    n: int
    h_n_minus_1_finitely_generated: bool
    h_n_minus_1_artinian: bool
    h_n_artinian: Verdict
    content: ContentIdeal
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "h_n_minus_1_finitely_generated": self.h_n_minus_1_finitely_generated,
            "h_n_minus_1_artinian": self.h_n_minus_1_artinian,
            "h_n_artinian": self.h_n_artinian.value,
            "content_ideal": {
                "supported": self.content.supported,
                "generators": [list(g) for g in self.content.generators],
            },
            "notes": list(self.notes),
        }


def artinian_report(f: BihomogeneousForm) -> ArtinianReport:
    m, n = f.ground.m, f.ground.n
    c = content_ideal(f)
    notes = []

    if n >= 2:
        fg = False
    elif n == 1:
        fg = True
        notes.append("n = 1: H^0_Q(R) is a submodule of R, hence finitely generated")
    else:
        fg = True
        notes.append("n = 0: index n-1 = -1, the module is zero")

    if n >= 1:
        art_low = m == 0
    else:
        art_low = True

    if m <= 1:
        top = Verdict.TRUE
        if m == 0:
            notes.append("m = 0: R is Cohen-Macaulay of dimension n-1 and H^n_Q(R) = 0")
    elif not c.supported:
        top = Verdict.UNSUPPORTED
    elif not is_P0_primary(c):
        top = Verdict.FALSE
        notes.append("c(f) is not P0-primary")
    elif is_system_of_parameters(c):
        top = Verdict.FALSE
        notes.append("c(f) is minimally generated by a system of parameters")
    else:
        top = Verdict.INCONCLUSIVE
        notes.append("c(f) is P0-primary and not a system of parameters; no sufficient criterion")

    return ArtinianReport(m, n, fg, art_low, top, c, tuple(notes))
