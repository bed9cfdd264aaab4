"""Bigraded monomial ideals and the local cohomology of ``S/I`` along ``Q``.

A generator ``x^c y^d`` is stored as an exponent pair ``(c, d)``.  For a degree
``(a, b)`` with ``a >= 0`` let ``G_b = {j : b_j < 0}``.  A set ``L ⊆ [n]`` with
``G_b ⊆ L`` is *allowed* when every generator ``u`` has some ``j ∉ L`` with
``ν_j(u₂) > b_j`` or some ``i`` with ``ν_i(u₁) > a_i``.  The complex
``Δ_(a,b)(I)`` has faces ``L - G_b`` over allowed ``L``, and

    H^i_Q(S/I)_(a,b)  ≅  H̃_{i-|G_b|-1}(Δ_(a,b)(I); K).

The component vanishes when some ``a_i < 0`` or some ``b_j >= ρ_j``; there is
no lower bound on ``a`` beyond ``a >= 0`` (``S/(x³)`` has ``H¹_Q`` in x-degrees
0, 1 and 2).  :func:`cech_component_dim` recomputes components straight from
the Čech complex on ``y_1..y_n`` and serves as an independent check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .complex_core import (
    MINUS_INFINITY,
    BiGround,
    ComplexError,
    SimplicialComplex,
    maximal,
)
from .field_homology import RATIONALS, FieldSpec, reduced_homology
from .local_cohomology import CohomologyProfile, RCMResult, is_relative_CM_Q
from .stanley_reisner import complex_of_squarefree_ideal

Exponents = tuple[int, ...]
Generator = tuple[Exponents, Exponents]


class UnitIdealError(ValueError):
    """``S/I`` is the zero ring."""


def _divides(u: Generator, v: Generator) -> bool:
    return all(p <= q for p, q in zip(u[0], v[0])) and all(p <= q for p, q in zip(u[1], v[1]))


@dataclass(frozen=True)
class MonomialIdeal:
    ground: BiGround
    generators: tuple[Generator, ...]

    @classmethod
    def minimalize(cls, ground: BiGround, generators: Iterable[tuple[Sequence[int], Sequence[int]]]) -> MonomialIdeal:
        gens = []
        for c, d in generators:
            c, d = tuple(int(e) for e in c), tuple(int(e) for e in d)
            if len(c) != ground.m or len(d) != ground.n:
                raise ComplexError(f"generator ({list(c)}, {list(d)}) does not match m={ground.m}, n={ground.n}")
            if any(e < 0 for e in c + d):
                raise ComplexError(f"negative exponent in generator ({list(c)}, {list(d)})")
            gens.append((c, d))
        uniq = sorted(set(gens), key=lambda u: (sum(u[0]) + sum(u[1]), u))
        kept: list[Generator] = []
        for u in uniq:
            if not any(_divides(v, u) for v in kept):
                kept.append(u)
        return cls(ground, tuple(sorted(kept)))

    @property
    def sigma(self) -> Exponents:
        return tuple(max((u[0][i] for u in self.generators), default=0) for i in range(self.ground.m))

    @property
    def rho(self) -> Exponents:
        return tuple(max((u[1][j] for u in self.generators), default=0) for j in range(self.ground.n))

    def is_unit(self) -> bool:
        return any(not any(c) and not any(d) for c, d in self.generators)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for c, d in self.generators for e in c + d)

    def contains(self, c: Sequence[int], d: Sequence[int]) -> bool:
        """Membership of the monomial ``x^c y^d``."""
        return any(_divides(u, (tuple(c), tuple(d))) for u in self.generators)

    def require_proper(self) -> None:
        if self.is_unit():
            raise UnitIdealError("the unit ideal: S/I = 0")


def radical(I: MonomialIdeal) -> MonomialIdeal:
    capped = [(tuple(min(e, 1) for e in c), tuple(min(e, 1) for e in d)) for c, d in I.generators]
    return MonomialIdeal.minimalize(I.ground, capped)


def radical_complex(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley–Reisner ideal is ``√I``."""
    I.require_proper()
    return complex_of_squarefree_ideal((c + d for c, d in radical(I).generators), I.ground)


def from_squarefree(delta_gens: Iterable[Sequence[int]], ground: BiGround) -> MonomialIdeal:
    gens = [(tuple(g[: ground.m]), tuple(g[ground.m:])) for g in delta_gens]
    return MonomialIdeal.minimalize(ground, gens)


def _check_degree(I: MonomialIdeal, a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != I.ground.m or len(b) != I.ground.n:
        raise ComplexError(f"degree has shape ({len(a)}, {len(b)}), expected ({I.ground.m}, {I.ground.n})")


def _allowed(I: MonomialIdeal, a: Sequence[int], b: Sequence[int], L: int) -> bool:
    n = I.ground.n
    for c, d in I.generators:
        if any(c[i] > a[i] >= 0 for i in range(len(a))):
            continue
        if any(not (L >> j) & 1 and d[j] > b[j] >= 0 for j in range(n)):
            continue
        return False
    return True


def delta_ab(I: MonomialIdeal, a: Sequence[int], b: Sequence[int]) -> SimplicialComplex:
    """``Δ_(a,b)(I)`` as a complex on the W-vertices of ``I.ground``."""
    _check_degree(I, a, b)
    if any(x < 0 for x in a):
        raise ComplexError("a must lie in Z^m_+")
    g = I.ground
    n = g.n
    Gb = sum(1 << j for j in range(n) if b[j] < 0)
    rest = [j for j in range(n) if not (Gb >> j) & 1]
    faces = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            L = Gb | sum(1 << j for j in combo)
            if _allowed(I, a, b, L):
                faces.append((L & ~Gb) << g.m)
    if not faces:
        return SimplicialComplex.void_on(g)
    return SimplicialComplex(g, maximal(faces))


def component_dim_monomial(
    I: MonomialIdeal, i: int, a: Sequence[int], b: Sequence[int], field: FieldSpec = RATIONALS
) -> int:
    _check_degree(I, a, b)
    if any(x < 0 for x in a):
        return 0
    if any(bj >= rj for bj, rj in zip(b, I.rho)):
        return 0
    Gb = sum(1 for x in b if x < 0)
    return reduced_homology(delta_ab(I, a, b), field)[i - Gb - 1]


def representative_degrees(I: MonomialIdeal) -> Iterator[tuple[Exponents, Exponents]]:
    """One degree from every class on which ``Δ_(a,b)(I)`` is constant.

    ``a_i`` runs over ``0..σ_i`` (every ``a_i >= σ_i`` behaves like ``σ_i``) and
    ``b_j`` over ``-1..ρ_j-1`` (every ``b_j <= -1`` behaves like ``-1``; larger
    ``b_j`` give zero components).
    """
    a_ranges = [range(0, s + 1) for s in I.sigma]
    b_ranges = [range(-1, r) for r in I.rho]
    for a in itertools.product(*a_ranges):
        for b in itertools.product(*b_ranges):
            yield tuple(a), tuple(b)


@dataclass(frozen=True)
class DegreeWitness:
    a: Exponents
    b: Exponents
    degree: int
    dim: int


def vanishing_profile_monomial(I: MonomialIdeal, field: FieldSpec = RATIONALS) -> CohomologyProfile:
    I.require_proper()
    witnesses: dict[int, DegreeWitness] = {}
    for a, b in representative_degrees(I):
        h = reduced_homology(delta_ab(I, a, b), field)
        shift = sum(1 for x in b if x < 0) + 1
        for deg in h.nonzero_degrees():
            i = deg + shift
            if i not in witnesses:
                witnesses[i] = DegreeWitness(a, b, deg, h[deg])
    return CohomologyProfile(tuple(sorted(witnesses)), dict(sorted(witnesses.items())), field)


def is_relative_CM_monomial(I: MonomialIdeal, field: FieldSpec = RATIONALS) -> RCMResult:
    """Whether ``S/I`` has exactly one nonvanishing ``H^i_Q``."""
    prof = vanishing_profile_monomial(I, field)
    if prof.is_singleton():
        return RCMResult(True, prof.nonzero[0])
    return RCMResult(False, None)


def radical_criterion(I: MonomialIdeal, field: FieldSpec = RATIONALS) -> RCMResult:
    """The link criterion applied to the complex of ``√I``.

    Necessary for ``S/I`` to be relative CM but not sufficient:
    ``I = (y₁², y₁y₂)`` with ``m = 0`` passes while ``S/I`` has depth 0.
    """
    return is_relative_CM_Q(radical_complex(I), field)


def regularity_bound(I: MonomialIdeal, field: FieldSpec = RATIONALS) -> int:
    """``Σ_j ρ_j - n + q`` for ``S/I`` relative CM with ``cd(Q, S/I) = q``."""
    r = is_relative_CM_monomial(I, field)
    if not r:
        raise ComplexError("S/I is not relative Cohen-Macaulay with respect to Q")
    return sum(I.rho) - I.ground.n + r.q


def a_invariant_monomial(I: MonomialIdeal, i: int, field: FieldSpec = RATIONALS) -> float | int:
    """``sup{|b| : H^i_Q(S/I)_(a,b) ≠ 0}`` (minus infinity if the module is zero)."""
    I.require_proper()
    best: float | int = MINUS_INFINITY
    for a, b in representative_degrees(I):
        if sum(b) > best and component_dim_monomial(I, i, a, b, field):
            best = sum(b)
    return best


def cohomological_dimension(I: MonomialIdeal, field: FieldSpec = RATIONALS) -> int:
    return vanishing_profile_monomial(I, field).nonzero[-1]


# ---------------------------------------------------------------------------
# direct Čech computation


def cech_component_dim(
    I: MonomialIdeal, i: int, a: Sequence[int], b: Sequence[int], field: FieldSpec = RATIONALS
) -> int:
    """``dim_K H^i_Q(S/I)_(a,b)`` from the Čech complex on ``y_1, ..., y_n``.

    ``C^k = ⊕_{|U|=k} (S/I)_{y_U}``.  In degree ``(a, b)`` the summand for ``U``
    is spanned by the class of ``x^a y^b`` when ``a >= 0``, ``b_j >= 0`` off
    ``U`` and ``x^a y^{b + N·1_U} ∉ I`` for large ``N``; otherwise it is zero.
    Ranks are taken by dense elimination, independent of the library's
    boundary-matrix code.
    """
    _check_degree(I, a, b)
    n = I.ground.n
    if any(x < 0 for x in a):
        return 0
    big = [max(I.rho[j], 0) + abs(b[j]) + 1 for j in range(n)]

    def alive(U: tuple[int, ...]) -> bool:
        if any(b[j] < 0 for j in range(n) if j not in U):
            return False
        e = [big[j] + b[j] if j in U else b[j] for j in range(n)]
        return not I.contains(a, e)

    basis = {
        k: [U for U in itertools.combinations(range(n), k) if alive(U)]
        for k in range(0, n + 1)
    }

    def rank(k: int) -> int:
        src, dst = basis.get(k, []), basis.get(k + 1, [])
        if not src or not dst:
            return 0
        pos = {U: r for r, U in enumerate(dst)}
        rows = []
        for U in src:
            row = [0] * len(dst)
            for j in range(n):
                if j in U:
                    continue
                V = tuple(sorted(U + (j,)))
                if V in pos:
                    row[pos[V]] = (-1) ** sum(1 for t in U if t < j)
            rows.append(row)
        return _dense_rank(rows, field.p)

    return len(basis.get(i, [])) - rank(i) - rank(i - 1)


def _dense_rank(rows: list[list[int]], p: int) -> int:
    if p:
        mat = [[v % p for v in r] for r in rows]
    else:
        mat = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        lead = mat[rank][col]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                if p:
                    f = mat[r][col] * pow(lead, -1, p) % p
                    mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[rank])]
                else:
                    f = mat[r][col] / lead
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[rank])]
        rank += 1
    return rank

