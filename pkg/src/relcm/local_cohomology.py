"""Local cohomology of ``K[Δ]`` with support in ``Q = (y_1, ..., y_n)``.

Everything is driven by one combinatorial fact: for ``a >= 0`` and ``b <= 0``
with ``G = Supp a ⊆ V`` and ``F = Supp b ⊆ W``,

    H^i_Q(K[Δ])_(a,b)  ≅  H̃_{i-|F|-1}( (link_Δ(F ∪ G))_W ; K ),

and the component is zero in every other degree.  The link is taken in ``Δ``
and only then restricted to ``W``; when ``F ∪ G`` is not a face the link is
void and the component vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

from .complex_core import (
    MINUS_INFINITY,
    ComplexError,
    SimplicialComplex,
    cardinality,
    require_nonvoid,
    sorted_submasks,
)
from .field_homology import RATIONALS, FieldSpec, HomologyVector, reduced_homology
from .stanley_reisner import cd_P, cd_Q


@dataclass(frozen=True)
class BigradedDegree:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    def check(self, m: int, n: int) -> BigradedDegree:
        if len(self.a) != m or len(self.b) != n:
            raise ComplexError(f"degree has shape ({len(self.a)}, {len(self.b)}), expected ({m}, {n})")
        return self

    def in_cone(self) -> bool:
        """``a ∈ ℤ^m_+`` and ``b ∈ ℤ^n_-``."""
        return all(x >= 0 for x in self.a) and all(y <= 0 for y in self.b)

    def x_support(self) -> int:
        return sum(1 << i for i, x in enumerate(self.a) if x != 0)

    def y_support(self, m: int) -> int:
        return sum(1 << (m + j) for j, y in enumerate(self.b) if y != 0)

    @property
    def total_b(self) -> int:
        return sum(self.b)


@dataclass(frozen=True)
class Witness:
    """A pair ``(F, G)`` and the homology degree of ``(link(F∪G))_W`` that is nonzero."""

    F: int
    G: int
    degree: int
    dim: int


@dataclass(frozen=True)
class SeriesTerm:
    """One summand ``coeff · ∏_{G} s_i/(1-s_i) · ∏_{F} t_j⁻¹/(1-t_j⁻¹)``."""

    F: int
    G: int
    i: int
    coeff: int

    @property
    def homology_degree(self) -> int:
        return self.i - cardinality(self.F) - 1

    @property
    def max_t_degree(self) -> int:
        return -cardinality(self.F)


@dataclass(frozen=True)
class CohomologyProfile:
    nonzero: tuple[int, ...]
    witnesses: dict = dc_field(default_factory=dict)
    field: FieldSpec = RATIONALS

    @property
    def grade(self) -> int | None:
        return self.nonzero[0] if self.nonzero else None

    @property
    def cd(self) -> int | None:
        return self.nonzero[-1] if self.nonzero else None

    def is_singleton(self) -> bool:
        return len(self.nonzero) == 1


@dataclass(frozen=True)
class RCMResult:
    """Outcome of a relative Cohen–Macaulay test; truthy iff the test holds."""

    holds: bool
    q: int | None = None
    violation: Witness | None = None

    def __bool__(self):
        return self.holds


# ---------------------------------------------------------------------------


def link_W(delta: SimplicialComplex, F: int, G: int) -> SimplicialComplex:
    """``(link_Δ(F ∪ G))_W``."""
    return delta.link(F | G).restrict_W()


def admissible_pairs(delta: SimplicialComplex) -> Iterator[tuple[int, int]]:
    """All ``(F, G)`` with ``F ∈ Δ_W``, ``G ⊆ V`` and ``F ∪ G ∈ Δ``.

    Pairs with ``F ∪ G ∉ Δ`` have void links, hence zero homology, and are
    skipped.  Order: ``F`` by size then lexicographic, ``G`` likewise.
    """
    require_nonvoid(delta)
    for F in delta.restrict_W().all_faces():
        for G in delta.link(F).restrict_V().all_faces():
            yield F, G


def pair_homology(delta: SimplicialComplex, F: int, G: int, field: FieldSpec = RATIONALS) -> HomologyVector:
    return reduced_homology(link_W(delta, F, G), field)


def component_dim(delta: SimplicialComplex, i: int, d: BigradedDegree, field: FieldSpec = RATIONALS) -> int:
    g = delta.ground
    d.check(g.m, g.n)
    if not d.in_cone():
        return 0
    F, G = d.y_support(g.m), d.x_support()
    return pair_homology(delta, F, G, field)[i - cardinality(F) - 1]


def hochster_terms(delta: SimplicialComplex, i: int, field: FieldSpec = RATIONALS) -> list[SeriesTerm]:
    """Nonzero summands of the bigraded Hilbert series of ``H^i_Q(K[Δ])``."""
    out = []
    for F, G in admissible_pairs(delta):
        c = pair_homology(delta, F, G, field)[i - cardinality(F) - 1]
        if c:
            out.append(SeriesTerm(F, G, i, c))
    return out


def vanishing_profile(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> CohomologyProfile:
    """The set of ``i`` with ``H^i_Q(K[Δ]) ≠ 0``, each with its first witness."""
    witnesses: dict[int, Witness] = {}
    for F, G in admissible_pairs(delta):
        h = pair_homology(delta, F, G, field)
        for deg in h.nonzero_degrees():
            i = deg + cardinality(F) + 1
            if i not in witnesses:
                witnesses[i] = Witness(F, G, deg, h[deg])
    return CohomologyProfile(tuple(sorted(witnesses)), dict(sorted(witnesses.items())), field)


def vanishing_profile_P(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> CohomologyProfile:
    """Profile of ``H^i_P(K[Δ])``; witnesses are mapped back to ``delta``'s numbering."""
    t = delta.transpose()
    prof = vanishing_profile(t, field)
    back = t.ground.transpose_face
    wit = {i: Witness(back(w.F), back(w.G), w.degree, w.dim) for i, w in prof.witnesses.items()}
    return CohomologyProfile(prof.nonzero, wit, field)


def grade_Q(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> int:
    return vanishing_profile(delta, field).nonzero[0]


def grade_P(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> int:
    return vanishing_profile(delta.transpose(), field).nonzero[0]


def is_relative_CM_Q(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> RCMResult:
    """Link criterion: ``H̃_i((link(F∪G))_W) = 0`` for ``i < dim link_{Δ_W} F``.

    ``F`` runs over ``Δ_W`` and ``G`` over all subsets of ``V``.  The bound
    ``dim link_{Δ_W} F`` is evaluated on ``Δ_W`` as it stands, pure or not.
    """
    require_nonvoid(delta)
    dW = delta.restrict_W()
    for F, G in admissible_pairs(delta):
        bound = dW.link(F).dim()
        h = pair_homology(delta, F, G, field)
        for deg in h.nonzero_degrees():
            if deg < bound:
                return RCMResult(False, None, Witness(F, G, deg, h[deg]))
    return RCMResult(True, cd_Q(delta))


def is_relative_CM_P(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> RCMResult:
    r = is_relative_CM_Q(delta.transpose(), field)
    if r.violation is None:
        return r
    back = delta.transpose().ground.transpose_face
    w = r.violation
    return RCMResult(False, None, Witness(back(w.F), back(w.G), w.degree, w.dim))


def reisner_classic(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """Reisner's criterion on a complex with no x-vertices."""
    if delta.ground.m != 0:
        raise ComplexError("the classical criterion needs m = 0")
    return is_cohen_macaulay(delta, field)


def is_cohen_macaulay(delta: SimplicialComplex, field: FieldSpec = RATIONALS) -> bool:
    """``H̃_i(link F) = 0`` for all faces ``F`` and ``i < dim link F``; ignores the bipartition."""
    require_nonvoid(delta)
    for F in delta.all_faces():
        lk = delta.link(F)
        bound = lk.dim()
        if any(deg < bound for deg in reduced_homology(lk, field).nonzero_degrees()):
            return False
    return True


def component_krull_dim_x(
    delta: SimplicialComplex, i: int, b: Sequence[int], field: FieldSpec = RATIONALS
) -> float | int:
    """Krull dimension of the K[x]-module ``H^i_Q(K[Δ])_(*, b)``.

    Its multigraded Hilbert series is ``Σ_G c_G · ∏_{v∈G} s/(1-s)`` with
    nonnegative ``c_G``, so the dimension is the largest ``|G|`` with
    ``c_G ≠ 0``; minus infinity when the module is zero.
    """
    require_nonvoid(delta)
    g = delta.ground
    if len(b) != g.n:
        raise ComplexError(f"b has length {len(b)}, expected {g.n}")
    if any(x > 0 for x in b):
        raise ComplexError("b must lie in Z^n_- (all entries <= 0)")
    F = sum(1 << (g.m + j) for j, x in enumerate(b) if x)
    return _krull_dim_at(delta, i, F, field)


def _krull_dim_at(delta: SimplicialComplex, i: int, F: int, field: FieldSpec) -> float | int:
    if F not in delta:
        return MINUS_INFINITY
    best: float | int = MINUS_INFINITY
    deg = i - cardinality(F) - 1
    for G in delta.link(F).restrict_V().all_faces():
        if cardinality(G) > best and pair_homology(delta, F, G, field)[deg]:
            best = cardinality(G)
    return best


def graded_component_krull_dim_x(
    delta: SimplicialComplex, i: int, j: int, field: FieldSpec = RATIONALS
) -> float | int:
    """Krull dimension of ``H^i_Q(K[Δ])_j``, the sum over all ``b`` with ``|b| = j``.

    Components depend on ``b`` only through ``F = Supp b``; ``F`` occurs at
    total degree ``j < 0`` exactly when ``1 <= |F| <= -j``.
    """
    require_nonvoid(delta)
    if j > 0:
        return MINUS_INFINITY
    best: float | int = MINUS_INFINITY
    for F in delta.restrict_W().all_faces():
        k = cardinality(F)
        if (j == 0 and k == 0) or (j < 0 and 1 <= k <= -j):
            best = max(best, _krull_dim_at(delta, i, F, field))
    return best


def top_cohomology_artinian(delta: SimplicialComplex) -> bool:
    """Whether ``H^q_Q(K[Δ])`` is Artinian, for ``Δ`` relative CM over ℚ.

    True iff ``q = dim K[Δ]``; the equivalent ``cd_P = 0`` is checked as well.
    """
    r = is_relative_CM_Q(delta, RATIONALS)
    if not r:
        raise ComplexError("not relative CM with respect to Q")
    by_dim = r.q == delta.dim() + 1
    by_p = cd_P(delta) == 0
    if by_dim != by_p:
        raise ArithmeticError(f"inconsistent Artinianness tests on {delta!r}")
    return by_dim


def a_invariant_Q(delta: SimplicialComplex, field: FieldSpec = RATIONALS, i: int | None = None) -> float | int:
    """``sup{μ : H^i_Q(K[Δ])_(*,μ) ≠ 0}``, by default at ``i = cd_Q``."""
    if i is None:
        i = cd_Q(delta)
    terms = hochster_terms(delta, i, field)
    if not terms:
        return MINUS_INFINITY
    return max(t.max_t_degree for t in terms)


def remark_discrepancies(delta: SimplicialComplex) -> list[tuple[int, int]]:
    """Pairs ``(F, G)`` where ``(link(F∪G))_W`` differs from ``link_{Δ_W} F``.

    Every ``F ∈ Δ_W`` is paired with every ``G ⊆ V``, including pairs with
    ``F ∪ G ∉ Δ`` (void left-hand side).
    """
    require_nonvoid(delta)
    dW = delta.restrict_W()
    out = []
    for F in dW.all_faces():
        rhs = dW.link(F)
        for G in sorted_submasks(delta.ground.V):
            if link_W(delta, F, G) != rhs:
                out.append((F, G))
    return out


__all__ = [
    "BigradedDegree",
    "CohomologyProfile",
    "RCMResult",
    "SeriesTerm",
    "Witness",
    "a_invariant_Q",
    "admissible_pairs",
    "component_dim",
    "component_krull_dim_x",
    "graded_component_krull_dim_x",
    "grade_P",
    "grade_Q",
    "hochster_terms",
    "is_cohen_macaulay",
    "is_relative_CM_P",
    "is_relative_CM_Q",
    "link_W",
    "pair_homology",
    "reisner_classic",
    "remark_discrepancies",
    "top_cohomology_artinian",
    "vanishing_profile",
    "vanishing_profile_P",
]
