"""Squarefree monomial ideals, their complexes, and facet-prime invariants.

Squarefree generators are exponent vectors over ``x_1..x_m, y_1..y_n`` (in the
same order as the vertex numbering of :class:`BiGround`), with entries in
``{0, 1}``.  The associated primes of ``K[Δ]`` are read off the facets, so
cohomological dimensions and relative unmixedness need no homology at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex_core import (
    BiGround,
    ComplexError,
    SimplicialComplex,
    cardinality,
    face_key,
    maximal,
    members,
    require_nonvoid,
)


def mask_to_exponents(mask: int, ground: BiGround) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(ground.size))


def exponents_to_mask(exps: Sequence[int], ground: BiGround) -> int:
    if len(exps) != ground.size:
        raise ComplexError(f"exponent vector {list(exps)} has length {len(exps)}, expected {ground.size}")
    mask = 0
    for i, e in enumerate(exps):
        if e not in (0, 1):
            raise ComplexError(f"generator {list(exps)} is not squarefree")
        if e:
            mask |= 1 << i
    return mask


def minimal_nonfaces(delta: SimplicialComplex) -> list[int]:
    require_nonvoid(delta)
    ground = delta.ground
    faces = set(delta.all_faces())
    out = set()
    for F in faces:
        for v in range(ground.size):
            bit = 1 << v
            if F & bit:
                continue
            N = F | bit
            if N in faces:
                continue
            if all((N & ~(1 << u)) in faces for u in members(N)):
                out.add(N)
    return sorted(out, key=face_key)


def stanley_reisner_ideal(delta: SimplicialComplex) -> list[tuple[int, ...]]:
    """Minimal generators of ``I_Δ`` as squarefree exponent vectors."""
    return [mask_to_exponents(N, delta.ground) for N in minimal_nonfaces(delta)]


def complex_of_squarefree_ideal(generators: Iterable[Sequence[int]], ground: BiGround) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside the ideal."""
    masks = [exponents_to_mask(g, ground) for g in generators]
    if any(g == 0 for g in masks):
        # the unit ideal: K[Δ] = 0
        return SimplicialComplex.void_on(ground)
    return complex_from_nonfaces(masks, ground)


def complex_from_nonfaces(nonfaces: Iterable[int], ground: BiGround) -> SimplicialComplex:
    facets = [ground.full]
    for N in maximal_free(nonfaces):
        nxt = []
        for F in facets:
            if N & ~F:
                nxt.append(F)
            else:
                nxt.extend(F & ~(1 << v) for v in members(N))
        facets = maximal(nxt)
    return SimplicialComplex(ground, facets)


def maximal_free(masks: Iterable[int]) -> list[int]:
    # minimal elements under inclusion
    uniq = sorted(set(masks), key=cardinality)
    kept: list[int] = []
    for s in uniq:
        if not any(t & ~s == 0 for t in kept):
            kept.append(s)
    return kept


@dataclass(frozen=True)
class FacetPrime:
    """The prime generated by the variables whose vertices are not in ``facet``."""

    facet: int
    missing_x: int
    missing_y: int
    ground: BiGround

    @property
    def height(self) -> int:
        return cardinality(self.missing_x) + cardinality(self.missing_y)

    @property
    def dim_quotient(self) -> int:
        """``dim S/𝔭_F = |F|``."""
        return cardinality(self.facet)

    @property
    def dim_mod_P(self) -> int:
        """``dim S/(P + 𝔭_F) = |F ∩ W|``; equals ``cd(Q, S/𝔭_F)``."""
        return cardinality(self.facet & self.ground.W)

    @property
    def dim_mod_Q(self) -> int:
        """``dim S/(Q + 𝔭_F) = |F ∩ V|``; equals ``cd(P, S/𝔭_F)``."""
        return cardinality(self.facet & self.ground.V)

    def variables(self) -> list[str]:
        g = self.ground
        xs = [f"x{i + 1}" for i in members(self.missing_x)]
        ys = [f"y{i - g.m + 1}" for i in members(self.missing_y)]
        return xs + ys


def facet_primes(delta: SimplicialComplex) -> list[FacetPrime]:
    require_nonvoid(delta)
    g = delta.ground
    return [FacetPrime(F, g.V & ~F, g.W & ~F, g) for F in delta.facets]


def cd_Q(delta: SimplicialComplex) -> int:
    """``cd(Q, K[Δ]) = dim Δ_W + 1``."""
    require_nonvoid(delta)
    return int(delta.restrict_W().dim()) + 1


def cd_P(delta: SimplicialComplex) -> int:
    require_nonvoid(delta)
    return int(delta.restrict_V().dim()) + 1


def cd_Q_oracle(delta: SimplicialComplex) -> int:
    """Maximum of ``cd(Q, S/𝔭_F) = |F ∩ W|`` over the facet primes."""
    return max(p.dim_mod_P for p in facet_primes(delta))


def cd_P_oracle(delta: SimplicialComplex) -> int:
    return max(p.dim_mod_Q for p in facet_primes(delta))


def is_relative_unmixed_Q(delta: SimplicialComplex) -> bool:
    return len({p.dim_mod_P for p in facet_primes(delta)}) == 1


def is_relative_unmixed_P(delta: SimplicialComplex) -> bool:
    return len({p.dim_mod_Q for p in facet_primes(delta)}) == 1


def associated_prime_shape_check(delta: SimplicialComplex) -> bool:
    """Every facet prime leaves out exactly ``cd_P`` x's and ``cd_Q`` y's.

    Meant for complexes already known to be relative CM w.r.t. P and relative
    unmixed w.r.t. Q; the precondition itself is not verified here.
    """
    p, q = cd_P(delta), cd_Q(delta)
    return all(fp.dim_mod_Q == p and fp.dim_mod_P == q for fp in facet_primes(delta))
