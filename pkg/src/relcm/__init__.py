"""Relative Cohen–Macaulayness of bigraded Stanley–Reisner and monomial rings."""

__version__ = "0.1.0"

from .complex_core import (
    MINUS_INFINITY,
    BiGround,
    ComplexError,
    SimplicialComplex,
    VoidComplexError,
    cone,
    disjoint_union,
    face,
    members,
)
from .field_homology import GF2, RATIONALS, FieldSpec, HomologyVector, boundary_matrix, homology_checks, reduced_homology
from .hypersurface import BihomogeneousForm, Verdict, artinian_report, content_ideal, is_P0_primary
from .local_cohomology import (
    BigradedDegree,
    CohomologyProfile,
    RCMResult,
    component_dim,
    component_krull_dim_x,
    grade_Q,
    hochster_terms,
    is_relative_CM_P,
    is_relative_CM_Q,
    reisner_classic,
    vanishing_profile,
)
from .monomial_ideals import (
    MonomialIdeal,
    UnitIdealError,
    component_dim_monomial,
    delta_ab,
    is_relative_CM_monomial,
    radical,
    regularity_bound,
    vanishing_profile_monomial,
)
from .stanley_reisner import (
    cd_P,
    cd_Q,
    complex_of_squarefree_ideal,
    facet_primes,
    is_relative_unmixed_Q,
    stanley_reisner_ideal,
)
