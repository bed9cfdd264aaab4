"""Seeded randomized cross-checks between the criteria and their oracles.

Instance ``k`` of a run with seed ``s`` is drawn from ``random.Random(f"{s}:{k}")``
(Python's Mersenne Twister, string seeds hashed with SHA-512), so every
instance can be regenerated on its own and the report does not depend on
worker scheduling.  Failing instances are shrunk greedily: facets, vertices,
generators and exponents are removed one at a time while the property still
fails.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .complex_core import BiGround, SimplicialComplex, cone, members
from .documents import dump_complex, dump_monomial
from .field_homology import GF2, RATIONALS, FieldSpec, homology_checks, reduced_homology
from .local_cohomology import (
    BigradedDegree,
    component_dim,
    graded_component_krull_dim_x,
    is_relative_CM_P,
    is_cohen_macaulay,
    is_relative_CM_Q,
    reisner_classic,
    vanishing_profile,
    vanishing_profile_P,
)
from .monomial_ideals import (
    MonomialIdeal,
    cech_component_dim,
    component_dim_monomial,
    delta_ab,
    radical,
    radical_complex,
    vanishing_profile_monomial,
)
from .stanley_reisner import (
    cd_P,
    cd_P_oracle,
    cd_Q,
    cd_Q_oracle,
    facet_primes,
    is_relative_unmixed_Q,
)


# ---------------------------------------------------------------------------
# generators


def random_complex(rng: random.Random, max_m: int, max_n: int) -> SimplicialComplex:
    while True:
        m, n = rng.randint(0, max_m), rng.randint(0, max_n)
        if m + n:
            break
    g = BiGround(m, n)
    k = rng.randint(2, 6)
    density = rng.choice((0.3, 0.45, 0.6))
    facets = [sum(1 << v for v in range(g.size) if rng.random() < density) for _ in range(k)]
    return SimplicialComplex(g, facets)


def random_monomial_ideal(rng: random.Random, max_m: int, max_n: int, max_exp: int = 3) -> MonomialIdeal:
    while True:
        m, n = rng.randint(0, max_m), rng.randint(0, max_n)
        if not m + n:
            continue
        g = BiGround(m, n)
        gens = []
        for _ in range(rng.randint(0, 4)):
            c = tuple(rng.choice((0, 0, rng.randint(1, max_exp))) for _ in range(m))
            d = tuple(rng.choice((0, 0, rng.randint(1, max_exp))) for _ in range(n))
            gens.append((c, d))
        I = MonomialIdeal.minimalize(g, gens)
        if not I.is_unit():
            return I


# ---------------------------------------------------------------------------
# properties; each returns None on success or a short failure message


def prop_cd_oracle(delta: SimplicialComplex) -> str | None:
    if cd_Q(delta) != cd_Q_oracle(delta):
        return f"cd_Q {cd_Q(delta)} != oracle {cd_Q_oracle(delta)}"
    if cd_P(delta) != cd_P_oracle(delta):
        return f"cd_P {cd_P(delta)} != oracle {cd_P_oracle(delta)}"
    return None


def prop_profile_cd(delta: SimplicialComplex) -> str | None:
    prof = vanishing_profile(delta)
    if prof.cd != cd_Q(delta):
        return f"profile top {prof.cd} != cd_Q {cd_Q(delta)}"
    return None


def _criterion_matches_profile(delta: SimplicialComplex, field: FieldSpec) -> str | None:
    r = is_relative_CM_Q(delta, field)
    prof = vanishing_profile(delta, field)
    if bool(r) != prof.is_singleton():
        return f"link criterion {bool(r)} but profile {list(prof.nonzero)} over {field}"
    if r and r.q != prof.nonzero[0]:
        return f"q {r.q} != profile {list(prof.nonzero)}"
    return None


def prop_criterion_Q(delta: SimplicialComplex) -> str | None:
    return _criterion_matches_profile(delta, RATIONALS)


def prop_criterion_F2(delta: SimplicialComplex) -> str | None:
    return _criterion_matches_profile(delta, GF2)


def prop_classic(delta: SimplicialComplex) -> str | None:
    if delta.ground.m:
        return None
    if bool(is_relative_CM_Q(delta)) != reisner_classic(delta):
        return "relative criterion and Reisner's criterion disagree at m = 0"
    return None


def prop_dimension_sum(delta: SimplicialComplex) -> str | None:
    if not is_relative_CM_Q(delta):
        return None
    if cd_P(delta) + cd_Q(delta) != delta.dim() + 1:
        return f"cd_P + cd_Q = {cd_P(delta) + cd_Q(delta)} != dim K[Δ] = {delta.dim() + 1}"
    return None


def prop_consequences(delta: SimplicialComplex) -> str | None:
    if not is_relative_CM_Q(delta):
        return None
    dW = delta.restrict_W()
    if not is_relative_unmixed_Q(delta):
        return "relative CM but not relative unmixed"
    if not dW.is_pure():
        return "relative CM but Δ_W not pure"
    if dW.dim() >= 1 and not dW.is_connected():
        return "relative CM, dim Δ_W >= 1, but Δ_W disconnected"
    return None


def prop_grade_bound(delta: SimplicialComplex) -> str | None:
    g = vanishing_profile(delta).grade
    low = min(fp.dim_mod_P for fp in facet_primes(delta))
    if g > low:
        return f"grade {g} exceeds min |F ∩ W| = {low}"
    return None


def prop_links_cm(delta: SimplicialComplex) -> str | None:
    if not is_relative_CM_Q(delta):
        return None
    dW = delta.restrict_W()
    for F in dW.all_faces():
        if not is_cohen_macaulay(dW.link(F)):
            return f"relative CM but link of {delta.ground.face_names(F)} in Δ_W is not Cohen-Macaulay"
    return None


def prop_krull_total_degree(delta: SimplicialComplex) -> str | None:
    r = is_relative_CM_Q(delta)
    # at q = 0 the module is K[Δ] itself, which lives in y-degrees >= 0
    if not r or r.q == 0:
        return None
    n = delta.ground.n
    target = cd_P(delta)
    for j in (-n - 1, -n - 2, -n - 3):
        got = graded_component_krull_dim_x(delta, r.q, j)
        if got != target:
            return f"Krull dim of H^q_Q in degree j={j} is {got}, cd_P = {target}"
    return None


def prop_symmetry(delta: SimplicialComplex) -> str | None:
    t = delta.transpose()
    if (cd_P(t), cd_Q(t)) != (cd_Q(delta), cd_P(delta)):
        return "transpose does not swap (cd_P, cd_Q)"
    if vanishing_profile(t).nonzero != vanishing_profile_P(delta).nonzero:
        return "transpose does not swap P and Q profiles"
    if bool(is_relative_CM_Q(t)) != bool(is_relative_CM_P(delta)):
        return "transpose does not swap relative CM tests"
    return None


def prop_cone_acyclic(delta: SimplicialComplex) -> str | None:
    for side in ("v", "w"):
        h = reduced_homology(cone(delta, side))
        if not h.is_acyclic():
            return f"cone ({side}) has homology {h.as_dict()}"
    return None


COMPLEX_PROPERTIES: dict[str, Callable[[SimplicialComplex], str | None]] = {
    "cd-oracle": prop_cd_oracle,
    "profile-cd": prop_profile_cd,
    "criterion-q": prop_criterion_Q,
    "criterion-f2": prop_criterion_F2,
    "classic-reisner": prop_classic,
    "dimension-sum": prop_dimension_sum,
    "rcm-consequences": prop_consequences,
    "grade-bound": prop_grade_bound,
    "links-cohen-macaulay": prop_links_cm,
    "krull-total-degree": prop_krull_total_degree,
    "transpose-symmetry": prop_symmetry,
    "cone-acyclic": prop_cone_acyclic,
}


def _radical_region_degrees(I: MonomialIdeal) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    # a_i in {0, σ_i, σ_i + 1}, b_j in {-2, -1, 0}: where Δ_(a,b) cannot see exponents
    a_opts = [sorted({0, s, s + 1}) for s in I.sigma]
    b_opts = [(-2, -1, 0)] * I.ground.n
    return [(tuple(a), tuple(b)) for a in itertools.product(*a_opts) for b in itertools.product(*b_opts)]


def prop_radical(I: MonomialIdeal) -> str | None:
    rad = radical_complex(I)
    prof, rprof = vanishing_profile_monomial(I), vanishing_profile(rad)
    if prof.cd != rprof.cd:
        return f"cd(S/I) = {prof.cd} but cd(S/√I) = {rprof.cd}"
    if not set(rprof.nonzero) <= set(prof.nonzero):
        return f"profile of √I {list(rprof.nonzero)} not inside profile of I {list(prof.nonzero)}"
    for a, b in _radical_region_degrees(I):
        d = BigradedDegree(a, b)
        for i in range(I.ground.n + 1):
            x, y = component_dim_monomial(I, i, a, b), component_dim(rad, i, d)
            if x != y:
                return f"H^{i} at a={list(a)}, b={list(b)}: S/I gives {x}, S/√I gives {y}"
    return None


def prop_cech(I: MonomialIdeal) -> str | None:
    n = I.ground.n
    for a, b in _cech_degrees(I):
        for i in range(n + 1):
            x, y = component_dim_monomial(I, i, a, b), cech_component_dim(I, i, a, b)
            if x != y:
                return f"H^{i} at a={list(a)}, b={list(b)}: links give {x}, Čech gives {y}"
    return None


def _cech_degrees(I: MonomialIdeal):
    a_opts = [range(0, s + 2) for s in I.sigma]
    b_opts = [range(-2, r + 1) for r in I.rho]
    return itertools.product(itertools.product(*a_opts), itertools.product(*b_opts))


def prop_squarefree(I: MonomialIdeal) -> str | None:
    """For squarefree ``I``, ``Δ_(a,b)(I)`` and the link formula agree on homology."""
    J = radical(I)
    delta = radical_complex(I)
    for a in itertools.product((0, 1, 2), repeat=I.ground.m):
        for b in itertools.product((-2, -1, 0), repeat=I.ground.n):
            h1 = reduced_homology(delta_ab(J, a, b))
            d = BigradedDegree(a, b)
            F, G = d.y_support(I.ground.m), d.x_support()
            h2 = reduced_homology(delta.link(F | G).restrict_W())
            if h1.by_degree != h2.by_degree:
                return f"a={list(a)}, b={list(b)}: Δ_(a,b) gives {h1.as_dict()}, link gives {h2.as_dict()}"
    return None


IDEAL_PROPERTIES: dict[str, Callable[[MonomialIdeal], str | None]] = {
    "radical-invariance": prop_radical,
    "cech-agreement": prop_cech,
    "squarefree-consistency": prop_squarefree,
}


# ---------------------------------------------------------------------------
# shrinking


def _complex_candidates(delta: SimplicialComplex):
    g = delta.ground
    if len(delta.facets) > 1:
        for k in range(len(delta.facets)):
            yield SimplicialComplex(g, delta.facets[:k] + delta.facets[k + 1:])
    if g.size > 1:
        for v in range(g.size):
            yield delta.delete_vertex(v)
    for k, F in enumerate(delta.facets):
        for v in members(F):
            yield SimplicialComplex(g, delta.facets[:k] + (F & ~(1 << v),) + delta.facets[k + 1:])


def _ideal_candidates(I: MonomialIdeal):
    g = I.ground
    gens = list(I.generators)
    for k in range(len(gens)):
        yield MonomialIdeal.minimalize(g, gens[:k] + gens[k + 1:])
    for k, (c, d) in enumerate(gens):
        for i in range(len(c)):
            if c[i]:
                c2 = c[:i] + (c[i] - 1,) + c[i + 1:]
                yield MonomialIdeal.minimalize(g, gens[:k] + [(c2, d)] + gens[k + 1:])
        for j in range(len(d)):
            if d[j]:
                d2 = d[:j] + (d[j] - 1,) + d[j + 1:]
                yield MonomialIdeal.minimalize(g, gens[:k] + [(c, d2)] + gens[k + 1:])


def shrink(obj, prop, candidates):
    msg = prop(obj)
    improved = True
    while improved:
        improved = False
        for cand in candidates(obj):
            if isinstance(cand, MonomialIdeal) and cand.is_unit():
                continue
            try:
                m = prop(cand)
            except Exception as e:  # a crash counts as a failure
                m = f"{type(e).__name__}: {e}"
            if m is not None:
                obj, msg, improved = cand, m, True
                break
    return obj, msg


# ---------------------------------------------------------------------------
# runner


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: dict | None = None
    message: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "message": self.message,
        }


@dataclass
class SuiteReport:
    seed: int
    count: int
    max_m: int
    max_n: int
    properties: list[PropertyResult]
    homology_computations: int = 0
    euler_checks: int = 0
    boundary_checks: int = 0
    check_failures: list[str] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties) and not self.check_failures

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "max_m": self.max_m,
            "max_n": self.max_n,
            "passed": self.passed,
            "properties": [p.as_dict() for p in self.properties],
            "homology_checks": {
                "computations": self.homology_computations,
                "euler_checks": self.euler_checks,
                "boundary_checks": self.boundary_checks,
                "failures": list(self.check_failures),
            },
        }


def _run_one(args):
    seed, k, max_m, max_n = args
    rng = random.Random(f"{seed}:{k}")
    delta = random_complex(rng, max_m, max_n)
    ideal = random_monomial_ideal(rng, min(max_m, 3), min(max_n, 3))
    out = {}
    with homology_checks() as log:
        for name, prop in COMPLEX_PROPERTIES.items():
            out[name] = _evaluate(delta, prop, _complex_candidates, dump_complex)
        for name, prop in IDEAL_PROPERTIES.items():
            out[name] = _evaluate(ideal, prop, _ideal_candidates, dump_monomial)
    return out, (log.computations, log.euler_checks, log.boundary_checks, list(log.failures))


def _evaluate(obj, prop, candidates, dump):
    try:
        msg = prop(obj)
    except Exception as e:
        msg = f"{type(e).__name__}: {e}"
    if msg is None:
        return None
    small, small_msg = shrink(obj, prop, candidates)
    return {"instance": dump(small), "message": small_msg}


def run_suite(seed: int, count: int, max_m: int = 3, max_n: int = 3, workers: int = 0) -> SuiteReport:
    if count < 1:
        raise ValueError("count must be at least 1")
    if max_m < 0 or max_n < 0 or max_m + max_n < 1:
        raise ValueError("need max_m, max_n >= 0 with max_m + max_n >= 1")
    tasks = [(seed, k, max_m, max_n) for k in range(count)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_one, tasks, chunksize=8))
    else:
        results = [_run_one(t) for t in tasks]

    names = list(COMPLEX_PROPERTIES) + list(IDEAL_PROPERTIES)
    props = {name: PropertyResult(name) for name in names}
    report = SuiteReport(seed, count, max_m, max_n, list(props.values()))
    for out, (comp, eul, bnd, fails) in results:
        report.homology_computations += comp
        report.euler_checks += eul
        report.boundary_checks += bnd
        report.check_failures.extend(fails)
        for name in names:
            pr = props[name]
            pr.checked += 1
            fail = out[name]
            if fail is not None:
                pr.failures += 1
                if pr.counterexample is None:
                    pr.counterexample, pr.message = fail["instance"], fail["message"]
    return report
