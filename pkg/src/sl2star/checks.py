"""Named verification suites behind the ``check`` CLI command.

Each suite returns a list of RelationCheck records; ``run_suite`` wraps them
in a JSON-able report.  The suites mirror the library's defining properties
(rewriting soundness, bialgebra axioms, gauge recursions, the numeric
Poisson checks, the enveloping-algebra change of variables) at sizes meant
for interactive use; the full-size versions are the acceptance tests.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List

from . import coalg, gauge, poisson, uhsl2
from .config import Config
from .ncalg import (
    EM, EP, PbwMonomial, STRATEGY_NAMES, X1, X2, X3,
    random_element, random_word, x_algebra,
)
from .uhsl2 import RelationCheck


def _check(name: str, passed: bool, detail: str = "") -> RelationCheck:
    return RelationCheck(name, bool(passed), detail)


def _x_system(config: Config):
    return x_algebra(config.order, config.a_coeffs, config.laurent_min)


def suite_bialgebra(config: Config) -> List[RelationCheck]:
    system = _x_system(config)
    rng = random.Random(config.seed)
    checks = []

    words = [random_word(rng, 6) for _ in range(40)]
    agree = True
    for w in words:
        base = system.normal_form(w, strategy="leftmost",
                                  check_termination=True)
        for s in STRATEGY_NAMES[1:]:
            if system.normal_form(w, strategy=s, rng=random.Random(7)) != base:
                agree = False
    checks.append(_check("normal form independent of strategy (40 words)", agree))

    assoc = True
    for _ in range(15):
        f = random_element(system, rng)
        g = random_element(system, rng)
        h = random_element(system, rng)
        if system.star(system.star(f, g), h) != system.star(f, system.star(g, h)):
            assoc = False
    checks.append(_check("star associativity (15 random triples)", assoc))

    flat = True
    for n1 in range(3):
        for n2 in range(3):
            for m in (-2, 0, 2):
                mono = PbwMonomial(n1, n2, 0, m)
                if system.normal_form(mono.word()).terms != {mono: system.ring.one}:
                    flat = False
    checks.append(_check("basis monomials are irreducible", flat))

    coideal = all(coalg.coideal_check(system, rel).is_zero()
                  for _, rel in system.relation_words())
    tails_ok = True
    for _ in range(3):
        tail = [Fraction(4)] + [Fraction(rng.randrange(-3, 4), rng.randrange(1, 4))
                                for _ in range(2)]
        sys_t = x_algebra(config.order, tail, config.laurent_min)
        tails_ok &= all(coalg.coideal_check(sys_t, rel).is_zero()
                        for _, rel in sys_t.relation_words())
    checks.append(_check("coideal property (default A)", coideal))
    checks.append(_check("coideal property (randomized A tails)", tails_ok))

    coassoc = all(coalg.coassoc_defect(system.generator(g)).is_zero()
                  for g in (X1, X2, X3, EP, EM))
    for _ in range(8):
        coassoc &= coalg.coassoc_defect(random_element(system, rng)).is_zero()
    checks.append(_check("coassociativity (generators + 8 random)", coassoc))

    counit_ok = True
    for _ in range(8):
        f = random_element(system, rng)
        d = coalg.coproduct(f)
        counit_ok &= coalg.counit_contract(d, "left") == f
        counit_ok &= coalg.counit_contract(d, "right") == f
    # word-level: the counit kills every ideal generator
    for _, rel in system.relation_words():
        acc = system.ring.zero
        for word, c in rel.items():
            if all(g in (EP, EM) for g in word):
                acc = acc + c
        counit_ok &= acc.is_zero()
    checks.append(_check("counit axioms", counit_ok))

    x2 = system.generator(X2)
    checks.append(_check("coproduct deformation order of x2*x2 is 2",
                         coalg.deformation_order(system.star(x2, x2)) == 2))

    opp = True
    for _ in range(15):
        f = random_element(system, rng)
        g = random_element(system, rng)
        lhs = system.star(f, g)
        rhs = system.star(g.eps_flip(), f.eps_flip()).eps_flip()
        opp &= lhs == rhs
    checks.append(_check("opposite-product symmetry (15 pairs)", opp))
    return checks


def suite_gauge(config: Config) -> List[RelationCheck]:
    rng = random.Random(config.seed)
    checks = []
    model = gauge.RawX1Model(dict(config.b_coeffs))
    solution = gauge.solve_gauge(model, config.gauge_kmax)
    checks.append(_check(
        "gauge solver straightens configured b",
        gauge.verify_gauge(model, solution, config.gauge_nmax)))

    ok = True
    for _ in range(5):
        b = {2 * k: Fraction(rng.randrange(-6, 7), rng.randrange(1, 5))
             for k in range(1, 4)}
        m = gauge.RawX1Model(b)
        ok &= gauge.verify_gauge(m, gauge.solve_gauge(m, 12), 12)
    checks.append(_check("gauge solver on random even b (5 draws)", ok))

    checks.append(_check("Bernoulli alternating-binomial identity to n=20",
                         gauge.bernoulli_identity_check(20)))

    from .series import EpsSeries, exp_series
    order = 12
    c_plus = gauge.c_series(1, order)
    c_minus = gauge.c_series(-1, order)
    checks.append(_check("c(+eps) = e^{2 eps} c(-eps) at order 12",
                         c_plus == exp_series(2, order) * c_minus))
    import math
    # (1 - e^{-2 eps})/(2 eps) has exact coefficients (-2)^k/(k+1)!
    gen = EpsSeries({k: Fraction((-2) ** k, math.factorial(k + 1))
                     for k in range(order + 1)}, order, truncated=True)
    checks.append(_check("c(+eps) * (1 - e^{-2 eps})/(2 eps) = 1",
                         c_plus * gen == EpsSeries.one(order)))
    return checks


def suite_poisson(config: Config) -> List[RelationCheck]:
    checks = []
    data = poisson.standard_sl2_data()
    checks.append(_check("cobracket is the r-matrix coboundary (exact)",
                         poisson.cocycle_check(data) == 0))
    lemma = poisson.verify_integration_lemma(
        samples=config.samples, tol=config.tol, seed=config.seed)
    checks.append(_check(
        "integrated bivector matches closed form",
        lemma["passed"],
        f"kappa={lemma['kappa']:.9g} spread={lemma['kappa_spread']:.2e} "
        f"max_residual={lemma['max_residual']:.2e}"))
    mult = poisson.verify_multiplicativity(pairs=config.samples,
                                           seed=config.seed + 1)
    checks.append(_check("Poisson-Lie multiplicativity of w",
                         mult["passed"],
                         f"max_residual={mult['max_residual']:.2e}"))
    jac = poisson.verify_jacobi(points=20, tol=config.tol,
                                seed=config.seed + 2)
    checks.append(_check("Jacobi identity of the closed-form bivector",
                         jac["passed"], f"max_residual={jac['max_residual']:.2e}"))
    jac_lin = poisson.verify_jacobi(points=20, tol=config.tol,
                                    seed=config.seed + 3, linearized=True)
    checks.append(_check("Jacobi identity of the linearized bivector",
                         jac_lin["passed"],
                         f"max_residual={jac_lin['max_residual']:.2e}"))
    return checks


def suite_uh(config: Config) -> List[RelationCheck]:
    checks = []
    z_sys = uhsl2.z_system(config.order, config.a_coeffs)
    checks.extend(uhsl2.z_commutators(z_sys))
    checks.extend(uhsl2.z_commutators_scaled(z_sys))
    checks.extend(uhsl2.z_coproducts(z_sys))

    xi = uhsl2.xi_algebra(config.xi_total, config.xi_h_min)
    checks.extend(uhsl2.xi_relation_checks(xi))
    coideal = all(coalg.coideal_check(xi, rel).is_zero()
                  for _, rel in xi.relation_words())
    checks.append(_check("xi ideal is a coideal", coideal))
    coassoc = all(coalg.coassoc_defect(xi.generator(g)).is_zero()
                  for g in (X1, X2, X3, EP, EM))
    checks.append(_check("xi coproduct coassociative on generators", coassoc))
    checks.extend(uhsl2.limits_report(xi))
    checks.extend(uhsl2.specialization_report(config.xi_total, config.xi_h_min))
    return checks


SUITES: Dict[str, Callable[[Config], List[RelationCheck]]] = {
    "bialgebra": suite_bialgebra,
    "gauge": suite_gauge,
    "poisson": suite_poisson,
    "uh": suite_uh,
}


def run_suite(name: str, config: Config) -> dict:
    """Run one named suite, or "all"; results sorted by check name inside
    each suite for deterministic output."""
    if name == "all":
        suites = sorted(SUITES)
    elif name in SUITES:
        suites = [name]
    else:
        raise ValueError(
            f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    report = {"suites": [], "passed": True}
    for s in suites:
        checks = SUITES[s](config)
        entry = {
            "suite": s,
            "checks": [c.to_json() for c in checks],
            "passed": uhsl2.report_passed(checks),
        }
        report["suites"].append(entry)
        report["passed"] &= entry["passed"]
    return report
