"""The bundled verification suite.

Each entry rebuilds its inputs from the bundled ring specs, recomputes the
quantities and compares them with the expected values.  Reports are sorted
by name so the JSON output does not depend on execution order.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import corpus
from .checks import (FAIL, INCONCLUSIVE, PASS, CheckReport, PrimaryDecompositionInput,
                     ar_number, brt, check_annihilation_bounds, check_cm_multiplicity_bound,
                     check_dim_conditions, check_theorem2, membership_condition,
                     principal_uniform_bound, verify_strong_ar, wang_experiment)
from .fixtures import fixture_path
from .groebner import groebner_basis
from .ideals import RingPresentation, length, multiplicity_1dim, saturate
from .polynomial import Polynomial, PolynomialRing
from .rees import (ReesAnalysis, lemma42_certificate, principal_rt, relation_type,
                   relation_type_mod, two_gen_rt)
from .specfile import RingSpec, load_ring_spec

SUITES = ("all", "examples", "theorems", "wang")
SEED = 20240601


class UnknownSuite(ValueError):
    pass


@dataclass
class SuiteResult:
    suite: str
    reports: list = field(default_factory=list)

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "inconclusive": 0}
        for r in self.reports:
            key = r.verdict if r.verdict in (PASS, FAIL) else INCONCLUSIVE
            out[key] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0

    def to_dict(self, timings: bool = False) -> dict:
        return {"suite": self.suite,
                "summary": self.counts,
                "reports": [r.to_dict(timings) for r in self.reports]}

    def summary_text(self) -> str:
        lines = []
        for r in self.reports:
            secs = f"{r.elapsed:7.2f}s" if r.elapsed is not None else ""
            lines.append(f"{r.verdict:>24}  {secs}  {r.check}")
        c = self.counts
        lines.append(f"{self.suite}: {c['pass']} passed, {c['fail']} failed, "
                     f"{c['inconclusive']} inconclusive")
        return "\n".join(lines)


def _load(name: str) -> RingSpec:
    return load_ring_spec(fixture_path(name))


def _expect(name: str, inputs: dict, quantities: dict, expected: dict) -> CheckReport:
    """Pass iff every expected key matches the computed quantity."""
    wrong = {k: {"expected": v, "computed": quantities.get(k)}
             for k, v in expected.items() if quantities.get(k) != v}
    return CheckReport(name, inputs, {**quantities, "expected": expected},
                       FAIL if wrong else PASS, wrong or None)


# --------------------------------------------------------------------------
# worked examples


def nilpotent_example(n: int) -> CheckReport:
    spec = _load(f"nilp{n}")
    A = spec.presentation
    m = spec.ideal("m")
    q = {
        "rt": relation_type(A, m),
        "two_gen_rt": two_gen_rt(A, "x", "y").rt,
        "power_2n-1_zero": (m ** (2 * n - 1)).is_zero(),
        "power_2n-2_zero": (m ** (2 * n - 2)).is_zero(),
        "colon_certificate": not lemma42_certificate(A, ["y", "x"], n),
    }
    expected = {"rt": n, "two_gen_rt": n, "power_2n-1_zero": True, "power_2n-2_zero": False,
                "colon_certificate": True}
    return _expect(f"examples/nilpotent-n{n}", {"ring": f"nilp{n}", "I": m}, q, expected)


def semigroup_example(g: int) -> CheckReport:
    spec = _load(f"semigroup{g}")
    A = spec.presentation
    I, m, u0 = spec.ideal("I"), spec.ideal("m"), spec.ideal("u0")
    e, stable_from = multiplicity_1dim(A, m)
    q = {
        "rt": relation_type(A, I),
        "two_gen_rt": two_gen_rt(A, "u0", "u1").rt,
        "e": e,
        "e_stable_from": stable_from,
        "m^2 = u0*m": m ** 2 == u0 * m,
        "m^3 = u0*m^2": m ** 3 == u0 * (m ** 2),
        "rt(m)": relation_type(A, m),
    }
    expected = {"rt": g + 1, "two_gen_rt": g + 1, "e": g + 1, "m^2 = u0*m": True,
                "m^3 = u0*m^2": True}
    return _expect(f"examples/semigroup-g{g}", {"ring": f"semigroup{g}", "I": I}, q, expected)


def eigrt_example(a: int) -> CheckReport:
    spec = _load(f"eigrt{a}")
    A = spec.presentation
    m = spec.ideal("m")
    e, _ = multiplicity_1dim(A, m)
    value, report = brt(A, spec.decomposition("primary"))
    q = {"rt(m)": relation_type(A, m), "e": e, "brt": value,
         "brt_terms": report.quantities["subsets"], "nilpotency": report.quantities["n"],
         "n_i": report.quantities["n_i"]}
    expected = {"rt(m)": a + 1, "e": a + 1, "brt": a + 1}
    return _expect(f"examples/eigrt-a{a}", {"ring": f"eigrt{a}", "I": m}, q, expected)


def embedded_component_example(a: int, b: int) -> CheckReport:
    spec = _load(f"sect7-a{a}b{b}")
    A = spec.presentation
    m = spec.ideal("m")
    q = {"principal_rt(x)": principal_rt(A, "x"), "rt(m)": relation_type(A, m)}
    expected = {"principal_rt(x)": a}
    if a > b:
        J, k = saturate(A.zero_ideal(), m)
        B = A.quotient(J)
        comps = spec.decomposition("quotient")
        decomp = PrimaryDecompositionInput([(B.ideal(qq.gens), B.ideal(pp.gens))
                                            for qq, pp in comps.components])
        brt_value, _ = brt(B, decomp)
        q.update({"saturation": J, "saturation_matches": J == spec.ideal("J"),
                  "saturation_index": k, "length": length(J, A.zero_ideal()),
                  "brt(A/J)": brt_value})
        expected.update({"saturation_matches": True, "length": a - b, "brt(A/J)": b})
    return _expect(f"examples/embedded-a{a}b{b}", {"ring": f"sect7-a{a}b{b}"}, q, expected)


def embedded_annihilation(a: int, b: int) -> CheckReport:
    spec = _load(f"sect7-a{a}b{b}")
    A = spec.presentation
    rep = check_annihilation_bounds(A, spec.ideal("m"), None, spec.ideal("top"), 1)
    rep.check = f"examples/embedded-a{a}b{b}-annihilation"
    return rep


# --------------------------------------------------------------------------
# theorem checks


def ar_sandwich_random(count: int = 50, seed: int = SEED) -> CheckReport:
    rng = random.Random(seed)
    violations = []
    values = []
    ar_checks = 0
    for i in range(count):
        A, I, K, L = corpus.ar_sandwich_instance(rng)
        rep = check_theorem2(A, I, K, L)
        q = rep.quantities
        values.append([q["s"], q["rt_mod_L"], q["rt_mod_K"]])
        if rep.verdict != PASS:
            violations.append({"instance": i, "ring": repr(A), **rep.to_dict()["inputs"], **q})
        # the returned s must satisfy the displayed equality and be minimal
        s, inst = ar_number(A, I, K, L)
        if verify_strong_ar(inst, s, s + 2).verdict != PASS:
            violations.append({"instance": i, "strong_ar": s})
        if s >= 2 and verify_strong_ar(inst, s - 1, s + 2).verdict == PASS:
            violations.append({"instance": i, "not_minimal": s})
        # the scan stops at rt(I; A/L); look past it without relying on that cutoff
        beyond = [n for n in range(inst.rt_bound + 1, inst.rt_bound + 3)
                  if not inst.chain_equal(n)]
        if beyond:
            violations.append({"instance": i, "unequal_beyond_cutoff": beyond})
        ar_checks += 1
    return CheckReport("theorems/ar-sandwich-random", {"instances": count, "seed": seed},
                       {"s, rt(A/L), rt(A/K)": values, "violations": len(violations),
                        "strong_ar_checked": ar_checks},
                       FAIL if violations else PASS, violations[0] if violations else None)


def ar_sandwich_fixed() -> list[CheckReport]:
    out = []
    plane = _load("plane")
    A = plane.presentation
    rep = check_theorem2(A, plane.ideal("m"), A.zero_ideal(), plane.ideal("x"))
    rep.check = "theorems/ar-sandwich-plane"
    out.append(rep)
    xyz = _load("xyz")
    rep = check_theorem2(xyz.presentation, xyz.ideal("wang2"), xyz.presentation.zero_ideal(),
                         xyz.ideal("z"))
    rep.check = "theorems/ar-sandwich-wang2"
    out.append(rep)
    eig = _load("eigrt2")
    B = eig.presentation
    s, inst = ar_number(B, eig.ideal("m"), B.zero_ideal(), eig.ideal("xa"))
    q = {"s": s, "rt_bound": inst.rt_bound,
         "strong_ar(s)": verify_strong_ar(inst, s, s + 4).verdict,
         "strong_ar(s-1)": verify_strong_ar(inst, s - 1, s + 4).verdict}
    out.append(_expect("theorems/strong-ar-minimal-eigrt2", inst.describe(), q,
                       {"s": 2, "strong_ar(s)": PASS, "strong_ar(s-1)": FAIL}))
    return out


DIM_PAIRS = [("x", "y"), ("y", "x"), ("x + y", "x"), ("x", "x + y"), ("x*y", "y"),
             ("x^2", "y"), ("x + y", "x - y")]


def dim_condition_dichotomy(r_max: int = 8) -> CheckReport:
    plane = _load("plane").presentation
    plane_rows = {r: membership_condition(plane, "x", "y", r) for r in (1, 2, 3)}
    artinian = {}
    for n in (2, 3, 4):
        A = _load(f"nilp{n}").presentation
        found = None
        for r in range(1, r_max + 1):
            if check_dim_conditions(A, r, DIM_PAIRS).verdict == PASS:
                found = r
                break
        artinian[f"nilp{n}"] = found
    colon_plane = check_dim_conditions(plane, 1, [("x", "y", "x + y")]).verdict
    ok = not any(plane_rows.values()) and all(v is not None for v in artinian.values())
    return CheckReport("theorems/dimension-conditions", {"pairs": [list(p) for p in DIM_PAIRS]},
                       {"plane_membership": {str(k): v for k, v in plane_rows.items()},
                        "first_r_all_pairs": artinian, "plane_colon_r1": colon_plane},
                       PASS if ok else FAIL,
                       None if ok else {"plane": plane_rows, "artinian": artinian})


def oracle_agreement(seed: int = SEED, monomial_cases: int = 200) -> CheckReport:
    rng = random.Random(seed)
    mismatches = []
    two_gen_cases = [("nilp2", "x", "y"), ("nilp3", "x", "y"), ("nilp4", "x", "y"),
                     ("eigrt1", "x", "y"), ("eigrt2", "x", "y"), ("eigrt3", "x", "y"),
                     ("eigrt2", "y", "x"), ("semigroup1", "u0", "u1"),
                     ("semigroup2", "u0", "u1"), ("semigroup3", "u0", "u1"),
                     ("plane", "x", "y"), ("sect7-a3b1", "x", "y")]
    principal_cases = [("nilp2", "x"), ("nilp3", "x"), ("nilp4", "x + y"), ("eigrt1", "x"),
                       ("eigrt2", "x"), ("eigrt3", "y"), ("sect7-a2b1", "x"),
                       ("sect7-a3b1", "x"), ("sect7-a3b2", "x"), ("semigroup2", "u0"),
                       ("plane", "x*y")]
    rows = []
    for name, u, v in two_gen_cases:
        A = _load(name).presentation
        R = ReesAnalysis(A, A.ideal([u, v]))
        tg = two_gen_rt(A, u, v)
        l42 = [n for n in range(2, R.max_t_degree + 2)
               if not lemma42_certificate(A, [u, v], n) and R.vanishes(n)[0]]
        rows.append({"ring": name, "gens": [u, v], "rt": R.rt, "two_gen_rt": tg.rt})
        if tg.rt != R.rt or l42:
            mismatches.append({"ring": name, "gens": [u, v], "rt": R.rt, "two_gen": tg.rt,
                               "lemma42_contradictions": l42})
    for name, x in principal_cases:
        A = _load(name).presentation
        a, b = relation_type(A, A.ideal([x])), principal_rt(A, x)
        rows.append({"ring": name, "gens": [x], "rt": a, "principal_rt": b})
        if a != b:
            mismatches.append({"ring": name, "gens": [x], "rt": a, "principal_rt": b})
    # randomized two-generated and principal instances
    for _ in range(30):
        nv = rng.choice([2, 3])
        ring = PolynomialRing(["x", "y", "z"][:nv])
        rels = [Polynomial(ring, {corpus.random_monomial(rng, nv, 4, 2): 1})
                for _ in range(rng.randint(0, 2))]
        A = RingPresentation(ring, rels)
        I = A.ideal([corpus.random_monomial_or_binomial(rng, ring, 3) for _ in range(2)])
        if len(I.gens) < 2:
            continue
        R = ReesAnalysis(A, I)
        tg = two_gen_rt(A, *I.gens)
        pr = principal_rt(A, I.gens[0])
        pr_rees = relation_type(A, A.ideal([I.gens[0]]))
        l42 = [n for n in range(2, R.max_t_degree + 2)
               if not lemma42_certificate(A, I.gens, n) and R.vanishes(n)[0]]
        if tg.rt != R.rt or pr != pr_rees or l42:
            mismatches.append({"ring": repr(A), "gens": I.strings(), "rt": R.rt,
                               "two_gen": tg.rt, "principal": [pr, pr_rees],
                               "lemma42_contradictions": l42})
    # Groebner membership against monomial divisibility
    membership_bad = 0
    for _ in range(monomial_cases):
        nv = rng.randint(1, 4)
        ring = PolynomialRing(["a", "b", "c", "d"][:nv])
        gens = corpus.random_monomial_ideal(rng, ring)
        G = groebner_basis([Polynomial(ring, {g: 1}) for g in gens], ring)
        mono = corpus.random_monomial(rng, nv, 6, 0)
        oracle = any(all(a <= b for a, b in zip(g, mono)) for g in gens)
        if G.contains(Polynomial(ring, {mono: 1})) != oracle:
            membership_bad += 1
    if membership_bad:
        mismatches.append({"monomial_membership_disagreements": membership_bad})
    return CheckReport("theorems/oracle-agreement", {"seed": seed,
                                                    "monomial_cases": monomial_cases},
                       {"cases": rows, "discrepancies": len(mismatches)},
                       FAIL if mismatches else PASS, mismatches[0] if mismatches else None)


CM_FIXTURES = ("semigroup1", "semigroup2", "semigroup3", "eigrt1", "eigrt2", "eigrt3")


def bound_checks(seed: int = SEED, per_fixture: int = 10) -> CheckReport:
    rng = random.Random(seed)
    violations = []
    counts = {"nilpotent": 0, "annihilated": 0, "multiplicity": 0, "domain": 0}
    for n in (2, 3, 4):
        A = _load(f"nilp{n}").presentation
        for gens in (["x", "y"], ["x"], ["x + y", "y^2"], ["x*y"]):
            rep = check_annihilation_bounds(A, A.ideal(gens))
            counts["nilpotent"] += 1
            if rep.verdict == FAIL:
                violations.append(rep.to_dict())
    for a, b in ((2, 1), (3, 1), (3, 2)):
        spec = _load(f"sect7-a{a}b{b}")
        A = spec.presentation
        for gens in (["x", "y"], ["y"], ["x + y"], ["x", "y^2"]):
            rep = check_annihilation_bounds(A, A.ideal(gens), None, spec.ideal("top"), None)
            counts["annihilated"] += 1
            if rep.verdict == FAIL:
                violations.append(rep.to_dict())
    for name in CM_FIXTURES:
        A = _load(name).presentation
        for _ in range(per_fixture):
            I = corpus.random_primary_ideal(rng, A)
            rep = check_cm_multiplicity_bound(A, I)
            counts["multiplicity"] += 1
            if rep.verdict != PASS:
                violations.append(rep.to_dict())
    for g in (1, 2, 3):
        A = _load(f"semigroup{g}").presentation
        e, _ = multiplicity_1dim(A)
        for _ in range(5):
            gens = [corpus.random_homogeneous(rng, A, rng.randint(g + 1, 2 * g + 3), 2)
                    for _ in range(rng.randint(1, 3))]
            I = A.ideal([f for f in gens if f])
            counts["domain"] += 1
            if relation_type(A, I) > e:
                violations.append({"ring": f"semigroup{g}", "I": I.strings(), "e": e})
    # reduced but not a domain: rt of any ideal stays below e + 1
    cross = RingPresentation(PolynomialRing(["x", "y"]), ["x*y"])
    e, _ = multiplicity_1dim(cross)
    value, _ = brt(cross, PrimaryDecompositionInput.from_pairs(cross, [(["x"], ["x"]),
                                                                       (["y"], ["y"])]))
    for gens in (["x", "y"], ["x + y"], ["x^2", "y"], ["x^2 + y^3"]):
        counts["reduced"] = counts.get("reduced", 0) + 1
        r = relation_type(cross, cross.ideal(gens))
        if r > e + 1 or r > value:
            violations.append({"ring": "k[x,y]/(x*y)", "I": gens, "rt": r, "e": e, "brt": value})
    return CheckReport("theorems/bound-checks", {"seed": seed, "per_fixture": per_fixture},
                       {"checked": counts, "violations": len(violations)},
                       FAIL if violations else PASS, violations[0] if violations else None)


def principal_bound_examples() -> list[CheckReport]:
    out = []
    for name, dec, samples in (("eigrt2", "primary", ["x", "y", "x + y", "x^2 + y"]),
                               ("nilp3", "trivial", ["x", "x + y", "x*y"]),
                               ("semigroup2", "prime", ["u0", "u1 + u0", "u2"])):
        spec = _load(name)
        rep = principal_uniform_bound(spec.presentation, spec.decomposition(dec), samples)
        rep.check = f"theorems/principal-bound-{name}"
        out.append(rep)
    return out


def wang_suite(k_max: int = 4) -> CheckReport:
    xyz = _load("xyz")
    rep = wang_experiment(xyz.presentation, k_max)
    rep.check = "wang/growth"
    return rep


def _registry(suite: str) -> list[tuple[str, Callable[[], object]]]:
    examples = (
        [(f"nilp{n}", lambda n=n: nilpotent_example(n)) for n in (2, 3, 4)]
        + [(f"semigroup{g}", lambda g=g: semigroup_example(g)) for g in (1, 2, 3)]
        + [(f"eigrt{a}", lambda a=a: eigrt_example(a)) for a in (1, 2, 3)]
        + [(f"sect7-{a}{b}", lambda a=a, b=b: embedded_component_example(a, b))
           for a, b in ((2, 1), (3, 1), (3, 2))]
        + [(f"sect7-red-{a}{b}", lambda a=a, b=b: embedded_annihilation(a, b))
           for a, b in ((2, 1), (3, 1), (3, 2))]
    )
    theorems = [
        ("sandwich-random", ar_sandwich_random),
        ("sandwich-fixed", ar_sandwich_fixed),
        ("dim", dim_condition_dichotomy),
        ("oracles", oracle_agreement),
        ("bounds", bound_checks),
        ("principal", principal_bound_examples),
    ]
    wang = [("wang", wang_suite)]
    table = {"examples": examples, "theorems": theorems, "wang": wang,
             "all": examples + theorems + wang}
    if suite not in table:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return table[suite]


def verify_paper(suite: str = "all") -> SuiteResult:
    """Run a named suite: ``all``, ``examples``, ``theorems`` or ``wang``."""
    result = SuiteResult(suite)
    for _, job in _registry(suite):
        start = time.monotonic()
        produced = job()
        elapsed = time.monotonic() - start
        reports = produced if isinstance(produced, list) else [produced]
        for rep in reports:
            rep.elapsed = elapsed / len(reports)
            result.reports.append(rep)
    result.reports.sort(key=lambda r: r.check)
    return result
