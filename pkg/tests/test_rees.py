import random

import pytest
from hypothesis import given, settings, strategies as st

from arlab.fixtures import toric_relations
from arlab.groebner import groebner_basis
from arlab.ideals import BoundExceeded
from arlab.rees import (ReesAnalysis, effective_relations_vanish, lemma42_certificate,
                        principal_rt, rees_defining_ideal, relation_type, relation_type_mod,
                        two_gen_rt)
from helpers import quotient

P = quotient(["x", "y"])


def nilpotent(n):
    return quotient(["x", "y"], [f"x^{n}", f"y^{n}"])


def semigroup(g):
    return quotient([f"u{i}" for i in range(g + 1)], toric_relations(g),
                    weights=[g + 1 + i for i in range(g + 1)])


def test_koszul_relation_of_the_plane():
    R = rees_defining_ideal(P, P.maximal_ideal())
    Q = R.defining_ideal()
    assert Q == Q.presentation.ideal(["y*T1 - x*T2"])
    assert R.max_t_degree == 1 and R.rt == 1


def test_principal_ideal_on_a_nonzerodivisor_has_no_relations():
    A = quotient(["x"])
    R = rees_defining_ideal(A, A.ideal(["x"]))
    assert R.defining_ideal().is_zero()


def test_annihilator_appears_in_degree_one():
    A = quotient(["x", "y"], ["x^2*y"])
    R = rees_defining_ideal(A, A.ideal(["y"]))
    Q = R.defining_ideal()
    assert Q.contains(Q.ring.parse("x^2*T1"))


def test_effective_relation_verdicts():
    R = rees_defining_ideal(P, P.maximal_ideal())
    assert effective_relations_vanish(R, 2)[0]
    N = rees_defining_ideal(nilpotent(2), nilpotent(2).maximal_ideal())
    ok, cert = effective_relations_vanish(N, 2)
    assert not ok and N.t_degree(cert) == 2
    assert effective_relations_vanish(N, N.max_t_degree + 1) == (True, None)
    with pytest.raises(ValueError):
        effective_relations_vanish(N, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_relation_type_of_nilpotent_family(n):
    A = nilpotent(n)
    assert relation_type(A, A.maximal_ideal()) == n


def test_relation_type_examples():
    A = semigroup(1)
    assert relation_type(A, A.ideal(["u0", "u1"])) == 2
    B = quotient(["x", "y"], ["x^2*y"])
    assert relation_type(B, B.maximal_ideal()) == 3
    assert relation_type(P, P.zero_ideal()) == 1
    assert relation_type(P, P.unit_ideal()) == 1


def test_relation_type_mod_examples():
    assert relation_type_mod(P, P.maximal_ideal(), P.ideal(["x"])) == 1
    X = quotient(["x", "y", "z"])
    I = X.ideal(["x^2", "y^2", "x*y + z^2"])
    image = P.ideal(["x^2", "y^2", "x*y"])
    assert relation_type_mod(X, I, X.ideal(["z"])) == relation_type(P, image)
    assert relation_type_mod(P, P.maximal_ideal(), P.zero_ideal()) == 1
    with pytest.warns(UserWarning):
        assert relation_type_mod(P, P.maximal_ideal(), P.unit_ideal()) == 1


def test_principal_rt_examples():
    assert principal_rt(quotient(["x"], ["x^5"]), "x") == 5
    assert principal_rt(quotient(["x", "y"], ["x^3", "x*y"]), "x") == 3
    assert principal_rt(P, "x + y^2") == 1
    with pytest.raises(BoundExceeded):
        principal_rt(quotient(["x"], ["x^5"]), "x", bound=3)


def test_two_gen_rt_examples():
    res = two_gen_rt(semigroup(2), "u0", "u1")
    assert res.rt == 3 and res.status in ("certified", "stable")
    assert two_gen_rt(P, "x", "y").rt == 1
    assert two_gen_rt(nilpotent(2), "x", "y").rt == 2
    assert set(res.to_dict()) == {"rt", "status", "vanishing", "chain"}


def test_two_gen_rt_reports_inconclusive_at_the_bound():
    res = two_gen_rt(nilpotent(4), "x", "y", bound=3, window=5)
    assert res.status == "inconclusive" and res.rt is None


def test_colon_certificate_examples():
    assert lemma42_certificate(P, ["x", "y"], 2)
    assert not lemma42_certificate(nilpotent(3), ["y", "x"], 3)
    with pytest.raises(ValueError):
        lemma42_certificate(P, ["x"], 2)


def test_wang_image_certificate_agrees_with_verdicts():
    image = P.ideal(["x^2", "y^2", "x*y"])
    R = ReesAnalysis(P, image)
    for n in range(2, R.max_t_degree + 2):
        if not lemma42_certificate(P, ["x^2", "y^2", "x*y"], n):
            assert not R.vanishes(n)[0]


# structural properties


def _random_instance(seed):
    rng = random.Random(seed)
    names = ["x", "y", "z"][:rng.choice([2, 3])]
    rels = []
    if rng.random() < 0.5:
        e = [rng.randint(0, 2) for _ in names]
        e[rng.randrange(len(names))] += 1
        rels.append("*".join(f"{v}^{k}" for v, k in zip(names, e) if k) or "0")
    A = quotient(names, rels)
    gens = []
    for _ in range(rng.randint(1, 3)):
        terms = []
        for _ in range(rng.randint(1, 2)):
            e = [rng.randint(0, 2) for _ in names]
            if not any(e):
                e[0] = 1
            terms.append("*".join(f"{v}^{k}" for v, k in zip(names, e) if k))
        gens.append(" + ".join(terms))
    return rng, A, gens


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_rees_kernel_property(seed):
    rng, A, gens = _random_instance(seed)
    R = ReesAnalysis(A, A.ideal(gens))
    Q = list(R.basis)
    for g in Q:
        assert R.substitute(g).is_zero()
    for _ in range(20 if Q else 0):
        combo = R.ext_ring.zero()
        for g in rng.sample(Q, min(len(Q), 3)):
            mono = [rng.randint(0, 1) for _ in range(R.ext_ring.nvars)]
            combo = combo + g * R.ext_ring.monomial(mono, rng.randint(1, 9))
        assert R.substitute(combo).is_zero()


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_basis_is_t_homogeneous_and_rt_bounded(seed):
    _, A, gens = _random_instance(seed)
    R = ReesAnalysis(A, A.ideal(gens))
    for g in R.basis:
        R.t_degree(g)
    assert R.rt <= max(R.max_t_degree, 1)
    # linear type exactly when the degree <= 1 part generates the whole ideal
    low = groebner_basis([g for g in R.basis if R.t_degree(g) <= 1], R.ext_ring)
    assert (R.rt == 1) == all(low.contains(g) for g in R.basis)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_relation_type_ignores_presentation(seed):
    rng, A, gens = _random_instance(seed)
    I = A.ideal(gens)
    rt = relation_type(A, I)
    shuffled = gens[:]
    rng.shuffle(shuffled)
    assert relation_type(A, A.ideal(shuffled)) == rt
    redundant = gens + [f"{gens[0]} + {gens[-1]}"]
    assert relation_type(A, A.ideal(redundant)) == rt


@pytest.mark.parametrize("m", [1, 2, 3])
def test_regular_sequences_have_linear_type(m):
    A = quotient(["x", "y", "z"])
    assert relation_type(A, A.ideal(["x", "y", "z"][:m])) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_nilpotent_bound(n):
    A = nilpotent(n)
    for gens in (["x"], ["x", "y"], ["x + y", "y^2"]):
        I = A.ideal(gens)
        s = next(k for k in range(1, 4 * n) if (I ** k).is_zero())
        assert relation_type(A, I) <= s
