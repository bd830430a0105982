import random

import pytest
from hypothesis import given, settings, strategies as st

from arlab import PolynomialRing, groebner_basis, is_member, normal_form
from arlab.groebner import GroebnerBasis

R = PolynomialRing(["x", "y"])
x, y = R.gens()


def test_normal_form_examples():
    assert normal_form(x ** 2 * y, [x ** 2]) == R.zero()
    assert normal_form(x ** 2 + y, [x ** 2]) == y
    assert normal_form(x ** 2, [x ** 2 - y, y]) == R.zero()


def test_monomial_ideal_is_its_own_basis():
    G = groebner_basis([x ** 2, x * y])
    assert sorted(G.leading_monomials) == sorted([(2, 0), (1, 1)])
    assert G.is_reduced()


def test_linear_generators_lex():
    L = R.with_order("lex")
    G = groebner_basis([L.parse("x + y"), L.parse("x - y")], L)
    assert set(G) == {L.parse("x"), L.parse("y")}


def test_principal_basis_is_the_generator():
    S = PolynomialRing(["x", "y", "T1", "T2"])
    f = S.parse("y*T1 - x*T2")
    assert set(groebner_basis([f])) == {f.monic()}


def test_membership_examples():
    assert not is_member(x * y, [x ** 2, y ** 2])
    assert is_member(R.zero(), [x ** 2])
    assert is_member(y, [x ** 2 - y, x ** 2])


def test_unit_and_zero():
    assert groebner_basis([x + 1, x]).is_unit()
    assert groebner_basis([R.zero()]).is_zero()
    assert groebner_basis([], R).is_zero()


def test_cyclic4():
    S = PolynomialRing(["a", "b", "c", "d"])
    gens = [S.parse(t) for t in ("a + b + c + d", "a*b + b*c + c*d + d*a",
                                 "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1")]
    G = groebner_basis(gens)
    assert G.is_groebner() and G.is_reduced()
    assert all(G.contains(g) for g in gens)
    assert len(G) == 7


def test_homogeneous_input_gives_homogeneous_basis():
    S = PolynomialRing(["x", "y", "z"])
    G = groebner_basis([S.parse("x^2 - y*z"), S.parse("x*y - z^2"), S.parse("y^3 - x*z^2")])
    assert all(g.is_homogeneous() for g in G)


def _random_ideal(rng, ring, count=3, deg=3):
    out = []
    for _ in range(count):
        f = ring.zero()
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, deg) for _ in range(ring.nvars))
            f = f + ring.monomial(e, rng.randint(-5, 5))
        out.append(f)
    return out


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from(["lex", "grlex", "grevlex"]))
def test_basis_properties(seed, order):
    rng = random.Random(seed)
    S = PolynomialRing(["x", "y", "z"], order=order)
    gens = _random_ideal(rng, S)
    G = groebner_basis(gens, S)
    assert G.is_groebner()
    assert G.is_reduced()
    # same ideal both ways
    assert all(G.contains(g) for g in gens)
    assert all(groebner_basis(gens, S).contains(g) for g in G)
    # idempotence
    assert list(groebner_basis(list(G), S)) == list(G)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.data())
def test_monomial_membership_matches_divisibility(nv, data):
    S = PolynomialRing(["a", "b", "c", "d"][:nv])
    mono = st.tuples(*[st.integers(0, 6)] * nv)
    gens = data.draw(st.lists(mono, min_size=1, max_size=4))
    target = data.draw(mono)
    G = groebner_basis([S.monomial(g) for g in gens], S)
    oracle = any(all(a <= b for a, b in zip(g, target)) for g in gens)
    assert G.contains(S.monomial(target)) == oracle


def test_degree_bound_truncates():
    S = PolynomialRing(["x", "y", "z"])
    gens = [S.parse("x^2 - y*z"), S.parse("x*y - z^2"), S.parse("y^3 - x*z^2")]
    full = groebner_basis(gens)
    partial = groebner_basis(gens, degree_bound=2)
    assert isinstance(partial, GroebnerBasis)
    assert max(g.degree() for g in partial) <= max(g.degree() for g in full)
