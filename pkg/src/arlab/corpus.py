"""Seeded random instances for the randomized checks.

Every generator takes a :class:`random.Random` so runs are reproducible.
"""
from __future__ import annotations

import random
from itertools import product

from .ideals import IdealHandle, RingPresentation, _m_power_index, BoundExceeded
from .polynomial import Polynomial, PolynomialRing


def random_monomial(rng: random.Random, nvars: int, max_deg: int, min_deg: int = 1) -> tuple:
    d = rng.randint(min_deg, max_deg)
    e = [0] * nvars
    for _ in range(d):
        e[rng.randrange(nvars)] += 1
    return tuple(e)


def random_monomial_or_binomial(rng: random.Random, ring: PolynomialRing, max_deg: int = 4,
                                binomial_rate: float = 0.4) -> Polynomial:
    m1 = random_monomial(rng, ring.nvars, max_deg)
    terms = {m1: 1}
    if rng.random() < binomial_rate:
        m2 = random_monomial(rng, ring.nvars, max_deg)
        if m2 != m1:
            terms[m2] = rng.choice([1, -1, 2, -3])
    return Polynomial(ring, terms)


def ar_sandwich_instance(rng: random.Random):
    """``(A, I, K, L)`` with monomial/binomial ``I``, ``K ⊆ L``, at most 3 variables."""
    nvars = rng.choice([2, 2, 3])
    ring = PolynomialRing(["x", "y", "z"][:nvars])
    rels = []
    if rng.random() < 0.4:
        rels.append(Polynomial(ring, {random_monomial(rng, nvars, 4, 2): 1}))
    A = RingPresentation(ring, rels)
    I = A.ideal([random_monomial_or_binomial(rng, ring) for _ in range(rng.randint(1, 3))])
    L = A.ideal([random_monomial_or_binomial(rng, ring, 3) for _ in range(rng.randint(1, 2))])
    mode = rng.choice(["zero", "product", "sub"])
    if mode == "zero" or L.is_zero():
        K = A.zero_ideal()
    elif mode == "product":
        K = L * A.ideal([random_monomial_or_binomial(rng, ring, 2)])
    else:
        K = A.ideal([g * Polynomial(ring, {random_monomial(rng, nvars, 2, 0): 1})
                     for g in L.gens[:1]])
    return A, I, K, L


def random_monomial_ideal(rng: random.Random, ring: PolynomialRing, max_gens: int = 4,
                          max_deg: int = 6) -> list[tuple]:
    return [random_monomial(rng, ring.nvars, max_deg, 0 if rng.random() < 0.05 else 1)
            for _ in range(rng.randint(1, max_gens))]


def homogeneous_monomials(ring: PolynomialRing, degree: int) -> list[tuple]:
    """Monomials of the given weighted degree."""
    out = []
    bounds = [degree // w for w in ring.weights]
    for e in product(*(range(b + 1) for b in bounds)):
        if ring.wdeg(e) == degree:
            out.append(e)
    return out


def random_homogeneous(rng: random.Random, A: RingPresentation, degree: int,
                       terms: int = 3) -> Polynomial:
    ring = A.ring
    mons = homogeneous_monomials(ring, degree)
    if not mons:
        return ring.zero()
    chosen = rng.sample(mons, min(terms, len(mons)))
    return A.reduce(Polynomial(ring, {m: rng.randint(1, 50) for m in chosen}))


def random_primary_ideal(rng: random.Random, A: RingPresentation, tries: int = 50,
                         max_degree: int | None = None) -> IdealHandle:
    """A homogeneous ideal primary to the maximal ideal with two or three generators."""
    ring = A.ring
    top = max_degree or 2 * max(ring.weights)
    lo = min(ring.weights)
    for _ in range(tries):
        gens = []
        for _ in range(rng.randint(2, 3)):
            f = random_homogeneous(rng, A, rng.randint(lo, top), terms=rng.randint(1, 3))
            if f:
                gens.append(f)
        if not gens:
            continue
        I = A.ideal(gens)
        try:
            _m_power_index(I, 32)
        except (ValueError, BoundExceeded):
            continue
        return I
    raise RuntimeError("could not draw an m-primary ideal")
