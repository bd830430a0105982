"""Buchberger's algorithm with Gebauer-Moeller pair elimination.

Polynomials are handled internally as plain ``{monomial: coefficient}``
dicts.  Reduction keeps a heap of pending monomials so every step pops the
largest remaining term.
"""
from __future__ import annotations

import heapq
import operator
from bisect import bisect_left
from functools import lru_cache
from typing import Iterable, Sequence

from .polynomial import (Polynomial, PolynomialRing, RingMismatchError, mono_coprime,
                         mono_divides, mono_lcm)

_add = operator.add
_sub = operator.sub
_le = operator.le


def _check_ring(polys: Sequence[Polynomial], ring: PolynomialRing | None = None) -> PolynomialRing:
    for f in polys:
        if ring is None:
            ring = f.ring
        elif f.ring is not ring and f.ring != ring:
            raise RingMismatchError(f"{f.ring!r} is not {ring!r}")
    return ring


class _Reducer:
    """A polynomial prepared for use as a reducer."""

    __slots__ = ("lm", "tail", "inv")

    def __init__(self, lm, terms, inv):
        self.lm = lm
        self.tail = [(m, c) for m, c in terms.items() if m != lm]
        self.inv = inv


def _reduce(terms: dict, reducers: list[_Reducer], ring: PolynomialRing) -> dict:
    """Full reduction of ``terms`` (consumed) by ``reducers``; returns the remainder."""
    if not terms or not reducers:
        return terms
    red = ring.field.reduce
    negkey = ring.neg_key
    heap = [(negkey(m), m) for m in terms]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    rem = {}
    while heap:
        m = pop(heap)[1]
        c = terms.pop(m, None)
        if c is None:
            continue
        for r in reducers:
            if all(map(_le, r.lm, m)):
                break
        else:
            rem[m] = c
            continue
        q = tuple(map(_sub, m, r.lm))
        if r.inv != 1:
            c = red(c * r.inv)
        for tm, tc in r.tail:
            nm = tuple(map(_add, tm, q))
            old = terms.get(nm)
            if old is None:
                terms[nm] = red(-c * tc)
                push(heap, (negkey(nm), nm))
            else:
                v = red(old - c * tc)
                if v:
                    terms[nm] = v
                else:
                    del terms[nm]
    return rem


def _lead(terms: dict, ring: PolynomialRing):
    return max(terms, key=ring.sort_key)


def _monic(terms: dict, ring: PolynomialRing):
    lm = _lead(terms, ring)
    lc = terms[lm]
    if lc != 1:
        field = ring.field
        inv = field.inv(lc)
        red = field.reduce
        terms = {m: red(c * inv) for m, c in terms.items()}
    return lm, terms


def _spoly(lm1, f1: dict, lm2, f2: dict, lcm, ring) -> dict:
    red = ring.field.reduce
    q1 = tuple(map(_sub, lcm, lm1))
    q2 = tuple(map(_sub, lcm, lm2))
    out = {}
    for m, c in f1.items():
        if m != lm1:
            out[tuple(map(_add, m, q1))] = c
    for m, c in f2.items():
        if m == lm2:
            continue
        nm = tuple(map(_add, m, q2))
        v = red(out.get(nm, 0) - c)
        if v:
            out[nm] = v
        else:
            out.pop(nm, None)
    return out


def _buchberger(inputs: list[dict], ring: PolynomialRing,
                degree_bound: int | None = None) -> tuple[list[tuple], bool]:
    """Return ``(basis, truncated)``; ``basis`` is a list of ``(lm, terms)``, monic and reduced."""
    key = ring.sort_key
    wdeg = ring.wdeg
    polys: list[tuple] = []      # (lm, terms) for every basis element ever added
    active: list[int] = []       # indices forming the current basis
    pairs: list[tuple] = []      # (lcm, i, j)
    reducers: list[_Reducer] = []
    reducer_keys: list = []
    truncated = False

    def insert_reducer(lm, terms):
        k = key(lm)
        pos = bisect_left(reducer_keys, k)
        reducer_keys.insert(pos, k)
        reducers.insert(pos, _Reducer(lm, terms, 1))

    def drop_reducer(lm):
        k = key(lm)
        pos = bisect_left(reducer_keys, k)
        del reducer_keys[pos]
        del reducers[pos]

    def update(h):
        nonlocal active, pairs
        lmh = polys[h][0]
        cand = [(mono_lcm(lmh, polys[g][0]), g) for g in active]
        kept = []
        for idx, (l1, g1) in enumerate(cand):
            if mono_coprime(lmh, polys[g1][0]):
                kept.append((l1, g1))
                continue
            dominated = any(mono_divides(l2, l1) for l2, _ in cand[idx + 1:]) or \
                any(mono_divides(l2, l1) for l2, _ in kept)
            if not dominated:
                kept.append((l1, g1))
        new_pairs = [(l, h, g) for l, g in kept if not mono_coprime(lmh, polys[g][0])]
        survivors = []
        for l, g1, g2 in pairs:
            if (not mono_divides(lmh, l)
                    or mono_lcm(polys[g1][0], lmh) == l
                    or mono_lcm(lmh, polys[g2][0]) == l):
                survivors.append((l, g1, g2))
        pairs = survivors + new_pairs
        still = []
        for g in active:
            if mono_divides(lmh, polys[g][0]):
                drop_reducer(polys[g][0])
            else:
                still.append(g)
        active = still + [h]
        insert_reducer(lmh, polys[h][1])

    def add(terms):
        lm, terms = _monic(terms, ring)
        polys.append((lm, terms))
        update(len(polys) - 1)

    order = sorted((f for f in inputs if f),
                   key=lambda f: (max(map(wdeg, f)), key(_lead(f, ring))))
    for f in order:
        h = _reduce(dict(f), reducers, ring)
        if h:
            add(h)

    # normal strategy: smallest lcm in the term order (degree first for graded orders)
    while pairs:
        best = min(range(len(pairs)), key=lambda i: key(pairs[i][0]))
        l, i, j = pairs[best]
        pairs[best] = pairs[-1]
        pairs.pop()
        if degree_bound is not None and wdeg(l) > degree_bound:
            truncated = True
            continue
        s = _spoly(polys[i][0], polys[i][1], polys[j][0], polys[j][1], l, ring)
        h = _reduce(s, reducers, ring)
        if h:
            add(h)

    basis = sorted((polys[g] for g in active), key=lambda p: key(p[0]))
    final = []
    for idx, (lm, terms) in enumerate(basis):
        others = [_Reducer(olm, oterms, 1) for j, (olm, oterms) in enumerate(basis) if j != idx]
        tail = dict(terms)
        del tail[lm]
        tail = _reduce(tail, others, ring)
        tail[lm] = 1
        final.append((lm, tail))
    return final, truncated


@lru_cache(maxsize=8192)
def _cached_basis(ring: PolynomialRing, gens: frozenset, degree_bound):
    basis, truncated = _buchberger([f.terms for f in gens], ring, degree_bound)
    return tuple(Polynomial(ring, terms, _canonical=True) for _, terms in basis), truncated


class GroebnerBasis:
    """A (reduced) Groebner basis; elements are monic and sorted by leading monomial."""

    def __init__(self, ring: PolynomialRing, polys: Sequence[Polynomial], reduced: bool = True,
                 input_count: int = 0, truncated: bool = False):
        self.ring = ring
        self.polys = tuple(polys)
        self.reduced = reduced
        self.input_count = input_count
        self.truncated = truncated
        self._reducers = None

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def __eq__(self, other):
        return isinstance(other, GroebnerBasis) and self.ring == other.ring \
            and self.polys == other.polys

    def __hash__(self):
        return hash(self.polys)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.polys))}])"

    @property
    def leading_monomials(self) -> list[tuple]:
        return [g.lm for g in self.polys]

    def is_unit(self) -> bool:
        return any(g.lm == self.ring.zero_monomial for g in self.polys)

    def is_zero(self) -> bool:
        return not self.polys

    def _prepared(self):
        if self._reducers is None:
            field = self.ring.field
            self._reducers = [_Reducer(g.lm, g.terms, field.inv(g.lc)) for g in self.polys]
        return self._reducers

    def reduce(self, f: Polynomial) -> Polynomial:
        _check_ring([f], self.ring)
        rem = _reduce(dict(f.terms), self._prepared(), self.ring)
        return Polynomial(self.ring, rem, _canonical=True)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def is_groebner(self) -> bool:
        """Re-check Buchberger's criterion on every pair."""
        ring = self.ring
        reducers = self._prepared()
        for a in range(len(self.polys)):
            for b in range(a + 1, len(self.polys)):
                f, g = self.polys[a], self.polys[b]
                if mono_coprime(f.lm, g.lm):
                    continue
                fm, gm = f.monic(), g.monic()
                s = _spoly(f.lm, fm.terms, g.lm, gm.terms, mono_lcm(f.lm, g.lm), ring)
                if _reduce(s, reducers, ring):
                    return False
        return True

    def is_reduced(self) -> bool:
        lms = self.leading_monomials
        for i, g in enumerate(self.polys):
            if g.lc != 1:
                return False
            for j, lm in enumerate(lms):
                if i != j and any(mono_divides(lm, m) for m in g.terms):
                    return False
        return True


def normal_form(f: Polynomial, G: Iterable[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on division by ``G``.

    The first element of ``G`` (in the given order) whose leading monomial
    divides the current term is used, so the result is deterministic.
    """
    G = [g for g in G if g]
    ring = _check_ring([f, *G])
    field = ring.field
    reducers = [_Reducer(g.lm, g.terms, field.inv(g.lc)) for g in G]
    return Polynomial(ring, _reduce(dict(f.terms), reducers, ring), _canonical=True)


def groebner_basis(gens: Sequence[Polynomial], ring: PolynomialRing | None = None,
                   degree_bound: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``ring`` is needed only when ``gens`` is empty.  With ``degree_bound``
    pairs whose lcm exceeds that weighted degree are skipped and the result is
    flagged ``truncated``.
    """
    gens = list(gens)
    ring = _check_ring(gens, ring)
    if ring is None:
        raise ValueError("groebner_basis of an empty list needs an explicit ring")
    key = frozenset(g for g in gens if g)
    polys, truncated = _cached_basis(ring, key, degree_bound)
    return GroebnerBasis(ring, polys, reduced=True, input_count=len(gens), truncated=truncated)


def is_member(f: Polynomial, ideal) -> bool:
    """``f`` lies in ``ideal`` (an ideal handle, a Groebner basis or a list of generators)."""
    if hasattr(ideal, "groebner"):
        return ideal.contains(f)
    if isinstance(ideal, GroebnerBasis):
        return ideal.contains(f)
    return groebner_basis(list(ideal), f.ring).contains(f)
