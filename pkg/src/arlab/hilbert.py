"""Hilbert series of monomial ideals.

For a monomial ideal ``M`` of ``k[x_1..x_n]`` graded by positive weights the
Hilbert series of ``k[X]/M`` is ``N(t) / prod(1 - t^w_i)``.  The numerator is
computed by the usual pivot recursion ``N(M) = N(M + (x)) + t^w N(M : x)``.
Polynomials in ``t`` are dicts ``{degree: int}``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Sequence


def minimalize(gens) -> list[tuple]:
    """Drop monomials divisible by another generator (and duplicates)."""
    gens = sorted(set(gens), key=sum)
    out: list[tuple] = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def _tmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for da, ca in a.items():
        for db, cb in b.items():
            out[da + db] = out.get(da + db, 0) + ca * cb
    return {d: c for d, c in out.items() if c}


def _tadd(a: dict, b: dict, shift: int = 0) -> dict:
    out = dict(a)
    for d, c in b.items():
        out[d + shift] = out.get(d + shift, 0) + c
    return {d: c for d, c in out.items() if c}


def _wdeg(m, weights) -> int:
    return sum(e * w for e, w in zip(m, weights))


@lru_cache(maxsize=65536)
def _numerator(gens: tuple, weights: tuple) -> tuple:
    if not gens:
        return ((0, 1),)
    # pairwise coprime generators: product of (1 - t^deg)
    support = Counter(i for m in gens for i, e in enumerate(m) if e)
    if all(c == 1 for c in support.values()):
        poly = {0: 1}
        for m in gens:
            poly = _tmul(poly, {0: 1, _wdeg(m, weights): -1})
        return tuple(sorted(poly.items()))
    var = max(support, key=lambda i: (support[i], -i))
    pivot = tuple(1 if i == var else 0 for i in range(len(weights)))
    plus = minimalize([m for m in gens if not m[var]] + [pivot])
    colon = minimalize([tuple(e - 1 if i == var and e else e for i, e in enumerate(m))
                        for m in gens])
    a = dict(_numerator(tuple(sorted(plus)), weights))
    b = dict(_numerator(tuple(sorted(colon)), weights))
    return tuple(sorted(_tadd(a, b, weights[var]).items()))


def hilbert_numerator(gens: Sequence[tuple], weights: Sequence[int]) -> dict:
    return dict(_numerator(tuple(sorted(minimalize(gens))), tuple(weights)))


def hilbert_function(gens: Sequence[tuple], weights: Sequence[int], upto: int) -> list[int]:
    """``dim_k (k[X]/M)_d`` for ``d = 0..upto``."""
    num = hilbert_numerator(gens, weights)
    series = [0] * (upto + 1)
    for d, c in num.items():
        if d <= upto:
            series[d] += c
    for w in weights:
        for d in range(w, upto + 1):
            series[d] += series[d - w]
    return series


def is_artinian(gens: Sequence[tuple], nvars: int) -> bool:
    """Every variable has a pure power among the generators."""
    pure = {i for m in gens for i in range(nvars)
            if m[i] and sum(m) == m[i]}
    return len(pure) == nvars


def colength(gens: Sequence[tuple], weights: Sequence[int]) -> int:
    """``dim_k k[X]/M``; requires ``M`` to contain a power of every variable."""
    n = len(weights)
    if not is_artinian(gens, n):
        raise ValueError("monomial ideal has infinite colength")
    top = 0
    for i in range(n):
        e = min(m[i] for m in gens if m[i] and sum(m) == m[i])
        top += (e - 1) * weights[i]
    return sum(hilbert_function(gens, weights, top))


def standard_top_degree(gens: Sequence[tuple], nvars: int) -> int:
    """Largest total (unweighted) degree of a standard monomial; needs an artinian ``M``."""
    if not is_artinian(gens, nvars):
        raise ValueError("monomial ideal has infinite colength")
    top = 0
    ones = (1,) * nvars
    hf = hilbert_function(gens, ones, sum(
        min(m[i] for m in gens if m[i] and sum(m) == m[i]) - 1 for i in range(nvars)))
    for d, v in enumerate(hf):
        if v:
            top = d
    return top


def krull_dimension(gens: Sequence[tuple], nvars: int) -> int:
    """Dimension of ``k[X]/M``: largest set of variables supporting no generator."""
    if any(not any(m) for m in gens):
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in gens]
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0
