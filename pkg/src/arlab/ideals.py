"""Ideals of quotient rings ``A = k[X]/J`` and their arithmetic.

An ideal of ``A`` is stored through representatives in ``k[X]``; its
Groebner basis is that of the ambient ideal ``I + J``.  Everything here is
computed through :func:`groebner_basis`, so results are exact.
"""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from . import hilbert
from .groebner import GroebnerBasis, groebner_basis
from .polynomial import MonomialOrder, Polynomial, PolynomialRing, RingMismatchError


class NonHomogeneousError(ValueError):
    """A graded invariant was requested for a non-homogeneous ideal."""


class BoundExceeded(RuntimeError):
    """An iterative search hit its configured bound before stabilizing."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class RingPresentation:
    """The ring ``k[X]/J`` where ``J`` is given by ``relations``."""

    def __init__(self, ring: PolynomialRing, relations: Sequence[Polynomial | str] = (),
                 name: str | None = None):
        self.ring = ring
        rels = [ring(r) for r in relations]
        self.defining = groebner_basis(rels, ring)
        if self.defining.is_unit():
            raise ValueError("the defining ideal is the unit ideal (zero ring)")
        self.relations = tuple(r for r in rels if r)
        self.name = name

    def __eq__(self, other):
        return (isinstance(other, RingPresentation) and self.ring == other.ring
                and self.defining == other.defining)

    def __hash__(self):
        return hash((self.ring, self.defining))

    def __repr__(self):
        rels = ", ".join(map(str, self.relations))
        return f"{self.ring!r}/({rels})" if rels else repr(self.ring)

    @property
    def names(self):
        return self.ring.names

    def poly(self, value) -> Polynomial:
        return self.ring(value)

    def reduce(self, f) -> Polynomial:
        return self.defining.reduce(self.ring(f))

    def is_zero(self, f) -> bool:
        return not self.reduce(f)

    def ideal(self, gens: Iterable[Polynomial | str] = ()) -> "IdealHandle":
        return IdealHandle(self, gens)

    def zero_ideal(self) -> "IdealHandle":
        return IdealHandle(self, ())

    def unit_ideal(self) -> "IdealHandle":
        return IdealHandle(self, (self.ring.one(),))

    def maximal_ideal(self) -> "IdealHandle":
        """The ideal generated by all variables."""
        return IdealHandle(self, self.ring.gens())

    def quotient(self, K: "IdealHandle") -> "RingPresentation":
        """``A/K`` as a new presentation over the same ambient ring."""
        _same(self, K)
        return RingPresentation(self.ring, list(K.groebner), name=None)

    def is_graded(self) -> bool:
        return all(r.is_homogeneous() for r in self.defining)

    def krull_dim(self) -> int:
        return hilbert.krull_dimension(self.defining.leading_monomials, self.ring.nvars)


def _same(A: RingPresentation, *ideals: "IdealHandle"):
    for I in ideals:
        if I.presentation is not A and I.presentation != A:
            raise RingMismatchError("ideals live in different rings")


class IdealHandle:
    """An ideal of a :class:`RingPresentation` given by generators.

    Generators are reduced modulo the defining ideal, made monic and
    deduplicated; zero generators are dropped.
    """

    def __init__(self, presentation: RingPresentation, gens: Iterable[Polynomial | str] = ()):
        self.presentation = presentation
        ring = presentation.ring
        seen = set()
        clean = []
        for g in gens:
            g = presentation.defining.reduce(ring(g))
            if not g:
                continue
            g = g.monic()
            if g not in seen:
                seen.add(g)
                clean.append(g)
        self.gens = tuple(clean)
        self._gb = None
        self._powers = {1: self}

    @property
    def ring(self) -> PolynomialRing:
        return self.presentation.ring

    @property
    def groebner(self) -> GroebnerBasis:
        """Reduced Groebner basis of ``gens + J`` in the ambient ring."""
        if self._gb is None:
            self._gb = groebner_basis(list(self.gens) + list(self.presentation.defining),
                                      self.ring)
        return self._gb

    def ambient_gens(self) -> list[Polynomial]:
        return list(self.gens) + list(self.presentation.defining)

    def contains(self, f) -> bool:
        return self.groebner.contains(self.ring(f))

    def reduce(self, f) -> Polynomial:
        return self.groebner.reduce(self.ring(f))

    def issubset(self, other: "IdealHandle") -> bool:
        _same(self.presentation, other)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other):
        return self.issubset(other)

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        return self.presentation == other.presentation and \
            self.groebner.polys == other.groebner.polys

    def __hash__(self):
        return hash(self.groebner.polys)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.groebner.is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def max_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    def __add__(self, other):
        return ideal_combine("sum", self, other)

    def __mul__(self, other):
        return ideal_combine("product", self, other)

    def __pow__(self, n):
        return ideal_combine("power", self, n)

    def __str__(self):
        return "(" + ", ".join(map(str, self.gens)) + ")"

    def __repr__(self):
        return f"IdealHandle{self}"

    def strings(self) -> list[str]:
        return [str(g) for g in self.gens]


# --------------------------------------------------------------------------
# arithmetic


def ideal_combine(op: str, I: IdealHandle, arg) -> IdealHandle:
    """``sum`` or ``product`` with another ideal, or ``power`` with an integer."""
    A = I.presentation
    if op == "sum":
        _same(A, arg)
        return IdealHandle(A, I.gens + arg.gens)
    if op == "product":
        _same(A, arg)
        return IdealHandle(A, [f * g for f in I.gens for g in arg.gens])
    if op == "power":
        if not isinstance(arg, int):
            raise TypeError("power needs an integer exponent")
        if arg < 0:
            raise ValueError("negative exponent")
        if arg == 0:
            return A.unit_ideal()
        cache = I._powers
        if arg not in cache:
            base = max(k for k in cache if k < arg)
            cur = cache[base]
            for k in range(base + 1, arg + 1):
                cur = IdealHandle(A, [f * g for f in cur.gens for g in I.gens])
                cache[k] = cur
        return cache[arg]
    raise ValueError(f"unknown operation {op!r}")


def _aux_ring(ring: PolynomialRing, base: str = "u"):
    """``ring`` with one new variable in front, eliminated by a block order."""
    name = ring.fresh_name(base)
    n = ring.nvars
    order = MonomialOrder.block(((0,), "lex"), (tuple(range(1, n + 1)), ring.order))
    big = PolynomialRing((name,) + ring.names, (1,) + ring.weights, order, ring.field)
    return big, list(range(1, n + 1))


def _intersect_ambient(ring: PolynomialRing, F: Sequence[Polynomial],
                       G: Sequence[Polynomial]) -> list[Polynomial]:
    if not F or not G:
        return []
    big, pos = _aux_ring(ring)
    u = big.var(0)
    gens = [u * f.remap(big, pos) for f in F] + [(1 - u) * g.remap(big, pos) for g in G]
    back = [None] + list(range(ring.nvars))
    return [p.remap(ring, back) for p in groebner_basis(gens, big) if not p.lm[0]]


def ideal_intersect(I: IdealHandle, K: IdealHandle) -> IdealHandle:
    A = I.presentation
    _same(A, K)
    if I.is_unit():
        return K
    if K.is_unit():
        return I
    return IdealHandle(A, _intersect_ambient(A.ring, I.ambient_gens(), K.ambient_gens()))


def ideal_colon(I: IdealHandle, D) -> IdealHandle:
    """``(I : D)`` for a polynomial or an ideal ``D``."""
    A = I.presentation
    if isinstance(D, IdealHandle):
        _same(A, D)
        result = A.unit_ideal()
        for g in D.gens:
            result = ideal_intersect(result, ideal_colon(I, g))
        return result
    f = A.ring(D)
    if not f:
        raise ValueError("colon by the zero polynomial")
    f = A.defining.reduce(f)
    if not f:
        return A.unit_ideal()
    if I.contains(f):
        return A.unit_ideal()
    meet = _intersect_ambient(A.ring, I.ambient_gens(), [f])
    return IdealHandle(A, [h.exact_div(f) for h in meet])


def saturate(I: IdealHandle, K: IdealHandle, bound: int = 64) -> tuple[IdealHandle, int]:
    """``I : K^infinity`` and the first ``k`` with ``I:K^k = I:K^(k+1)``."""
    cur = I
    for k in range(bound + 1):
        nxt = ideal_colon(cur, K)
        if nxt == cur:
            return cur, k
        cur = nxt
    raise BoundExceeded(f"saturation did not stabilize within {bound} steps", cur)


def eliminate(I: IdealHandle, names: Sequence[str]) -> IdealHandle:
    """``I ∩ k[remaining variables]`` as an ideal of the polynomial ring on them."""
    ring = I.ring
    drop = []
    for n in names:
        drop.append(ring.index(n))
    drop_set = set(drop)
    keep = [i for i in range(ring.nvars) if i not in drop_set]
    sub = ring.order.restrict(keep)
    order = MonomialOrder.block((tuple(range(len(drop))), "grevlex"),
                                (tuple(range(len(drop), ring.nvars)), sub))
    perm = drop + keep
    names_big = [ring.names[i] for i in perm]
    big = PolynomialRing(names_big, [ring.weights[i] for i in perm], order, ring.field)
    pos = [0] * ring.nvars
    for new, old in enumerate(perm):
        pos[old] = new
    target = PolynomialRing([ring.names[i] for i in keep], [ring.weights[i] for i in keep],
                            sub, ring.field)
    gb = groebner_basis([f.remap(big, pos) for f in I.ambient_gens()], big)
    back = [None] * len(drop) + list(range(len(keep)))
    out = [g.remap(target, back) for g in gb if not any(g.lm[:len(drop)])]
    return IdealHandle(RingPresentation(target), out)


# --------------------------------------------------------------------------
# graded invariants


def _require_graded(I: IdealHandle):
    if not I.presentation.is_graded():
        raise NonHomogeneousError("defining ideal is not homogeneous for the ring's weights")
    if not I.is_homogeneous():
        raise NonHomogeneousError(f"ideal {I} is not homogeneous for the ring's weights")


def hilbert_function(I: IdealHandle, d_max: int) -> dict:
    """Hilbert function of ``A/I`` in degrees ``0..d_max``; ``length`` when finite."""
    _require_graded(I)
    lms = I.groebner.leading_monomials
    ring = I.ring
    values = hilbert.hilbert_function(lms, ring.weights, d_max)
    length = hilbert.colength(lms, ring.weights) if hilbert.is_artinian(lms, ring.nvars) \
        else None
    return {"values": values, "length": length}


def colength(I: IdealHandle) -> int:
    """``dim_k A/I``; raises ``ValueError`` if infinite."""
    lms = I.groebner.leading_monomials
    return hilbert.colength(lms, I.ring.weights)


def maximal_power(A: RingPresentation, n: int) -> IdealHandle:
    """``m^n`` generated by all monomials of degree ``n`` in the variables."""
    ring = A.ring
    if n == 0:
        return A.unit_ideal()
    mons = []
    for combo in combinations_with_replacement(range(ring.nvars), n):
        e = [0] * ring.nvars
        for i in combo:
            e[i] += 1
        mons.append(ring.monomial(e))
    return IdealHandle(A, mons)


def _m_power_index(C: IdealHandle, bound: int) -> int:
    """Smallest ``j`` with ``m^j ⊆ C``."""
    ring = C.ring
    lms = C.groebner.leading_monomials
    if C.is_unit():
        return 0
    if not hilbert.is_artinian(lms, ring.nvars):
        raise ValueError("module does not have finite length")
    top = hilbert.standard_top_degree(lms, ring.nvars)
    if all(g.is_homogeneous() for g in C.groebner):
        return top + 1
    for j in range(1, min(top + 1, bound) + 1):
        if maximal_power(C.presentation, j).issubset(C):
            return j
    raise BoundExceeded(f"no power of the maximal ideal up to {bound} lies in {C}")


def length(L: IdealHandle, K: IdealHandle, bound: int = 64) -> int:
    """Length of ``(L + K)/K`` as a module supported at the origin.

    Finds ``j`` with ``m^j L ⊆ K`` and ``N`` with ``L ∩ m^N ⊆ K``; then the
    length is ``dim A/(K + m^N) - dim A/(L + K + m^N)``.
    """
    A = L.presentation
    _same(A, K)
    L = L + K
    if L == K:
        return 0
    j = _m_power_index(ideal_colon(K, L), bound)
    graded = A.is_graded() and L.is_homogeneous() and K.is_homogeneous()
    if graded:
        N = L.max_degree() + j * max(A.ring.weights)
    else:
        for N in range(j, bound + 1):
            if ideal_intersect(L, maximal_power(A, N)).issubset(K):
                break
        else:
            raise BoundExceeded(f"no N <= {bound} with L ∩ m^N inside K")
    mN = maximal_power(A, N)
    return colength(K + mN) - colength(L + mN)


def min_gens(I: IdealHandle, m: IdealHandle | None = None) -> int:
    """``mu(I) = length(I / mI)``."""
    A = I.presentation
    m = m if m is not None else A.maximal_ideal()
    return length(I, m * I)


def multiplicity_1dim(A: RingPresentation, m: IdealHandle | None = None,
                      bound: int = 40, window: int = 3) -> tuple[int, int]:
    """``e(A)`` for one-dimensional ``A`` as the stable value of ``mu(m^n)``.

    Returns ``(e, n0)`` where ``mu(m^n)`` took the value ``e`` for
    ``n0 <= n < n0 + window``.
    """
    d = A.krull_dim()
    if d != 1:
        raise ValueError(f"multiplicity_1dim needs a one-dimensional ring, got dimension {d}")
    if m is None or m == A.maximal_ideal():
        power = lambda n: maximal_power(A, n)  # noqa: E731
    else:
        power = lambda n: m ** n  # noqa: E731
    sizes = [colength(power(1))]   # sizes[i] = dim A/m^(i+1)
    values = []
    for n in range(1, bound + 1):
        sizes.append(colength(power(n + 1)))
        values.append(sizes[n] - sizes[n - 1])
        if len(values) >= window and len(set(values[-window:])) == 1:
            return values[-1], n - window + 1
    raise BoundExceeded(f"mu(m^n) did not stabilize for n <= {bound}", values)


def krull_dim(A: RingPresentation) -> int:
    return A.krull_dim()


def ideal_dim(I: IdealHandle) -> int:
    """Krull dimension of ``A/I``."""
    return hilbert.krull_dimension(I.groebner.leading_monomials, I.ring.nvars)
