"""Rees defining ideals and relation type.

For ``I = (x_1..x_m)`` in ``A = k[X]/J`` the defining ideal ``Q`` of the Rees
algebra is the kernel of ``A[T_1..T_m] -> A[t]``, ``T_i -> x_i t``.  It is
computed by eliminating ``t`` from ``(T_i - x_i t) + J``.  ``Q`` is graded by
``T``-degree and its reduced Groebner basis (in an order comparing ``T``
first) consists of ``T``-homogeneous elements, so the largest ``T``-degree
``D`` in the basis bounds the degrees of a minimal generating set.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .groebner import GroebnerBasis, groebner_basis
from .ideals import (BoundExceeded, IdealHandle, RingPresentation, ideal_colon,
                     ideal_combine, ideal_intersect)
from .polynomial import MonomialOrder, Polynomial, PolynomialRing


class ReesAnalysis:
    """Defining ideal of the Rees algebra of ``I`` with per-degree verdicts."""

    def __init__(self, presentation: RingPresentation, ideal: IdealHandle):
        self.presentation = presentation
        self.ideal = ideal
        ring = presentation.ring
        self.generators = list(ideal.gens)
        m = len(self.generators)
        taken = list(ring.names)
        tnames = []
        for i in range(m):
            name = ring.fresh_name(f"T{i + 1}", taken)
            taken.append(name)
            tnames.append(name)
        self.tnames = tuple(tnames)
        self.tname = ring.fresh_name("t", taken)
        n = ring.nvars
        # k[T, X] with T compared first (weight 1 each)
        order = MonomialOrder.block((tuple(range(m)), "grevlex"),
                                    (tuple(range(m, m + n)), ring.order))
        self.ext_ring = PolynomialRing(self.tnames + ring.names, (1,) * m + ring.weights,
                                       order, ring.field)
        big_order = MonomialOrder.block(((0,), "lex"), (tuple(range(1, m + 1)), "grevlex"),
                                        (tuple(range(m + 1, m + n + 1)), ring.order))
        big = PolynomialRing((self.tname,) + self.tnames + ring.names,
                             (1,) + (1,) * m + ring.weights, big_order, ring.field)
        self._big = big
        xpos = list(range(m + 1, m + n + 1))
        t = big.var(0)
        gens = [big.var(1 + i) - x.remap(big, xpos) * t for i, x in enumerate(self.generators)]
        gens += [r.remap(big, xpos) for r in presentation.defining]
        back = [None] + list(range(m + n))
        full = groebner_basis(gens, big)
        polys = [g.remap(self.ext_ring, back) for g in full if not g.lm[0]]
        self.basis = GroebnerBasis(self.ext_ring, polys, reduced=True, input_count=len(gens))
        self._tdeg = {g: self.t_degree(g) for g in polys}
        self.max_t_degree = max(self._tdeg.values(), default=0)
        self._verdicts: dict[int, tuple[bool, Polynomial | None]] = {}
        self._rt = None

    @property
    def m(self) -> int:
        return len(self.generators)

    def t_degree(self, f: Polynomial) -> int:
        degs = f.degrees_in(range(self.m))
        if len(degs) != 1:
            raise ValueError(f"{f} is not T-homogeneous")
        return degs.pop()

    def defining_ideal(self) -> IdealHandle:
        return IdealHandle(RingPresentation(self.ext_ring), self.basis.polys)

    def elements_of_degree(self, n: int) -> list[Polynomial]:
        return [g for g in self.basis if self._tdeg[g] == n]

    def vanishes(self, n: int) -> tuple[bool, Polynomial | None]:
        """Whether ``E(I)_n = 0``; the certificate is a new degree-``n`` basis element."""
        if n < 2:
            raise ValueError("effective relations are tested in degrees n >= 2")
        if n not in self._verdicts:
            top = self.elements_of_degree(n)
            if not top:
                self._verdicts[n] = (True, None)
            else:
                lower = groebner_basis([g for g in self.basis if self._tdeg[g] < n],
                                       self.ext_ring)
                bad = next((g for g in top if not lower.contains(g)), None)
                self._verdicts[n] = (bad is None, bad)
        return self._verdicts[n]

    @property
    def rt(self) -> int:
        if self._rt is None:
            failing = [n for n in range(2, self.max_t_degree + 1) if not self.vanishes(n)[0]]
            self._rt = max(failing, default=1)
        return self._rt

    def verdicts(self) -> dict[int, bool]:
        return {n: self.vanishes(n)[0] for n in range(2, self.max_t_degree + 1)}

    def substitute(self, f: Polynomial) -> Polynomial:
        """Image of ``f`` under ``T_i -> x_i t`` reduced modulo ``J`` (in ``k[t, X]``)."""
        big = self._big
        m, n = self.m, self.presentation.ring.nvars
        t = big.var(0)
        xpos = list(range(m + 1, m + n + 1))
        images = [x.remap(big, xpos) * t for x in self.generators]
        images += [big.var(m + 1 + j) for j in range(n)]
        image = f.evaluate(images)
        J = groebner_basis([r.remap(big, xpos) for r in self.presentation.defining], big)
        return J.reduce(image)

    def to_dict(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "t_variables": list(self.tnames),
            "defining_ideal": [str(g) for g in self.basis],
            "max_t_degree": self.max_t_degree,
            "vanishing": {str(n): v for n, v in self.verdicts().items()},
            "rt": self.rt,
        }


def rees_defining_ideal(A: RingPresentation, I: IdealHandle) -> ReesAnalysis:
    return ReesAnalysis(A, I)


def effective_relations_vanish(R: ReesAnalysis, n: int) -> tuple[bool, Polynomial | None]:
    return R.vanishes(n)


def relation_type(A: RingPresentation, I: IdealHandle) -> int:
    """``rt(I)``; the zero ideal has relation type 1."""
    if I.is_zero():
        return 1
    return ReesAnalysis(A, I).rt


def relation_type_mod(A: RingPresentation, I: IdealHandle, K: IdealHandle) -> int:
    """``rt(I; A/K)``: relation type of the image of ``I`` in ``A/K``."""
    if K.is_unit():
        warnings.warn("A/K is the zero module; using relation type 1", stacklevel=2)
        return 1
    B = A.quotient(K)
    return relation_type(B, B.ideal(I.gens))


def principal_rt(A: RingPresentation, x, K: IdealHandle | None = None, bound: int = 32) -> int:
    """Smallest ``r >= 1`` with ``(K : x^(r+1)) = (K : x^r)``."""
    K = K if K is not None else A.zero_ideal()
    x = A.ring(x)
    prev = ideal_colon(K, x) if x else A.unit_ideal()
    for r in range(1, bound + 1):
        xr = x ** (r + 1)
        nxt = ideal_colon(K, xr) if xr else A.unit_ideal()
        if nxt == prev:
            return r
        prev = nxt
    raise BoundExceeded(f"colon chain (K : x^r) did not stabilize for r <= {bound}")


@dataclass
class TwoGenResult:
    rt: int | None
    status: str                 # "certified", "stable" or "inconclusive"
    vanishing: dict = field(default_factory=dict)
    chain: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"rt": self.rt, "status": self.status,
                "vanishing": {str(n): v for n, v in self.vanishing.items()},
                "chain": self.chain}


def two_gen_rt(A: RingPresentation, u, v, bound: int = 32, window: int = 3) -> TwoGenResult:
    """Relation type of ``(u, v)`` from colon ideals only.

    With ``J_n = u I^(n-1) : v^n`` and ``C_n = (0 : u) ∩ I^n``, the effective
    relations in degree ``n`` vanish exactly when ``J_n = J_(n-1)`` and
    ``C_(n-1) = v C_(n-2)``.  The ``C`` condition is automatic when ``u`` is a
    nonzerodivisor.  The scan stops once ``J_n`` is the unit ideal and
    ``C_(n-1) = 0`` (then every later degree vanishes), or after ``window``
    consecutive vanishing degrees.
    """
    ring = A.ring
    u, v = A.reduce(ring(u)), A.reduce(ring(v))
    I = A.ideal([u, v])
    U, V = A.ideal([u]), A.ideal([v])
    ann_u = ideal_colon(A.zero_ideal(), u) if u else A.unit_ideal()

    def J(n):
        target = U * (I ** (n - 1))
        vn = v ** n
        return ideal_colon(target, vn) if A.reduce(vn) else A.unit_ideal()

    def C(n):
        return ann_u if n == 0 else ideal_intersect(ann_u, I ** n)

    Js = {1: J(1)}
    Cs = {0: C(0)}
    vanishing: dict[int, bool] = {}
    chain = [{"n": 1, "J": Js[1].strings()}]
    streak = 0
    for n in range(2, bound + 1):
        Js[n] = J(n)
        Cs[n - 1] = C(n - 1)
        ok = Js[n] == Js[n - 1] and Cs[n - 1] == V * Cs[n - 2]
        vanishing[n] = ok
        chain.append({"n": n, "J": Js[n].strings(), "ann_part": Cs[n - 1].strings()})
        failing = [k for k, good in vanishing.items() if not good]
        rt = max(failing, default=1)
        if Js[n].is_unit() and Cs[n - 1].is_zero():
            return TwoGenResult(rt, "certified", vanishing, chain)
        streak = streak + 1 if ok else 0
        if streak >= window:
            return TwoGenResult(rt, "stable", vanishing, chain)
    return TwoGenResult(None, "inconclusive", vanishing, chain)


def lemma42_certificate(A: RingPresentation, gens, n: int) -> bool:
    """Compare ``P I^(n-1) : x_d^n`` with ``P I^(n-2) : x_d^(n-1)``, ``P = (x_1..x_(d-1))``.

    ``False`` certifies that the effective relations of degree ``n`` do not
    vanish; ``True`` is inconclusive.
    """
    gens = [A.ring(g) for g in gens]
    if len(gens) < 2:
        raise ValueError("need at least two generators")
    if n < 2:
        raise ValueError("n must be at least 2")
    I = A.ideal(gens)
    P = A.ideal(gens[:-1])
    last = gens[-1]

    def side(k):
        target = P * (I ** (k - 1))
        power = last ** k
        return ideal_colon(target, power) if A.reduce(power) else A.unit_ideal()

    return side(n) == side(n - 1)
