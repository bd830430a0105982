"""Artin-Rees numbers and executable checks of the relation-type bounds.

Modules are cyclic: ``M = A/K`` and ``N = L/K`` for ideals ``K ⊆ L``.  Then
``I^n M ∩ N`` corresponds to the ideal ``(I^n + K) ∩ L`` of ``A``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .corpus import random_homogeneous
from .ideals import (BoundExceeded, IdealHandle, RingPresentation, _m_power_index, ideal_colon,
                     ideal_intersect, length, multiplicity_1dim, saturate)
from .rees import principal_rt, relation_type_mod

PASS, FAIL = "pass", "fail"
INCONCLUSIVE, BAD_HYPOTHESIS = "inconclusive", "inconclusive-hypothesis"


def _jsonable(value):
    if isinstance(value, IdealHandle):
        return value.strings()
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


@dataclass
class CheckReport:
    check: str
    inputs: dict = field(default_factory=dict)
    quantities: dict = field(default_factory=dict)
    verdict: str = PASS
    certificate: object = None
    elapsed: float | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "check": self.check,
            "inputs": _jsonable(self.inputs),
            "quantities": _jsonable(self.quantities),
            "verdict": self.verdict,
            "certificate": _jsonable(self.certificate),
        }
        if timings and self.elapsed is not None:
            out["seconds"] = round(self.elapsed, 3)
        return out


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


# --------------------------------------------------------------------------
# strong uniform Artin-Rees numbers


class ARInstance:
    """The chain ``(I^n + K) ∩ L`` against ``I ((I^(n-1) + K) ∩ L) + K``."""

    def __init__(self, A: RingPresentation, I: IdealHandle, K: IdealHandle, L: IdealHandle):
        if not K.issubset(L):
            raise ValueError(f"K = {K} is not contained in L = {L}")
        self.presentation = A
        self.I, self.K, self.L = I, K, L
        self._meet: dict[int, IdealHandle] = {}
        self.unequal: list[int] = []
        self.s: int | None = None
        self.rt_bound: int | None = None

    def meet(self, n: int) -> IdealHandle:
        """``(I^n + K) ∩ L``, which contains ``K``."""
        if n not in self._meet:
            self._meet[n] = ideal_intersect(self.I ** n + self.K, self.L)
        return self._meet[n]

    def chain(self, n: int) -> tuple[IdealHandle, IdealHandle]:
        return self.meet(n), self.I * self.meet(n - 1) + self.K

    def chain_equal(self, n: int) -> bool:
        lhs, rhs = self.chain(n)
        return lhs == rhs

    def describe(self) -> dict:
        return {"I": self.I, "K": self.K, "L": self.L}


def ar_number(A: RingPresentation, I: IdealHandle, K: IdealHandle,
              L: IdealHandle) -> tuple[int, ARInstance]:
    """Strong uniform number of ``(L/K, A/K)`` for ``I``.

    Degrees above ``rt(I; A/L)`` never contribute, so only ``2..rt(I; A/L)``
    are scanned.
    """
    inst = ARInstance(A, I, K, L)
    inst.rt_bound = relation_type_mod(A, I, L) if not L.is_unit() else 1
    inst.unequal = [n for n in range(2, inst.rt_bound + 1) if not inst.chain_equal(n)]
    inst.s = max(inst.unequal, default=1)
    return inst.s, inst


def verify_strong_ar(inst: ARInstance, s: int, n_max: int) -> CheckReport:
    """Check ``(I^n + K) ∩ L = I^(n-s) ((I^s + K) ∩ L) + K`` for ``s <= n <= n_max``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    I, K = inst.I, inst.K
    base = inst.meet(s)
    failures = [n for n in range(s, n_max + 1) if inst.meet(n) != (I ** (n - s)) * base + K]
    return CheckReport("verify_strong_ar", inst.describe(), {"s": s, "n_max": n_max},
                       _verdict(not failures), {"degree": failures[0]} if failures else None)


def check_theorem2(A: RingPresentation, I: IdealHandle, K: IdealHandle,
                   L: IdealHandle) -> CheckReport:
    """``s <= rt(I; A/L) <= max(rt(I; A/K), s)``."""
    s, inst = ar_number(A, I, K, L)
    r1 = inst.rt_bound
    r2 = relation_type_mod(A, I, K) if not K.is_unit() else 1
    ok = s <= r1 <= max(r2, s)
    cert = None if ok else {"s": s, "rt_mod_L": r1, "rt_mod_K": r2}
    return CheckReport("check_theorem2", inst.describe(),
                       {"s": s, "rt_mod_L": r1, "rt_mod_K": r2, "unequal_degrees": inst.unequal},
                       _verdict(ok), cert)


# --------------------------------------------------------------------------
# conditions in dimension at most one


def membership_condition(A: RingPresentation, x, y, r: int) -> bool:
    """``(x^r y)^r ∈ (x^(r+1), y^(r+1)) (x^(r+1), y^(r+1), x^r y)^(r-1)``."""
    x, y = A.ring(x), A.ring(y)
    a, b, c = x ** (r + 1), y ** (r + 1), x ** r * y
    target = A.ideal([a, b]) * (A.ideal([a, b, c]) ** (r - 1))
    return target.contains(c ** r)


def colon_condition(A: RingPresentation, x, y, z, r: int) -> bool:
    """``(x,y)(x,y,z)^r : z^(r+1) = (x,y)(x,y,z)^(r-1) : z^r``."""
    x, y, z = A.ring(x), A.ring(y), A.ring(z)
    P, Q = A.ideal([x, y]), A.ideal([x, y, z])

    def side(k):
        power = z ** (k + 1)
        if A.is_zero(power):
            return A.unit_ideal()
        return ideal_colon(P * (Q ** k), power)

    return side(r) == side(r - 1)


def check_dim_conditions(A: RingPresentation, r: int, samples: Sequence[Sequence]) -> CheckReport:
    """Evaluate the membership condition on pairs and the colon condition on triples."""
    rows = []
    for sample in samples:
        parts = [str(A.ring(p)) for p in sample]
        if len(sample) == 2:
            ok = membership_condition(A, sample[0], sample[1], r)
            rows.append({"sample": parts, "condition": "membership", "holds": ok})
        elif len(sample) == 3:
            ok = colon_condition(A, *sample, r)
            rows.append({"sample": parts, "condition": "colon", "holds": ok})
        else:
            raise ValueError("samples are pairs (x, y) or triples (x, y, z)")
    bad = [row for row in rows if not row["holds"]]
    return CheckReport("check_dim_conditions", {"ring": repr(A), "r": r},
                       {"samples": rows}, _verdict(not bad), bad[0] if bad else None)


# --------------------------------------------------------------------------
# annihilation bounds


def nilpotency_index(I: IdealHandle, K: IdealHandle, bound: int = 32) -> int | None:
    """Smallest ``s >= 1`` with ``I^s ⊆ K``, or ``None`` within ``bound``."""
    for s in range(1, bound + 1):
        if (I ** s).issubset(K):
            return s
    return None


def annihilator_index(I: IdealHandle, J: IdealHandle, K: IdealHandle,
                      bound: int = 32) -> int | None:
    """Smallest ``t >= 1`` with ``I^t J ⊆ K``."""
    for t in range(1, bound + 1):
        if ((I ** t) * J).issubset(K):
            return t
    return None


def check_annihilation_bounds(A: RingPresentation, I: IdealHandle, K: IdealHandle | None = None,
                              J: IdealHandle | None = None, t: int | None = None,
                              bound: int = 32) -> CheckReport:
    """Bounds on ``rt(I; A/K)`` from nilpotency and from annihilated submodules.

    * ``I^s ⊆ K``  gives  ``rt(I; A/K) <= s``;
    * ``I^t J ⊆ K``  gives  ``rt(I; A/K) <= rt(I; A/(K+J)) + t``;
    * ``(J+K)/K`` of finite length ``l`` gives ``rt(I; A/K) <= rt(I; A/(K+J)) + l``.
    """
    K = K if K is not None else A.zero_ideal()
    rt_K = relation_type_mod(A, I, K) if not K.is_unit() else 1
    parts = {}
    s = nilpotency_index(I, K, bound)
    if s is None:
        parts["nilpotent"] = {"verdict": BAD_HYPOTHESIS, "s": None, "rt": rt_K}
    else:
        parts["nilpotent"] = {"verdict": _verdict(rt_K <= s), "s": s, "rt": rt_K}
    if J is not None:
        L = J + K
        rt_L = relation_type_mod(A, I, L) if not L.is_unit() else 1
        if t is None:
            t_used = annihilator_index(I, J, K, bound)
            holds = t_used is not None
        else:
            t_used = t
            holds = ((I ** t) * J).issubset(K)
        if not holds:
            parts["annihilated"] = {"verdict": BAD_HYPOTHESIS, "t": t_used, "rt": rt_K,
                                    "rt_quotient": rt_L}
        else:
            parts["annihilated"] = {"verdict": _verdict(rt_K <= rt_L + t_used), "t": t_used,
                                    "rt": rt_K, "rt_quotient": rt_L}
        try:
            ell = length(L, K, bound=max(bound, 64))
        except (ValueError, BoundExceeded):
            parts["finite_length"] = {"verdict": BAD_HYPOTHESIS, "length": None, "rt": rt_K,
                                      "rt_quotient": rt_L}
        else:
            parts["finite_length"] = {"verdict": _verdict(rt_K <= rt_L + ell), "length": ell,
                                      "rt": rt_K, "rt_quotient": rt_L}
    verdicts = [p["verdict"] for p in parts.values()]
    if FAIL in verdicts:
        verdict = FAIL
    elif PASS in verdicts:
        verdict = PASS
    else:
        verdict = BAD_HYPOTHESIS
    cert = next(({"part": k, **v} for k, v in parts.items() if v["verdict"] == FAIL), None)
    inputs = {"I": I, "K": K}
    if J is not None:
        inputs["J"] = J
        inputs["t"] = t
    return CheckReport("check_annihilation_bounds", inputs, parts, verdict, cert)


# --------------------------------------------------------------------------
# one-dimensional rings


def is_cohen_macaulay_1dim(A: RingPresentation, K: IdealHandle | None = None) -> bool:
    """``A/K`` (one-dimensional) has no nonzero submodule of finite length."""
    K = K if K is not None else A.zero_ideal()
    sat, _ = saturate(K, A.maximal_ideal())
    return sat == K


def check_cm_multiplicity_bound(A: RingPresentation, I: IdealHandle, K: IdealHandle | None = None,
                                m: IdealHandle | None = None, bound: int = 32) -> CheckReport:
    """``rt(I; A/K) <= e(A)`` for ``m``-primary ``I`` in a one-dimensional CM ring."""
    d = A.krull_dim()
    if d != 1:
        raise ValueError(f"ring has dimension {d}, expected 1")
    try:
        j = _m_power_index(I, bound)
    except (ValueError, BoundExceeded):
        raise ValueError(f"{I} is not primary to the maximal ideal within bound {bound}") from None
    K = K if K is not None else A.zero_ideal()
    inputs = {"I": I, "K": K}
    size = A.ring.field.size
    quantities = {"m_power_in_I": j, "field_size": size}
    if size is not None:
        quantities["caveat"] = ("finite coefficient field; the bound is stated for an infinite "
                                "residue field")
    cm_ring = is_cohen_macaulay_1dim(A)
    cm_module = not K.is_unit() and A.quotient(K).krull_dim() == 1 and \
        is_cohen_macaulay_1dim(A, K)
    quantities.update({"ring_cm": cm_ring, "module_cm": cm_module})
    e, stable_from = multiplicity_1dim(A, m)
    rt = relation_type_mod(A, I, K) if not K.is_unit() else 1
    quantities.update({"e": e, "e_stable_from": stable_from, "rt": rt})
    if not (cm_ring and cm_module):
        return CheckReport("check_cm_multiplicity_bound", inputs, quantities, BAD_HYPOTHESIS)
    ok = rt <= e
    return CheckReport("check_cm_multiplicity_bound", inputs, quantities, _verdict(ok),
                       None if ok else {"rt": rt, "e": e})


@dataclass
class PrimaryDecompositionInput:
    """Declared components ``(q_i, p_i)`` of the zero ideal; ``embedded`` marks m-primary ones."""

    components: list
    embedded: list = field(default_factory=list)

    @classmethod
    def from_pairs(cls, A: RingPresentation, pairs, embedded=()):
        comps = [(A.ideal(q), A.ideal(p)) for q, p in pairs]
        return cls(comps, list(embedded))

    def describe(self) -> list:
        return [{"q": q.strings(), "p": p.strings(), "embedded": i in self.embedded}
                for i, (q, p) in enumerate(self.components)]


class DecompositionError(ValueError):
    pass


def verify_decomposition(A: RingPresentation, decomp: PrimaryDecompositionInput,
                         bound: int = 32) -> list[int]:
    """Check the declared decomposition; return the exponents ``n_i``."""
    if not decomp.components:
        raise DecompositionError("empty decomposition")
    meet = A.unit_ideal()
    exps = []
    for i, (q, p) in enumerate(decomp.components):
        if not q.issubset(p):
            raise DecompositionError(f"component {i}: q = {q} is not inside p = {p}")
        n_i = nilpotency_index(p, q, bound)
        if n_i is None:
            raise DecompositionError(f"component {i}: no power p^n inside q for n <= {bound}")
        exps.append(n_i)
        meet = ideal_intersect(meet, q)
    if not meet.is_zero():
        raise DecompositionError(f"components intersect to {meet}, not to zero")
    return exps


def brt(A: RingPresentation, decomp: PrimaryDecompositionInput,
        bound: int = 32) -> tuple[int, CheckReport]:
    """``max(n, e(A/(q_S)) + t_S)`` over nonempty sets ``S`` of minimal components."""
    exps = verify_decomposition(A, decomp, bound)
    minimal = [i for i in range(len(decomp.components)) if i not in decomp.embedded]
    radical = A.unit_ideal()
    for i in minimal:
        radical = ideal_intersect(radical, decomp.components[i][1])
    n = nilpotency_index(radical, A.zero_ideal(), bound)
    if n is None:
        raise DecompositionError(f"nilradical is not nilpotent of index <= {bound}")
    subsets = []
    value = n
    for size in range(1, len(minimal) + 1):
        for S in combinations(minimal, size):
            t_S = max((exps[i] for i in minimal if i not in S), default=0)
            meet = A.unit_ideal()
            for i in S:
                meet = ideal_intersect(meet, decomp.components[i][0])
            B = A.quotient(meet)
            row = {"subset": [i + 1 for i in S], "t": t_S}
            if B.krull_dim() != 1:
                row.update({"e": None, "note": "quotient is not one-dimensional"})
            else:
                e, _ = multiplicity_1dim(B)
                row.update({"e": e, "cm": is_cohen_macaulay_1dim(B)})
                value = max(value, e + t_S)
            subsets.append(row)
    quantities = {"n": n, "n_i": exps, "subsets": subsets, "brt": value}
    report = CheckReport("brt", {"ring": repr(A), "decomposition": decomp.describe()},
                         quantities, PASS)
    if any(row["e"] is None for row in subsets):
        report.verdict = INCONCLUSIVE
    return value, report


def principal_uniform_bound(A: RingPresentation, decomp: PrimaryDecompositionInput,
                            samples: Sequence, bound: int = 32) -> CheckReport:
    """``rt((x)) <= s`` for sampled ``x`` where ``p_i^s ⊆ q_i`` for every component."""
    exps = verify_decomposition(A, decomp, bound)
    s = max(exps)
    rows = []
    for x in samples:
        x = A.ring(x)
        r = principal_rt(A, x, A.zero_ideal(), bound)
        rows.append({"x": str(x), "rt": r, "holds": r <= s})
    bad = [row for row in rows if not row["holds"]]
    return CheckReport("principal_uniform_bound", {"ring": repr(A),
                                                   "decomposition": decomp.describe()},
                       {"s": s, "samples": rows}, _verdict(not bad), bad[0] if bad else None)


# --------------------------------------------------------------------------
# Wang's family


def wang_ideal(A: RingPresentation, k: int, names: Sequence[str] = ("x", "y", "z")) -> IdealHandle:
    x, y, z = names
    return A.ideal([f"{x}^{k}", f"{y}^{k}", f"{x}^{k - 1}*{y} + {z}^{k}"])


def wang_experiment(A: RingPresentation, k_max: int, time_budget: float | None = None,
                    names: Sequence[str] = ("x", "y", "z")) -> CheckReport:
    """Rows ``(k, rt(I_k; A/(z)), s_k)`` for ``k = 2..k_max``.

    Stops early (partial table) when ``time_budget`` seconds are exceeded;
    the ``k = 2`` row is always computed.
    The verdict requires ``s_k <= rt_k`` on every row and strictly increasing
    ``s_k`` and ``rt_k``.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    start = time.monotonic()
    rows = []
    complete = True
    L = A.ideal([names[2]])
    for k in range(2, k_max + 1):
        if rows and time_budget is not None and time.monotonic() - start > time_budget:
            complete = False
            break
        I = wang_ideal(A, k, names)
        s, inst = ar_number(A, I, A.zero_ideal(), L)
        rows.append({"k": k, "rt": inst.rt_bound, "s": s})
    sandwich = all(r["s"] <= r["rt"] for r in rows)
    growth = all(a["s"] < b["s"] for a, b in zip(rows, rows[1:]))
    rt_growth = all(a["rt"] < b["rt"] for a, b in zip(rows, rows[1:]))
    ok = sandwich and growth and rt_growth
    cert = None
    if not ok:
        cert = {"sandwich": sandwich, "strict_growth": growth, "rt_growth": rt_growth}
    return CheckReport("wang_experiment", {"k_max": k_max},
                       {"table": rows, "complete": complete, "sandwich": sandwich,
                        "strict_growth": growth, "rt_growth": rt_growth}, _verdict(ok), cert)


def sample_two_generated(A: RingPresentation, rng, count: int = 20, max_degree: int = 3,
                         terms: int = 2) -> CheckReport:
    """Relation types of random two-generated ideals.

    Only records what was seen: whether these values stay bounded over all
    two-generated ideals is not decided here, so the verdict is always
    inconclusive.
    """
    lo = min(A.ring.weights)
    rows = []
    while len(rows) < count:
        u, v = (random_homogeneous(rng, A, rng.randint(lo, max_degree * lo), terms)
                for _ in range(2))
        if not u or not v:
            continue
        rows.append({"u": str(u), "v": str(v), "rt": relation_type_mod(A, A.ideal([u, v]),
                                                                      A.zero_ideal())})
    return CheckReport("sample_two_generated", {"ring": repr(A), "count": count},
                       {"samples": rows, "max_rt": max(r["rt"] for r in rows)}, INCONCLUSIVE)
