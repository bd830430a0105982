"""Monomial orders, polynomial rings and sparse exact polynomials.

A monomial is an exponent tuple with one entry per ring variable.  A
:class:`Polynomial` maps monomials to nonzero field elements and is
immutable once built.
"""
from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain
from typing import Iterable, Iterator, NamedTuple, Sequence

from .field import DEFAULT_PRIME, PrimeField

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

Monomial = tuple  # exponent vector, one non-negative int per variable


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(map(operator.add, a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    """``a / b``; the caller guarantees ``b`` divides ``a``."""
    return tuple(map(operator.sub, a, b))


def mono_divides(b: tuple, a: tuple) -> bool:
    return all(map(operator.le, b, a))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(map(max, a, b))


def mono_coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


# --------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order.

    ``kind`` is ``"lex"``, ``"grlex"``, ``"grevlex"`` or ``"block"``.  The
    graded kinds compare weighted degree first.  A block order carries
    ``blocks``: pairs ``(variable indices, sub-order)``; monomials are compared
    block by block, so the first block is eliminated.
    """

    kind: str
    blocks: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if (self.kind == "block") != bool(self.blocks):
            raise ValueError("block orders need blocks, other orders must not have them")

    @classmethod
    def block(cls, *blocks: tuple[Sequence[int], "MonomialOrder | str"]) -> "MonomialOrder":
        norm = []
        for idx, sub in blocks:
            idx = tuple(idx)
            if not idx:
                continue
            if isinstance(sub, str):
                sub = cls(sub)
            norm.append((idx, sub))
        return cls("block", tuple(norm))

    @property
    def name(self) -> str:
        return self.kind

    def key_function(self, weights: Sequence[int]):
        weights = tuple(weights)
        unit = all(w == 1 for w in weights)
        if self.kind == "lex":
            return lambda m: m
        if self.kind == "grlex":
            if unit:
                return lambda m: (sum(m),) + m
            return lambda m: (sum(map(operator.mul, m, weights)),) + m
        if self.kind == "grevlex":
            if unit:
                return lambda m: (sum(m),) + tuple(-e for e in reversed(m))
            return lambda m: ((sum(map(operator.mul, m, weights)),)
                              + tuple(-e for e in reversed(m)))
        parts = []
        for idx, sub in self.blocks:
            getter = operator.itemgetter(*idx)
            if len(idx) == 1:
                single = getter
                getter = lambda m, single=single: (single(m),)  # noqa: E731
            parts.append((getter, sub.key_function([weights[i] for i in idx])))

        def key(m):
            return tuple(chain.from_iterable(f(g(m)) for g, f in parts))

        return key

    def block_indices(self, nvars: int) -> tuple[tuple[int, ...], ...]:
        if self.kind != "block":
            return (tuple(range(nvars)),)
        return tuple(idx for idx, _ in self.blocks)

    def restrict(self, keep: Sequence[int]) -> "MonomialOrder":
        """The induced order on the variables ``keep`` (renumbered 0..)."""
        if self.kind != "block":
            return self
        new_pos = {old: new for new, old in enumerate(keep)}
        blocks = []
        for idx, sub in self.blocks:
            local = [j for j, i in enumerate(idx) if i in new_pos]
            if not local:
                continue
            blocks.append((tuple(new_pos[idx[j]] for j in local), sub.restrict(local)))
        if len(blocks) == 1 and blocks[0][0] == tuple(range(len(keep))):
            return blocks[0][1]
        return MonomialOrder("block", tuple(blocks))

    def relabel(self, positions: Sequence[int], nvars: int) -> "MonomialOrder":
        """Move variable ``i`` to index ``positions[i]`` in an ``nvars`` ring."""
        if self.kind != "block":
            return MonomialOrder.block((tuple(positions), self))
        return MonomialOrder("block", tuple(
            (tuple(positions[i] for i in idx), sub) for idx, sub in self.blocks))

    def describe(self):
        if self.kind != "block":
            return self.kind
        return [{"vars": list(idx), "order": sub.describe()} for idx, sub in self.blocks]


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")


def as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


# --------------------------------------------------------------------------
# rings


class PolynomialRing:
    """``k[x_1, ..., x_n]`` with positive integer weights and a monomial order."""

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None,
                 order: MonomialOrder | str = "grevlex", field=None):
        names = tuple(names)
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names):
            raise ValueError("one weight per variable is required")
        if any(w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        self.names = names
        self.weights = weights
        self.order = as_order(order)
        self.field = field if field is not None else PrimeField(DEFAULT_PRIME)
        self.nvars = len(names)
        self._index = {n: i for i, n in enumerate(names)}
        self._keyf = self.order.key_function(weights)
        self._keys: dict = {}
        self._negkeys: dict = {}
        self._unit_weights = all(w == 1 for w in weights)
        self._hash = hash((names, weights, self.order, self.field))
        self.zero_monomial = (0,) * self.nvars

    # identity -----------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, PolynomialRing) and self._hash == other._hash
                and self.names == other.names and self.weights == other.weights
                and self.order == other.order and self.field == other.field)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        vs = ", ".join(n if w == 1 else f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"{self.field!r}[{vs}] ({self.order.kind})"

    # monomial helpers -----------------------------------------------------
    def sort_key(self, m: tuple):
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = self._keyf(m)
        return k

    def neg_key(self, m: tuple):
        """A key whose ascending order is the descending monomial order."""
        k = self._negkeys.get(m)
        if k is None:
            k = self._negkeys[m] = tuple(-c for c in self.sort_key(m))
        return k

    def wdeg(self, m: tuple) -> int:
        if self._unit_weights:
            return sum(m)
        return sum(map(operator.mul, m, self.weights))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    # constructors -------------------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {}, _canonical=True)

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.zero_monomial: c} if c else {}, _canonical=True)

    def var(self, name: str | int) -> "Polynomial":
        i = name if isinstance(name, int) else self.index(name)
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): self.field(1)}, _canonical=True)

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        return Polynomial(self, {exps: coeff})

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_polynomial

        return parse_polynomial(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring!r} is not {self!r}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    # derived rings --------------------------------------------------------
    def with_field(self, field) -> "PolynomialRing":
        return PolynomialRing(self.names, self.weights, self.order, field)

    def with_order(self, order) -> "PolynomialRing":
        return PolynomialRing(self.names, self.weights, order, self.field)

    def fresh_name(self, base: str, taken: Iterable[str] = ()) -> str:
        used = set(self.names) | set(taken)
        name = base
        while name in used:
            name = "_" + name
        return name


# --------------------------------------------------------------------------
# polynomials


class LeadingData(NamedTuple):
    monomial: tuple
    coefficient: object
    degree: int
    block_degrees: tuple  # per block: sorted distinct per-term degrees


class Polynomial:
    """Sparse polynomial with exact coefficients; immutable."""

    __slots__ = ("ring", "terms", "_lm", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict | None = None, *, _canonical=False):
        self.ring = ring
        if _canonical:
            self.terms = terms
        else:
            conv = ring.field
            clean = {}
            for m, c in (terms or {}).items():
                m = tuple(m)
                if len(m) != ring.nvars:
                    raise ValueError(f"monomial {m} has wrong length for {ring!r}")
                c = conv(c)
                if c:
                    clean[m] = c
            self.terms = clean
        self._lm = None
        self._hash = None

    # basic queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_monomial in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def lm(self) -> tuple:
        if self._lm is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.sort_key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    def monomials(self) -> list[tuple]:
        """Monomials in descending order."""
        return sorted(self.terms, key=self.ring.neg_key)

    def __iter__(self) -> Iterator[tuple[tuple, object]]:
        for m in self.monomials():
            yield m, self.terms[m]

    def degree(self) -> int:
        """Maximum weighted degree of a term (-1 for zero)."""
        if not self.terms:
            return -1
        return max(self.ring.wdeg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.wdeg(m) for m in self.terms}
        return len(degs) <= 1

    def degrees_in(self, indices: Sequence[int]) -> set[int]:
        """Set of per-term (unweighted) degrees in the given variables."""
        return {sum(m[i] for i in indices) for m in self.terms}

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{other.ring!r} is not {self.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.field.reduce
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = red(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        red = self.ring.field.reduce
        return Polynomial(self.ring, {m: red(-c) for m, c in self.terms.items()}, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.ring.field.reduce
        out: dict = {}
        get = out.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(operator.add, m1, m2))
                out[m] = get(m, 0) + c1 * c2
        clean = {}
        for m, c in out.items():
            c = red(c)
            if c:
                clean[m] = c
        return Polynomial(self.ring, clean, _canonical=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, mono: tuple, coeff=1) -> "Polynomial":
        red = self.ring.field.reduce
        coeff = self.ring.field(coeff)
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring, {tuple(map(operator.add, m, mono)): red(c * coeff)
                                      for m, c in self.terms.items()}, _canonical=True)

    def scale(self, c) -> "Polynomial":
        return self.mul_term(self.ring.zero_monomial, c)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lc
        if lc == 1:
            return self
        return self.scale(self.ring.field.inv(lc))

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient ``self / divisor``; raises if the division leaves a remainder."""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.ring.field
        lm, inv = divisor.lm, field.inv(divisor.lc)
        rest = dict(self.terms)
        quot = {}
        key = self.ring.sort_key
        while rest:
            m = max(rest, key=key)
            if not mono_divides(lm, m):
                raise ArithmeticError("polynomial division is not exact")
            q = mono_div(m, lm)
            c = field.reduce(rest[m] * inv)
            quot[q] = c
            for dm, dc in divisor.terms.items():
                nm = mono_mul(dm, q)
                v = field.reduce(rest.get(nm, 0) - c * dc)
                if v:
                    rest[nm] = v
                else:
                    rest.pop(nm, None)
        return Polynomial(self.ring, quot, _canonical=True)

    # maps -----------------------------------------------------------------
    def evaluate(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Apply the ring map sending variable ``i`` to ``images[i]``."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable is required")
        target = images[0].ring if images else self.ring
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        result = target.zero()
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def remap(self, target: PolynomialRing, positions: Sequence[int | None]) -> "Polynomial":
        """Move variable ``i`` to ``positions[i]`` of ``target`` (``None``: must be absent)."""
        n = target.nvars
        out = {}
        for m, c in self.terms.items():
            new = [0] * n
            for i, e in enumerate(m):
                if e:
                    j = positions[i]
                    if j is None:
                        raise ValueError(f"variable {self.ring.names[i]} has no image")
                    new[j] += e
            out[tuple(new)] = c
        if target.field != self.ring.field:
            raise RingMismatchError("remap needs rings over the same field")
        return Polynomial(target, out, _canonical=True)

    def to_ring(self, target: PolynomialRing) -> "Polynomial":
        """Map by variable name into ``target``."""
        return self.remap(target, [target.index(n) if n in target._index else None
                                   for n in self.ring.names])

    # comparisons / hashing --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # printing ---------------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        signed = self.ring.field.signed
        parts = []
        for m in self.monomials():
            neg, mag = signed(self.terms[m])
            factors = []
            for name, e in zip(names, m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = mag
            elif mag == "1":
                body = "*".join(factors)
            else:
                body = mag + "*" + "*".join(factors)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# --------------------------------------------------------------------------
# module-level operations


def poly_arith(op: str, f: Polynomial, g) -> Polynomial:
    """Apply ``add``, ``sub``, ``mul`` or ``pow``; ``g`` is an exponent for ``pow``."""
    if op == "add":
        return f + f._coerce(g)
    if op == "sub":
        return f - f._coerce(g)
    if op == "mul":
        return f * f._coerce(g)
    if op == "pow":
        if not isinstance(g, int):
            raise TypeError("pow needs an integer exponent")
        return f ** g
    raise ValueError(f"unknown operation {op!r}")


def leading_data(f: Polynomial) -> LeadingData:
    if not f:
        raise ValueError("the zero polynomial has no leading data")
    ring = f.ring
    blocks = ring.order.block_indices(ring.nvars)
    per_block = tuple(tuple(sorted(f.degrees_in(idx))) for idx in blocks)
    return LeadingData(f.lm, f.lc, ring.wdeg(f.lm), per_block)
