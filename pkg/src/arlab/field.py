"""Exact coefficient fields.

Field elements are plain Python values: ``int`` in ``[0, p)`` for a prime
field and :class:`fractions.Fraction` for the rationals.  The field object
knows how to canonicalize, invert and print them.
"""
from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field with ``p`` elements."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p!r}")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def size(self) -> int | None:
        return self.p

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} is not invertible mod {self.p}")
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def reduce(self, value: int) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def signed(self, a: int) -> tuple[bool, str]:
        """Return ``(negative, magnitude)`` using the symmetric representative."""
        if a > self.p // 2:
            return True, str(self.p - a)
        return False, str(a)

    def descriptor(self) -> dict:
        return {"type": "fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """The rational numbers with exact arbitrary-precision arithmetic."""

    __slots__ = ()
    p = None

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def size(self) -> int | None:
        return None

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def reduce(self, value):
        return value

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def signed(self, a) -> tuple[bool, str]:
        a = Fraction(a)
        neg = a < 0
        a = abs(a)
        text = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return neg, text

    def descriptor(self) -> dict:
        return {"type": "qq"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("qq")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def field_from_descriptor(desc: dict | str | None):
    """Build a field from ``{"type": "fp", "p": 32003}`` / ``{"type": "qq"}``."""
    if desc is None:
        return PrimeField(DEFAULT_PRIME)
    if isinstance(desc, str):
        desc = {"type": desc}
    kind = desc.get("type")
    if kind == "qq":
        return QQ
    if kind == "fp":
        return PrimeField(desc.get("p", DEFAULT_PRIME))
    raise ValueError(f"unknown field type {kind!r}")
