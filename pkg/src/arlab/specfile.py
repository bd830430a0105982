"""Ring specification files (JSON).

::

    {"field": {"type": "fp", "p": 32003},
     "vars": [{"name": "x"}, {"name": "y", "weight": 2}],
     "order": "grevlex",
     "relations": ["x^2*y"],
     "ideals": {"m": ["x", "y"]},
     "decompositions": {"primary": [{"q": ["x^2"], "p": ["x"]}, {"q": ["y"], "p": ["y"]}]}}

A decomposition entry may carry ``"embedded": true`` for a component primary
to the maximal ideal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .checks import PrimaryDecompositionInput
from .field import field_from_descriptor
from .ideals import IdealHandle, RingPresentation
from .parse import ParseError
from .polynomial import PolynomialRing

ORDERS = ("lex", "grlex", "grevlex")


class SpecError(ValueError):
    """Invalid ring specification; the message names the offending field."""


@dataclass
class RingSpec:
    presentation: RingPresentation
    ideals: dict = field(default_factory=dict)
    decompositions: dict = field(default_factory=dict)
    source: str | None = None

    @property
    def ring(self) -> PolynomialRing:
        return self.presentation.ring

    def ideal(self, name: str) -> IdealHandle:
        """A named ideal; ``0``, ``1`` and ``m`` are built in unless redefined."""
        if name in self.ideals:
            return self.ideals[name]
        A = self.presentation
        builtin = {"0": A.zero_ideal, "zero": A.zero_ideal, "1": A.unit_ideal,
                   "unit": A.unit_ideal, "m": A.maximal_ideal}
        if name in builtin:
            return builtin[name]()
        known = ", ".join(sorted(self.ideals)) or "none"
        raise SpecError(f"unknown ideal {name!r} (defined: {known})")

    def decomposition(self, name: str) -> PrimaryDecompositionInput:
        try:
            return self.decompositions[name]
        except KeyError:
            known = ", ".join(sorted(self.decompositions)) or "none"
            raise SpecError(f"unknown decomposition {name!r} (defined: {known})") from None


def _parse_list(ring, items, where):
    if not isinstance(items, list):
        raise SpecError(f"{where}: expected a list of polynomial strings")
    out = []
    for i, text in enumerate(items):
        if not isinstance(text, str):
            raise SpecError(f"{where}[{i}]: expected a string, got {type(text).__name__}")
        try:
            out.append(ring.parse(text))
        except ParseError as exc:
            raise SpecError(f"{where}[{i}]: {exc}") from None
    return out


def ring_spec_from_dict(data: dict, field_override=None, source: str | None = None) -> RingSpec:
    if not isinstance(data, dict):
        raise SpecError("top level must be a JSON object")
    try:
        fld = field_from_descriptor(field_override if field_override is not None
                                    else data.get("field"))
    except (ValueError, TypeError, AttributeError) as exc:
        raise SpecError(f"field: {exc}") from None
    raw_vars = data.get("vars")
    if not isinstance(raw_vars, list) or not raw_vars:
        raise SpecError("vars: expected a non-empty list")
    names, weights = [], []
    for i, v in enumerate(raw_vars):
        if isinstance(v, str):
            v = {"name": v}
        if not isinstance(v, dict) or "name" not in v:
            raise SpecError(f"vars[{i}]: expected an object with a name")
        w = v.get("weight", 1)
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise SpecError(f"vars[{i}].weight: expected a positive integer, got {w!r}")
        names.append(v["name"])
        weights.append(w)
    order = data.get("order", "grevlex")
    if order not in ORDERS:
        raise SpecError(f"order: unknown monomial order {order!r}")
    try:
        ring = PolynomialRing(names, weights, order, fld)
    except ValueError as exc:
        raise SpecError(f"vars: {exc}") from None
    relations = _parse_list(ring, data.get("relations", []), "relations")
    try:
        A = RingPresentation(ring, relations, name=source)
    except ValueError as exc:
        raise SpecError(f"relations: {exc}") from None
    ideals = {}
    raw_ideals = data.get("ideals", {})
    if not isinstance(raw_ideals, dict):
        raise SpecError("ideals: expected an object")
    for name, gens in raw_ideals.items():
        ideals[name] = A.ideal(_parse_list(ring, gens, f"ideals.{name}"))
    decomps = {}
    raw_decomps = data.get("decompositions", {})
    if not isinstance(raw_decomps, dict):
        raise SpecError("decompositions: expected an object")
    for name, comps in raw_decomps.items():
        if not isinstance(comps, list):
            raise SpecError(f"decompositions.{name}: expected a list")
        pairs, embedded = [], []
        for i, comp in enumerate(comps):
            where = f"decompositions.{name}[{i}]"
            if not isinstance(comp, dict) or "q" not in comp or "p" not in comp:
                raise SpecError(f"{where}: expected an object with q and p")
            q = A.ideal(_parse_list(ring, comp["q"], where + ".q"))
            p = A.ideal(_parse_list(ring, comp["p"], where + ".p"))
            pairs.append((q, p))
            if comp.get("embedded"):
                embedded.append(i)
        decomps[name] = PrimaryDecompositionInput(pairs, embedded)
    return RingSpec(A, ideals, decomps, source)


def load_ring_spec(path, field_override=None) -> RingSpec:
    """Load and validate a ring specification file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return ring_spec_from_dict(data, field_override, source=path.name)
    except SpecError as exc:
        raise SpecError(f"{path.name}: {exc}") from None
