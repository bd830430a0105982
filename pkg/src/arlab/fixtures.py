"""Bundled ring specifications.

The toric models of ``k[t^(g+1), ..., t^(2g+1)]`` are produced by
eliminating ``t``; the other fixtures are written out directly.  Run
``python -m arlab.fixtures DIR`` to regenerate the JSON files.
"""
from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

from .ideals import RingPresentation, eliminate
from .polynomial import PolynomialRing

FP = {"type": "fp", "p": 32003}


def _spec(names, relations=(), ideals=None, decompositions=None, weights=None):
    out = {
        "field": dict(FP),
        "vars": [{"name": n} if weights is None else {"name": n, "weight": w}
                 for n, w in zip(names, weights or [1] * len(names))],
        "order": "grevlex",
        "relations": list(relations),
        "ideals": ideals or {},
    }
    if decompositions:
        out["decompositions"] = decompositions
    return out


def toric_relations(g: int) -> list[str]:
    """Defining equations of ``k[t^(g+1), ..., t^(2g+1)]`` in ``u_0..u_g``."""
    names = ["t"] + [f"u{i}" for i in range(g + 1)]
    R = PolynomialRing(names)
    T = RingPresentation(R, [f"u{i} - t^{g + 1 + i}" for i in range(g + 1)])
    E = eliminate(T.zero_ideal(), ["t"])
    W = PolynomialRing(names[1:], [g + 1 + i for i in range(g + 1)])
    return [str(p.to_ring(W)) for p in E.gens]


def build_fixtures() -> dict[str, dict]:
    fx = {}
    fx["plane"] = _spec(["x", "y"], ideals={
        "m": ["x", "y"], "sq": ["x^2", "y^2"], "x": ["x"], "y": ["y"],
        "mono": ["x^2", "x*y"], "ysq": ["y^2"]})
    fx["xyz"] = _spec(["x", "y", "z"], ideals={
        "m": ["x", "y", "z"], "z": ["z"],
        "wang2": ["x^2", "y^2", "x*y + z^2"], "wang3": ["x^3", "y^3", "x^2*y + z^3"]})
    for n in (2, 3, 4):
        fx[f"nilp{n}"] = _spec(["x", "y"], [f"x^{n}", f"y^{n}"], ideals={
            "m": ["x", "y"], "x": ["x"], "y": ["y"]},
            decompositions={"trivial": [{"q": ["0"], "p": ["x", "y"], "embedded": True}]})
    for g in (1, 2, 3):
        names = [f"u{i}" for i in range(g + 1)]
        fx[f"semigroup{g}"] = _spec(names, toric_relations(g), ideals={
            "m": names, "I": ["u0", "u1"], "u0": ["u0"]},
            decompositions={"prime": [{"q": ["0"], "p": ["0"]}]},
            weights=[g + 1 + i for i in range(g + 1)])
    for a in (1, 2, 3):
        fx[f"eigrt{a}"] = _spec(["x", "y"], [f"x^{a}*y"], ideals={
            "m": ["x", "y"], "xa": [f"x^{a}"], "y": ["y"], "x": ["x"]},
            decompositions={"primary": [{"q": [f"x^{a}"], "p": ["x"]},
                                        {"q": ["y"], "p": ["y"]}]})
    for a, b in ((2, 1), (3, 1), (3, 2)):
        comps = [{"q": [f"x^{b}"], "p": ["x"]}]
        if a > b:
            comps.append({"q": [f"x^{a}", "y"], "p": ["x", "y"], "embedded": True})
        fx[f"sect7-a{a}b{b}"] = _spec(["x", "y"], [f"x^{a}", f"x^{b}*y"], ideals={
            "m": ["x", "y"], "x": ["x"], "J": [f"x^{b}"], "top": [f"x^{a - 1}"]},
            decompositions={"primary": comps, "quotient": [{"q": [f"x^{b}"], "p": ["x"]}]})
    # the a = 2 member under its short name
    fx["eigrt"] = fx["eigrt2"]
    return fx


def dump(spec: dict) -> str:
    return json.dumps(spec, indent=2, sort_keys=True) + "\n"


def data_dir() -> Path:
    return Path(str(resources.files("arlab") / "data"))


def fixture_path(name: str) -> Path:
    path = data_dir() / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"bundled ring spec {name!r} is missing ({path})")
    return path


def write_fixtures(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, spec in build_fixtures().items():
        path = directory / f"{name}.json"
        path.write_text(dump(spec), encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else str(data_dir())
    for p in write_fixtures(target):
        print(p)
