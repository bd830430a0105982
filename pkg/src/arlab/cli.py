"""``arlab`` command-line interface.

Every subcommand prints one JSON object (sorted keys, newline-terminated).
Exit status: 0 on success or a passing check, 1 when a check fails, 2 on
usage, parse or ring-spec errors.  A computation that hits ``--bound``
reports ``"status": "inconclusive"`` and exits 0.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .checks import (BAD_HYPOTHESIS, FAIL, DecompositionError, _jsonable, ar_number, brt,
                     check_annihilation_bounds, check_cm_multiplicity_bound,
                     check_dim_conditions, check_theorem2, verify_strong_ar, wang_experiment)
from .fixtures import data_dir
from .ideals import (BoundExceeded, NonHomogeneousError, eliminate, hilbert_function,
                     ideal_colon, ideal_dim, ideal_intersect, min_gens, multiplicity_1dim,
                     saturate)
from .parse import ParseError
from .rees import (ReesAnalysis, principal_rt, relation_type, relation_type_mod, two_gen_rt)
from .specfile import RingSpec, SpecError, load_ring_spec
from .suite import SUITES, UnknownSuite, verify_paper

FIELDS = {"fp": None, "qq": {"type": "qq"}}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --------------------------------------------------------------------------
# argument helpers


def _resolve_ring_path(value: str) -> Path:
    """A file path, or the name of a bundled ring spec (``eigrt2``, ``plane.json``)."""
    path = Path(value)
    if path.exists():
        return path
    bundled = data_dir() / (value if value.endswith(".json") else value + ".json")
    if bundled.exists():
        return bundled
    return path


def _load(args) -> RingSpec:
    if not args.ring:
        raise UsageError("--ring is required")
    override = None
    if args.field == "qq":
        override = {"type": "qq"}
    elif args.field == "fp":
        override = {"type": "fp", "p": args.prime}
    return load_ring_spec(_resolve_ring_path(args.ring), override)


def _ideal(spec: RingSpec, token: str):
    """A named ideal, or inline generators written ``(f, g, ...)``."""
    token = token.strip()
    if token.startswith("(") and token.endswith(")"):
        body = token[1:-1].strip()
        return spec.presentation.ideal([g for g in body.split(",") if g.strip()] if body else [])
    return spec.ideal(token)


def _ideals(spec: RingSpec, args, count: int, defaults=()) -> list:
    names = list(args.ideal or [])
    for name in defaults[len(names):]:
        names.append(name)
    if len(names) < count:
        raise UsageError(f"expected {count} --ideal argument(s), got {len(args.ideal or [])}")
    return [_ideal(spec, n) for n in names[:count]]


def _polys(spec: RingSpec, args, count: int) -> list:
    polys = list(args.poly or [])
    if len(polys) < count:
        raise UsageError(f"expected {count} --poly argument(s), got {len(polys)}")
    return [spec.ring.parse(p) for p in polys[:count]]


def _need(value, flag):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# --------------------------------------------------------------------------
# subcommands; each returns (payload, exit status)


def cmd_gb(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1)
    return {"groebner_basis": [str(g) for g in I.groebner], "ideal": I.strings()}, 0


def cmd_member(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1)
    (f,) = _polys(spec, args, 1)
    return {"member": I.contains(f)}, 0


def cmd_intersect(args):
    spec = _load(args)
    I, K = _ideals(spec, args, 2)
    return {"ideal": ideal_intersect(I, K)}, 0


def cmd_colon(args):
    spec = _load(args)
    if args.poly:
        (I,) = _ideals(spec, args, 1)
        (D,) = _polys(spec, args, 1)
    else:
        I, D = _ideals(spec, args, 2)
    return {"ideal": ideal_colon(I, D)}, 0


def cmd_power(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1)
    n = _need(args.n, "--n")
    if n < 0:
        raise UsageError("--n must be non-negative")
    return {"ideal": I ** n, "n": n}, 0


def cmd_eliminate(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1, ("0",))
    if not args.var:
        raise UsageError("--var is required (repeatable)")
    E = eliminate(I, args.var)
    return {"ideal": E, "vars": list(E.ring.names)}, 0


def cmd_saturate(args):
    spec = _load(args)
    I, K = _ideals(spec, args, 2, ("0", "m"))
    S, k = saturate(I, K, args.bound)
    return {"ideal": S, "exponent": k}, 0


def cmd_hf(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1, ("0",))
    return hilbert_function(I, args.n if args.n is not None else 10), 0


def cmd_mu(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1)
    return {"mu": min_gens(I)}, 0


def cmd_mult(args):
    spec = _load(args)
    (m,) = _ideals(spec, args, 1, ("m",))
    e, n0 = multiplicity_1dim(spec.presentation, m, bound=args.bound)
    return {"e": e, "stable_from": n0}, 0


def cmd_dim(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1, ("0",))
    return {"dim": ideal_dim(I)}, 0


def cmd_rees(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1)
    return ReesAnalysis(spec.presentation, I).to_dict(), 0


def cmd_rt(args):
    spec = _load(args)
    (I,) = _ideals(spec, args, 1)
    return {"rt": relation_type(spec.presentation, I)}, 0


def cmd_rt_mod(args):
    spec = _load(args)
    I, K = _ideals(spec, args, 2)
    return {"rt": relation_type_mod(spec.presentation, I, K)}, 0


def cmd_rt_principal(args):
    spec = _load(args)
    (x,) = _polys(spec, args, 1)
    K = _ideal(spec, args.ideal[0]) if args.ideal else None
    return {"rt": principal_rt(spec.presentation, x, K, args.bound)}, 0


def cmd_rt_2gen(args):
    spec = _load(args)
    u, v = _polys(spec, args, 2)
    return two_gen_rt(spec.presentation, u, v, args.bound).to_dict(), 0


def cmd_ar(args):
    spec = _load(args)
    I, K, L = _ideals(spec, args, 3, (None, "0"))
    s, inst = ar_number(spec.presentation, I, K, L)
    check = verify_strong_ar(inst, s, s + (args.n if args.n is not None else 3))
    return {"s": s, "rt_bound": inst.rt_bound, "unequal_degrees": inst.unequal,
            "verified": check.to_dict()}, _status(check.verdict)


def cmd_check_thm2(args):
    spec = _load(args)
    I, K, L = _ideals(spec, args, 3, (None, "0"))
    rep = check_theorem2(spec.presentation, I, K, L)
    return rep.to_dict(), _status(rep.verdict)


def cmd_check_iv(args):
    spec = _load(args)
    r = _need(args.r, "--r")
    samples = [s.split(",") for s in (args.sample or ["x,y"])]
    for s in samples:
        if len(s) not in (2, 3):
            raise UsageError(f"--sample takes 2 or 3 comma-separated elements, got {s}")
    rep = check_dim_conditions(spec.presentation, r, samples)
    return rep.to_dict(), _status(rep.verdict)


def cmd_check_bounds(args):
    spec = _load(args)
    A = spec.presentation
    if args.kind == "annihilation":
        names = list(args.ideal or [])
        if not names:
            raise UsageError("expected --ideal I [--ideal K [--ideal J]]")
        I = _ideal(spec, names[0])
        K = _ideal(spec, names[1]) if len(names) > 1 else None
        J = _ideal(spec, names[2]) if len(names) > 2 else None
        rep = check_annihilation_bounds(A, I, K, J, args.t, args.bound)
    else:
        names = list(args.ideal or [])
        if not names:
            raise UsageError("expected --ideal I [--ideal K]")
        I = _ideal(spec, names[0])
        K = _ideal(spec, names[1]) if len(names) > 1 else None
        rep = check_cm_multiplicity_bound(A, I, K, bound=args.bound)
    return rep.to_dict(), _status(rep.verdict)


def cmd_brt(args):
    spec = _load(args)
    decomp = spec.decomposition(_need(args.decomp, "--decomp"))
    value, rep = brt(spec.presentation, decomp, args.bound)
    return {"brt": value, "report": rep.to_dict()}, 0


def cmd_wang(args):
    spec = _load(args)
    k_max = args.kmax if args.kmax is not None else 3
    rep = wang_experiment(spec.presentation, k_max, args.time_budget)
    return rep.to_dict(), _status(rep.verdict)


def cmd_verify_paper(args):
    result = verify_paper(args.suite)
    print(result.summary_text(), file=sys.stderr)
    return result.to_dict(timings=args.timings), 0 if result.ok else 1


def _status(verdict: str) -> int:
    return 1 if verdict == FAIL else 0


COMMANDS = {
    "gb": (cmd_gb, "reduced Groebner basis of an ideal (plus the defining ideal)"),
    "member": (cmd_member, "ideal membership of --poly"),
    "intersect": (cmd_intersect, "intersection of two ideals"),
    "colon": (cmd_colon, "I : D for an ideal D or a single --poly"),
    "power": (cmd_power, "the --n-th power of an ideal"),
    "eliminate": (cmd_eliminate, "eliminate the --var variables"),
    "saturate": (cmd_saturate, "I : K^infinity (K defaults to m)"),
    "hf": (cmd_hf, "Hilbert function of A/I up to degree --n"),
    "mu": (cmd_mu, "minimal number of generators"),
    "mult": (cmd_mult, "multiplicity of a one-dimensional ring"),
    "dim": (cmd_dim, "Krull dimension of A/I"),
    "rees": (cmd_rees, "defining ideal of the Rees algebra and vanishing degrees"),
    "rt": (cmd_rt, "relation type of an ideal"),
    "rt-mod": (cmd_rt_mod, "relation type of I on A/K"),
    "rt-principal": (cmd_rt_principal, "relation type of (x) from colon chains"),
    "rt-2gen": (cmd_rt_2gen, "relation type of (u, v) from colon chains"),
    "ar": (cmd_ar, "strong uniform Artin-Rees number for I, K, L"),
    "check-thm2": (cmd_check_thm2, "check s <= rt(I; A/L) <= max(rt(I; A/K), s)"),
    "check-iv": (cmd_check_iv, "membership and colon conditions for sampled elements"),
    "check-bounds": (cmd_check_bounds, "annihilation or multiplicity bounds on rt"),
    "brt": (cmd_brt, "bound computed from a declared primary decomposition"),
    "wang": (cmd_wang, "s_k and rt_k for x^k, y^k, x^(k-1)y + z^k"),
    "verify-paper": (cmd_verify_paper, "run the bundled verification suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--ring", help="ring spec file or bundled name")
    common.add_argument("--ideal", action="append",
                        help="named ideal or inline '(f, g)'; repeatable")
    common.add_argument("--poly", action="append", help="polynomial; repeatable")
    common.add_argument("--n", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--bound", type=int, default=32)
    common.add_argument("--field", choices=sorted(FIELDS))
    common.add_argument("--prime", type=int, default=32003, help="characteristic for --field fp")
    common.add_argument("--var", action="append", help="variable to eliminate; repeatable")
    common.add_argument("--out", help="write JSON here instead of stdout")

    parser = _Parser(prog="arlab", description="Artin-Rees numbers and relation types.")
    parser.add_argument("--version", action="version", version=f"arlab {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name == "check-iv":
            p.add_argument("--sample", action="append", help="'x,y' or 'x,y,z'; repeatable")
        elif name == "check-bounds":
            p.add_argument("--kind", choices=["annihilation", "cm"], default="annihilation")
        elif name == "brt":
            p.add_argument("--decomp", help="named decomposition in the ring spec")
        elif name == "wang":
            p.add_argument("--kmax", type=int)
            p.add_argument("--time-budget", type=float)
        elif name == "verify-paper":
            p.add_argument("--suite", default="all", help="one of " + ", ".join(SUITES))
            p.add_argument("--timings", action="store_true",
                           help="include wall-clock seconds in the JSON")
    return parser


def _emit(payload, out: str | None) -> None:
    text = json.dumps(_jsonable(payload), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        payload, status = COMMANDS[args.command][0](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"arlab: error: {exc}", file=sys.stderr)
        return 2
    except (SpecError, ParseError, UnknownSuite, NonHomogeneousError, DecompositionError,
            ValueError) as exc:
        print(f"arlab: error: {exc}", file=sys.stderr)
        return 2
    except BoundExceeded as exc:
        payload, status = {"status": "inconclusive", "reason": str(exc)}, 0
    _emit(payload, getattr(args, "out", None))
    return status


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
