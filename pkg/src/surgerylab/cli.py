"""Command-line front end.

Exit codes: 0 on success, 2 on malformed arguments, 1 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import __version__
from .invariants import (
    TorusKnot,
    alexander_from_torsion,
    genus_from_changemaker,
    torsion_from_changemaker,
)
from .realize import general_realization, lens_realization_candidates
from .slopes import Slope
from .surgery import (
    MonodromyClass,
    SeifertFibered,
    characterizing_bound,
    characterizing_gate,
    classify_torus_surgery,
    exceptional_gate,
)

_TORUS_RE = re.compile(r"^(\d+),(\d+)$")
_SIGMA_RE = re.compile(r"^\d+(,\d+)*$")
_MONODROMY = {
    "rv": MonodromyClass.RIGHT_VEERING,
    "lv": MonodromyClass.LEFT_VEERING,
    "neither": MonodromyClass.NEITHER,
}


def _torus(text: str) -> TorusKnot:
    m = _TORUS_RE.match(text)
    if m is None:
        raise argparse.ArgumentTypeError(f"expected r,s but got {text!r}")
    try:
        return TorusKnot(int(m.group(1)), int(m.group(2)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sigma(text: str) -> tuple[int, ...]:
    if _SIGMA_RE.match(text) is None:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of nonnegative integers, got {text!r}")
    return tuple(int(x) for x in text.split(","))


def _positive(text: str) -> int:
    if not re.match(r"^\d+$", text) or int(text) < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(text)


def _cmd_classify(args):
    result = classify_torus_surgery(args.torus, args.slope)
    text = str(result)
    if isinstance(result, SeifertFibered):
        text += f" {result.spherical_type.value}"
    inputs = {"torus": [args.torus.r, args.torus.s], "slope": str(args.slope)}
    return inputs, result.to_dict(), text


def _cmd_gate(args):
    v = exceptional_gate(args.genus, _MONODROMY[args.monodromy], args.slope, args.lspace_smallsfs)
    text = f"{v.verdict.value} (min delta {v.min_delta}, witness {v.witness})"
    if v.lspace_refinement:
        text += " [small SFS L-space refinement at 4g]"
    inputs = {
        "genus": args.genus,
        "monodromy": args.monodromy,
        "slope": str(args.slope),
        "lspace_smallsfs": args.lspace_smallsfs,
    }
    return inputs, v.to_dict(), text


def _cmd_realize(args, parser):
    if args.n is not None:
        if args.p is not None or args.q is not None:
            parser.error("use either --n or --p/--q, not both")
        report = lens_realization_candidates(args.n)
        inputs = {"n": args.n}
    else:
        if args.p is None or args.q is None:
            parser.error("need --n, or both --p and --q")
        try:
            report = general_realization(args.p, args.q)
        except ValueError as exc:
            parser.error(str(exc))
        inputs = {"p": args.p, "q": args.q}
    return inputs, report.to_dict(), report.to_table()


def _cmd_alexander(args, parser):
    try:
        torsion = torsion_from_changemaker(args.sigma, args.p)
        genus = genus_from_changemaker(args.sigma, args.p)
    except ValueError as exc:
        parser.error(str(exc))
    delta = alexander_from_torsion(torsion)
    result = {
        "genus": genus,
        "torsion": list(torsion.values),
        "alexander": [list(t) for t in delta.terms()],
        "alexander_text": str(delta),
    }
    return {"sigma": list(args.sigma), "p": args.p}, result, str(delta)


def _cmd_charslope(args):
    bound = characterizing_bound(args.torus)
    ok = characterizing_gate(args.torus, args.slope)
    boundary = args.slope.as_fraction() == bound
    if ok:
        text = f"characterizing (bound {bound}" + (", boundary case)" if boundary else ")")
    else:
        text = f"below bound (bound {bound})"
    inputs = {"torus": [args.torus.r, args.torus.s], "slope": str(args.slope)}
    return inputs, {"characterizing": ok, "bound": bound, "boundary": boundary}, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surgerylab",
        description="Dehn surgery arithmetic, exceptional-surgery gates and changemaker lattice search.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify p/q surgery on a torus knot")
    p.add_argument("--torus", type=_torus, required=True, metavar="R,S")
    p.add_argument("--slope", type=_slope, required=True, metavar="P[/Q]")

    p = sub.add_parser("gate", help="exceptional-surgery gate for a hyperbolic fibered knot")
    p.add_argument("--genus", type=_positive, required=True)
    p.add_argument("--monodromy", choices=sorted(_MONODROMY), required=True)
    p.add_argument("--slope", type=_slope, required=True, metavar="P[/Q]")
    p.add_argument(
        "--lspace-smallsfs",
        action="store_true",
        help="the surgered manifold is a small Seifert fibered L-space",
    )

    p = sub.add_parser("realize", help="changemaker search for lens space surgeries")
    p.add_argument("--n", type=_positive, help="search L(4n+1,4) realizations")
    p.add_argument("--p", type=_positive)
    p.add_argument("--q", type=_positive)

    p = sub.add_parser("alexander", help="Alexander polynomial from a changemaker vector")
    p.add_argument("--sigma", type=_sigma, required=True, metavar="S0,S1,...")
    p.add_argument("--p", type=_positive, required=True)

    p = sub.add_parser("charslope", help="characterizing-slope bound for a torus knot")
    p.add_argument("--torus", type=_torus, required=True, metavar="R,S")
    p.add_argument("--slope", type=_slope, required=True, metavar="P[/Q]")

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="emit a single JSON object")
        sp.set_defaults(subparser=sp)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    sub = args.subparser
    handlers = {
        "classify": lambda: _cmd_classify(args),
        "gate": lambda: _cmd_gate(args),
        "realize": lambda: _cmd_realize(args, sub),
        "alexander": lambda: _cmd_alexander(args, sub),
        "charslope": lambda: _cmd_charslope(args),
    }
    try:
        inputs, result, text = handlers[args.command]()
    except AssertionError as exc:
        print(f"surgerylab: internal check failed: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "version": __version__,
        }
        print(json.dumps(envelope, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
