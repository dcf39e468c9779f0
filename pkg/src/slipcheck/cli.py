"""Command-line interface: JSON documents in, deterministic JSON reports out.

Exit codes: 0 success, 1 input error, 2 computation limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import jsonschema

from .algebra import ParseError, PolyRing, RingMismatchError, parse_polynomial
from .apolarity import (
    QUARTIC_CASES,
    annihilator_generators,
    cactus_bound_certificate,
    catalecticant,
    concise_cubic,
    dual_ring,
    hessian_det,
    is_apolar,
    is_concise,
    quartic_case_family,
)
from .groebner import ComputationLimitExceeded, NonHomogeneousError, ideal_member, initial_ideal, set_limits
from .hom import hom_graded_dim
from .ideals import (
    Ideal,
    NotZeroDimensionalError,
    hilbert_function,
    hilbert_stabilization,
    hilbert_table,
    ideal_colon,
    ideal_intersection,
    ideal_power,
    saturate_irrelevant,
)
from .orders import MonomialOrder
from .slip import HilbertMismatchError, family_jik, paper_examples, slip_verdict
from .staircase import staircase_from_ideal

IDEAL_SCHEMA = {
    "type": "object",
    "required": ["ring", "generators"],
    "properties": {
        "ring": {
            "type": "object",
            "required": ["variables"],
            "properties": {"variables": {"type": "array", "items": {"type": "string"}, "minItems": 1}},
        },
        "generators": {"type": "array", "items": {"type": "string"}},
    },
}


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors: exit 1, keeping 2 for computation limits."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dumps(report) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2)


def load_ideal(path: str) -> Ideal:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read ideal document {path!r}: {exc}") from None
    try:
        jsonschema.validate(doc, IDEAL_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise InputError(f"ideal document {path!r}: {exc.message}") from None
    return Ideal.from_json(doc)


def _order(args, ring: PolyRing) -> MonomialOrder | None:
    return MonomialOrder.parse(args.order, ring) if getattr(args, "order", None) else None


def _dual_poly(text: str, nvars: int | None):
    if nvars is None:
        idx = [int(tok[1:]) for tok in text.replace("*", " ").replace("+", " ").replace("-", " ").replace("^", " ").split() if tok.startswith("x") and tok[1:].isdigit()]
        nvars = max(idx, default=0) + 1
    return parse_polynomial(text, dual_ring(nvars))


# -- handlers ----------------------------------------------------------------


def cmd_hf(args):
    I = load_ideal(args.ideal)
    if args.power > 1:
        I = ideal_power(I, args.power)
    if args.upto is not None:
        return {"table": str(hilbert_table(I, args.upto)), "values": list(hilbert_table(I, args.upto).values)}
    return {"degree": args.degree, "value": hilbert_function(I, args.degree)}


def cmd_hp(args):
    I = load_ideal(args.ideal)
    if args.power > 1:
        I = ideal_power(I, args.power)
    hp, start = hilbert_stabilization(I)
    return {"hilbert_polynomial": hp, "stable_from": start}


def cmd_sat(args):
    return saturate_irrelevant(load_ideal(args.ideal)).to_json()


def cmd_colon(args):
    I = load_ideal(args.ideal)
    if args.by_ideal:
        return ideal_colon(I, load_ideal(args.by_ideal)).to_json()
    if not args.by:
        raise InputError("colon needs --by POLY or --by-ideal FILE")
    return ideal_colon(I, parse_polynomial(args.by, I.ring)).to_json()


def cmd_intersect(args):
    return ideal_intersection(load_ideal(args.first), load_ideal(args.second)).to_json()


def cmd_power(args):
    return ideal_power(load_ideal(args.ideal), args.k).to_json()


def cmd_gb(args):
    I = load_ideal(args.ideal)
    order = _order(args, I.ring) or I.default_order
    gb = I.groebner(order)
    return {"order": order.spec(I.ring), "reduced": True, "elements": [str(g) for g in gb.elements]}


def cmd_initial(args):
    I = load_ideal(args.ideal)
    order = _order(args, I.ring) or I.default_order
    return initial_ideal(I, order).to_json()


def cmd_member(args):
    I = load_ideal(args.ideal)
    f = parse_polynomial(args.poly, I.ring)
    return {"polynomial": str(f), "member": ideal_member(f, I, _order(args, I.ring))}


def cmd_staircase(args):
    diag = staircase_from_ideal(load_ideal(args.ideal))
    out = diag.to_json()
    out["render"] = diag.render().split("\n")
    return out


def cmd_tangent(args):
    I = load_ideal(args.ideal)
    target = load_ideal(args.target) if args.target else None
    return hom_graded_dim(I, args.degree, args.truncation, target).to_json()


def cmd_apolar(args):
    sub = args.apolar_command
    if sub == "concise" and not args.poly:
        F = concise_cubic()
    elif sub == "quartic-case":
        F, J = quartic_case_family(args.case, Fraction(args.a), Fraction(args.b), args.Q)
        return {"case": args.case, "F": str(F), "J": J.to_json(), "apolar": is_apolar(J, F)}
    else:
        if not args.poly:
            raise InputError("--poly is required")
        F = _dual_poly(args.poly, args.nvars)
    if sub == "ann":
        ann = annihilator_generators(F)
        return {"polynomial": str(F), "annihilator": ann.to_json()}
    if sub == "concise":
        return {"polynomial": str(F), "concise": is_concise(F), "rank_1": catalecticant(F, 1)[0]}
    if sub == "hessian":
        return {"polynomial": str(F), "hessian_det": str(hessian_det(F))}
    if sub == "certify":
        if not args.ideal or args.r is None:
            raise InputError("certify needs --ideal FILE and --r")
        I = load_ideal(args.ideal)
        if I.ring.nvars != F.ring.nvars:
            raise InputError("ideal and polynomial have different variable counts")
        return cactus_bound_certificate(I, F, args.r).to_json()
    raise InputError(f"unknown apolar command {sub}")


def cmd_slip(args):
    I = load_ideal(args.ideal)
    return slip_verdict(I, args.r, args.kmax, args.window, exhaustive=args.exhaustive).to_json()


def cmd_family(args):
    J, I, K = family_jik(args.r, args.d, args.e)
    return {"J": J.to_json(), "I": I.to_json(), "K": K.to_json()}


def cmd_examples(args):
    return {name: I.to_json() for name, I in paper_examples().items()}


def cmd_verify(args):
    from .regression import verify_paper

    return verify_paper(args.seed, args.samples)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="slipcheck", description=__doc__.splitlines()[0])
    p.add_argument("--max-basis", type=int, help="cap on Groebner basis size (env SLIPCHECK_MAX_BASIS)")
    p.add_argument("--max-degree", type=int, help="cap on degrees and truncations (env SLIPCHECK_MAX_DEGREE)")
    sub = p.add_subparsers(dest="command", required=True)

    def with_ideal(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("ideal", help="ideal JSON document, '-' for stdin")
        return sp

    sp = with_ideal("hf", "Hilbert function of S/I")
    sp.add_argument("--degree", type=int, default=0)
    sp.add_argument("--upto", type=int, help="table for degrees 0..UPTO instead")
    sp.add_argument("--power", type=int, default=1, help="use I^POWER")
    sp.set_defaults(func=cmd_hf)

    sp = with_ideal("hp", "constant Hilbert polynomial and stabilization degree")
    sp.add_argument("--power", type=int, default=1)
    sp.set_defaults(func=cmd_hp)

    with_ideal("sat", "saturation by the irrelevant ideal").set_defaults(func=cmd_sat)

    sp = with_ideal("colon", "colon ideal")
    sp.add_argument("--by", help="homogeneous polynomial")
    sp.add_argument("--by-ideal", help="ideal JSON document")
    sp.set_defaults(func=cmd_colon)

    sp = sub.add_parser("intersect", help="intersection of two ideals")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_intersect)

    sp = with_ideal("power", "k-th power")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_power)

    for name, fn in (("gb", cmd_gb), ("initial", cmd_initial)):
        sp = with_ideal(name, "reduced Groebner basis" if name == "gb" else "initial ideal")
        sp.add_argument("--order", help="e.g. lex:a0,a1,a2 or wlex:1,2,2/a0,a1,a2")
        sp.set_defaults(func=fn)

    sp = with_ideal("member", "ideal membership")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--order")
    sp.set_defaults(func=cmd_member)

    with_ideal("staircase", "staircase diagram of a two-variable monomial ideal").set_defaults(func=cmd_staircase)

    sp = with_ideal("tangent", "dimension of Hom(I, S/I)_d")
    sp.add_argument("--degree", type=int, default=0)
    sp.add_argument("--truncation", type=int, help="fixed truncation degree instead of the automatic one")
    sp.add_argument("--target", help="ideal J for Hom(I, S/J)")
    sp.set_defaults(func=cmd_tangent)

    sp = sub.add_parser("apolar", help="apolarity tools")
    asub = sp.add_subparsers(dest="apolar_command", required=True)
    for name in ("ann", "concise", "hessian", "certify"):
        ap = asub.add_parser(name)
        ap.add_argument("--poly", help="dual polynomial in x0..xn")
        ap.add_argument("--nvars", type=int, help="number of dual variables (default: highest index used + 1)")
        if name == "certify":
            ap.add_argument("--ideal", help="ideal JSON document over a0..an")
            ap.add_argument("--r", type=int)
        ap.set_defaults(func=cmd_apolar)
    ap = asub.add_parser("quartic-case")
    ap.add_argument("--case", choices=QUARTIC_CASES, required=True)
    ap.add_argument("--a", default="0")
    ap.add_argument("--b", default="0")
    ap.add_argument("--Q", default=None, help="binary quartic in x2, x3")
    ap.set_defaults(func=cmd_apolar)

    sp = with_ideal("slip", "three-valued membership verdict")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--window", type=int, default=2)
    sp.add_argument("--exhaustive", action="store_true", help="run every check and fail on contradictions")
    sp.set_defaults(func=cmd_slip)

    sp = sub.add_parser("family", help="ideals J, I, K of a one-degree deviation")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--e", type=int, required=True)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("examples", help="built-in example ideals")
    sp.add_argument("--paper", action="store_true", help="accepted for compatibility; all examples are built in")
    sp.set_defaults(func=cmd_examples)

    sp = sub.add_parser("verify-paper", help="run the built-in regression suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=5)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    previous = set_limits(args.max_basis, args.max_degree)
    try:
        report = args.func(args)
    except ComputationLimitExceeded as exc:
        print(dumps({"error": "limit_exceeded", "message": str(exc)}), file=sys.stderr)
        return 2
    except (InputError, ParseError, RingMismatchError, NonHomogeneousError, NotZeroDimensionalError, HilbertMismatchError, ValueError) as exc:
        print(dumps({"error": "input", "message": str(exc)}), file=sys.stderr)
        return 1
    finally:
        set_limits(previous.max_basis, previous.max_degree)
    print(dumps(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
