"""Command line front end.

Subcommands:
  bs3 milnor --poly P [--weights w1,w2,w3]
  bs3 roots isolated|lqh --poly P [--weights ...] [--lct-lambda p/q]
  bs3 arrangement --forms "l1,l2,..."

Reports are emitted as deterministic text (default) or JSON mirroring the
same fields; rationals print as reduced p/q strings.  Exit codes: 0 success,
1 parse or usage error, 2 mathematical precondition violated, 3 resource
limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import arrangement as arr_mod
from . import bsroots, milnor
from .groebner import ResourceLimitError
from .milnor import INFINITE
from .polyring import (ParseError, PreconditionError, WeightSystem,
                       format_rational, parse_polynomial)

GENERAL_ASSERTIONS = [
    "reduced: asserted by caller, not verified",
    "locally quasi-homogeneous: asserted by caller, not verified",
]
ARRANGEMENT_ASSERTIONS = [
    "reduced: verified (pairwise distinct normalized forms)",
    "central: by construction (homogeneous linear forms)",
    "essential, indecomposable: verified",
    "locally quasi-homogeneous: automatic for hyperplane arrangements",
]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(prog="bs3", description=(
        "Bernstein-Sato zero sets of quasi-homogeneous polynomials and "
        "line arrangements in three variables, over exact rationals."))
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, poly=True):
        if poly:
            p.add_argument("--poly", required=True,
                           help="polynomial in x,y,z (aliases x1,x2,x3)")
            p.add_argument("--weights", default="1,1,1",
                           help="comma-separated positive rational weights")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--step-cap", type=int, default=None,
                       help="reduction step cap for basis computations")

    p_milnor = sub.add_parser("milnor", help="Milnor/H0 degree data and the "
                              "b-function of the logarithmic module")
    common(p_milnor)

    p_roots = sub.add_parser("roots", help="Bernstein-Sato root sets")
    p_roots.add_argument("kind", choices=["isolated", "lqh"])
    common(p_roots)
    p_roots.add_argument("--lct-lambda", default=None, metavar="p/q",
                         help="evaluate the twisted comparison test at this "
                         "lambda <= 0")

    p_arr = sub.add_parser("arrangement", help="full zero set for a central "
                           "essential indecomposable arrangement")
    p_arr.add_argument("--forms", required=True,
                       help="comma-separated linear forms, e.g. x,y,z,x+y+z")
    common(p_arr, poly=False)
    return parser


def _parse_weights(text):
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError("expected three comma-separated weights", 0)
    try:
        values = [Fraction(p.strip()) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise ParseError("malformed weight in %r" % text, 0)
    return WeightSystem(values)


def _parse_rational(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError("malformed rational %r" % text, 0)


def _roots(root_set):
    return [format_rational(r) for r in root_set]


def _degree_table(data):
    return {format_rational(q): dim for q, dim in
            sorted(data.entries.items())}


def _profile_fields(prof):
    fields = {
        "wdeg": format_rational(prof.wdeg_f),
        "is_isolated": prof.is_isolated,
        "h0": _degree_table(prof.h0),
    }
    if prof.milnor_algebra_degrees == INFINITE:
        fields["milnor_algebra_degrees"] = INFINITE
    else:
        fields["milnor_algebra_degrees"] = _degree_table(
            prof.milnor_algebra_degrees)
        fields["milnor_number"] = prof.milnor_algebra_degrees.total_dimension()
    return fields


def cmd_milnor(args):
    w = _parse_weights(args.weights)
    f = parse_polynomial(args.poly)
    prof = milnor.milnor_profile(f, w, args.step_cap)
    report = {
        "command": "milnor",
        "poly": str(f),
        "weights": args.weights.replace(" ", ""),
    }
    report.update(_profile_fields(prof))
    report["new_roots"] = _roots(bsroots.new_roots(prof))
    report["blf_roots"] = _roots(bsroots.blf_roots(prof))
    report["assertions"] = list(GENERAL_ASSERTIONS)
    return report


def cmd_roots(args):
    w = _parse_weights(args.weights)
    f = parse_polynomial(args.poly)
    prof = milnor.milnor_profile(f, w, args.step_cap)
    report = {
        "command": "roots %s" % args.kind,
        "poly": str(f),
        "weights": args.weights.replace(" ", ""),
        "wdeg": format_rational(prof.wdeg_f),
    }
    if args.kind == "isolated":
        report["is_isolated"] = prof.is_isolated
        report["roots"] = _roots(bsroots.roots_isolated(prof))
    else:
        report["h0"] = _degree_table(prof.h0)
        report["new_roots"] = _roots(bsroots.new_roots(prof))
        report["blf_roots"] = _roots(bsroots.blf_roots(prof))
        report["small_roots"] = _roots(bsroots.small_roots(prof))
        report["xi_set"] = _roots(bsroots.xi_set(prof).xi_set)
        if w.weights == (1, 1, 1) and not prof.h0.is_empty():
            tax = bsroots.homogeneous_taxonomy(prof, bsroots.RootSet())
            report["tau"] = tax.tau
            report["upsilon"] = _roots(tax.upsilon)
    if args.lct_lambda is not None:
        lam = _parse_rational(args.lct_lambda)
        report["tlct_lambda"] = format_rational(lam)
        report["tlct_holds"] = bsroots.tlct_holds(prof, lam)
    report["assertions"] = list(GENERAL_ASSERTIONS)
    return report


def _point_str(sp):
    coords = ":".join(format_rational(c) for c in sp.point)
    return "(%s) multiplicity %d" % (coords, sp.multiplicity)


def cmd_arrangement(args):
    forms = [s for s in args.forms.split(",")]
    arr = arr_mod.validate(forms)
    rep = arr_mod.full_root_report(arr, args.step_cap)
    prof = arr_mod.arrangement_profile(arr, args.step_cap)
    report = {
        "command": "arrangement",
        "forms": [str(f) for f in arr.forms],
        "degree": arr.degree,
        "weights": "1,1,1",
        "singular_points": [_point_str(sp) for sp in rep.singular_points],
        "h0": _degree_table(prof.h0),
        "comb_roots": _roots(rep.comb_roots),
        "non_comb_root": format_rational(rep.non_comb_root),
        "non_comb_present": rep.non_comb_present,
        "full_zero_set": _roots(rep.full_zero_set),
        "conditions": rep.conditions.flags(),
        "conditions_consistent": rep.conditions.consistent,
        "witness_dims": dict(rep.conditions.witness_dims),
        "formal": arr_mod.is_formal(arr),
        "assertions": list(ARRANGEMENT_ASSERTIONS),
    }
    return report


def _scalar(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_text(report):
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            if not value:
                lines.append("%s: (none)" % key)
            for sub, v in value.items():
                lines.append("%s.%s: %s" % (key, sub, _scalar(v)))
        elif isinstance(value, list):
            items = [_scalar(v) for v in value]
            if any("," in item for item in items):
                for i, item in enumerate(items):
                    lines.append("%s[%d]: %s" % (key, i, item))
            else:
                lines.append("%s: %s" % (key, ", ".join(items) or "(none)"))
        else:
            lines.append("%s: %s" % (key, _scalar(value)))
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    started = time.monotonic()
    try:
        if args.command == "milnor":
            report = cmd_milnor(args)
        elif args.command == "roots":
            report = cmd_roots(args)
        else:
            report = cmd_arrangement(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print("precondition violated: %s" % exc, file=sys.stderr)
        return 2
    report["timing_ms"] = int((time.monotonic() - started) * 1000)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(render_text(report), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
