# -*- coding: utf-8 -*-

"""
pte command line

    pte verify --cap 6 < solution.txt
    pte family Deg7 --params n=2
    pte prove all
    pte ec --multiple 2 --deg7
    pte fermat --coeffs 765,0,-8226,0,19125 --start 1 --steps 3
    pte search --k 3 --bound 12 --jobs 4
"""

import argparse
import json
import logging
import sys

import tarryescott.config.constants as const
import tarryescott.config.formulas as formulas
from tarryescott import elliptic, families, fermat, poly, search
from tarryescott.config.parse import (
    parse_coefficients,
    parse_integer,
    parse_pair,
    parse_params,
    parse_rational,
)
from tarryescott.core import (
    classify_symmetry,
    format_solution,
    read_solutions,
    reduce,
    verify_degree,
)
from tarryescott.shift import shift_chain
from tarryescott.utils import Error, IdentityFails

logger = logging.getLogger(__name__)


def _read(args):
    if args.infile is None:
        return read_solutions(sys.stdin)
    with open(args.infile) as f:
        return read_solutions(f)


def _emit(sol, args):
    print(format_solution(sol, as_json=getattr(args, "json", False)))


# ------------------
# Subcommands
# ------------------


def cmd_verify(args):
    code = const.EXIT_OK
    for sol in _read(args):
        report = verify_degree(sol, args.cap)
        if args.json:
            print(
                json.dumps(
                    {
                        "holds": {str(r): ok for r, ok in report.per_exponent},
                        "max_degree": report.max_degree,
                    }
                )
            )
        else:
            print(report.to_frame().to_string())
            print("max_degree={0}".format(report.max_degree))
        if report.max_degree < sol.degree:
            code = const.EXIT_FAILED
    return code


def cmd_reduce(args):
    for sol in _read(args):
        _emit(reduce(sol), args)
    return const.EXIT_OK


def cmd_classify(args):
    for sol in _read(args):
        print(classify_symmetry(sol))
    return const.EXIT_OK


def cmd_shift(args):
    hs = [parse_integer(h) for h in args.h]
    for sol in _read(args):
        _emit(shift_chain(sol, hs), args)
    return const.EXIT_OK


def cmd_family(args):
    params = parse_params(args.params)
    kwargs = {}
    if args.cancel is not None:
        if args.family_id != families.FamilyId.Deg4B.value:
            raise ValueError("--cancel only applies to Deg4B")
        kwargs["cancel"] = parse_pair(args.cancel)
    _emit(families.generate(args.family_id, params, **kwargs), args)
    return const.EXIT_OK


def cmd_prove(args):
    ids = formulas.family_ids() if args.family_id == "all" else [args.family_id]
    code = const.EXIT_OK
    for family_id in ids:
        try:
            report = poly.verify_identity_family(family_id)
        except IdentityFails as e:
            print("{0}: fails at r={1}".format(family_id, e.r))
            print(e.message, file=sys.stderr)
            code = const.EXIT_FAILED
            continue
        extra = ", products" if report.products else ""
        print(
            "{0}: identity in {1} for r=1..{2}{3}".format(
                family_id, ",".join(report.variables), len(report.exponents), extra
            )
        )
    return code


def cmd_ec(args):
    pt = elliptic.multiple(args.multiple)
    if pt.is_infinity:
        raise ValueError("{0}P is the point at infinity".format(args.multiple))
    qp = elliptic.weierstrass_to_quartic(pt)

    if args.deg5:
        _emit(elliptic.point_to_deg5(qp), args)
    elif args.deg7:
        _emit(elliptic.point_to_deg7(qp), args)
    else:
        print("X={0} Y={1}".format(pt.x, pt.y))
        print("U={0} V={1}".format(qp.u, qp.v))
    return const.EXIT_OK


def cmd_fermat(args):
    f = fermat.QuarticForm(*parse_coefficients(args.coeffs, count=5))
    t0 = parse_rational(args.start)
    known = parse_coefficients(args.known) if args.known else []
    for point in fermat.ascend(f, t0, args.steps, known=known):
        print("t={0} root={1}".format(point.t, point.root))
    return const.EXIT_OK


def cmd_search(args):
    for sol in search.brute_force_ideal(args.k, args.s, args.bound, jobs=args.jobs):
        print(format_solution(sol, as_json=True))
    return const.EXIT_OK


# ------------------
# Parser
# ------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pte", description="Exact tools for the Tarry-Escott problem"
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--in", dest="infile", default=None, help="read solutions from file")
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    p = with_input(sub.add_parser("verify", help="check power sums"))
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = with_input(sub.add_parser("reduce", help="reduced canonical form"))
    p.set_defaults(func=cmd_reduce)

    p = with_input(sub.add_parser("classify", help="symmetry class"))
    p.set_defaults(func=cmd_classify)

    p = with_input(sub.add_parser("shift", help="Tarry shifts"))
    p.add_argument("--h", action="append", required=True, help="shift, repeat for a chain")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("family", help="generate a parametric solution")
    p.add_argument("family_id", choices=formulas.family_ids())
    p.add_argument("--params", default="")
    p.add_argument("--cancel", default=None, help="i,j pair for Deg4B")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("prove", help="prove a family as a polynomial identity")
    p.add_argument("family_id", choices=formulas.family_ids() + ["all"])
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("ec", help="solutions from multiples of the curve generator")
    p.add_argument("--multiple", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--deg5", action="store_true")
    group.add_argument("--deg7", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ec)

    p = sub.add_parser("fermat", help="square points of a quartic")
    p.add_argument("--coeffs", required=True, help="c0,c1,c2,c3,c4")
    p.add_argument("--start", required=True)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--known", default=None, help="other square points t1,t2,...")
    p.set_defaults(func=cmd_fermat)

    p = sub.add_parser("search", help="brute force ideal solutions")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return const.EXIT_USAGE if e.code else const.EXIT_OK

    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format="%(name)s %(levelname)s: %(message)s")

    try:
        return args.func(args)
    except Error as e:
        print("{0}: {1}".format(type(e).__name__, e.message), file=sys.stderr)
        return const.EXIT_DOMAIN
    except (ValueError, OSError) as e:
        print("error: {0}".format(e), file=sys.stderr)
        return const.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
