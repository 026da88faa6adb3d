"""Command-line front end.

Exit status: 0 on success, 1 on parse or domain errors, 2 on usage errors
(including unreadable input files).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import RecRelError
from .measure import load_measure, format_measure, moment, moment_matrix, monomial_basis, parse_rational, vandermonde
from .poly import GRLEX, LEX, MonomialOrder, buchberger, parse_polynomial, reduce_basis
from .relations import (
    extend_moment_matrix,
    extension_matrix,
    groebner_of_relations,
    recursive_relations,
    verify_relation,
)
from .shift import approx_weight, commutativity_check, weights_from_measure
from .variety import measure_from_points, positivity_screen, solve_variety


class UsageError(Exception):
    pass


def _order(args, default: MonomialOrder) -> MonomialOrder:
    return MonomialOrder.parse(args.order) if args.order else default


def _measure(args):
    if not args.measure:
        raise UsageError("--measure is required")
    try:
        return load_measure(args.measure, normalize=args.normalize)
    except OSError as exc:
        raise UsageError(f"cannot read {args.measure}: {exc.strerror or exc}") from None


def _degree(args):
    if args.degree is None:
        raise UsageError("--degree is required")
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    return args.degree


def cmd_moments(args, out):
    mu = _measure(args)
    for m in monomial_basis(_degree(args)):
        out.write(f"{m.ex} {m.ey} {moment(mu, m)}\n")


def cmd_matrix(args, out):
    M = moment_matrix(_measure(args), _degree(args))
    out.write(M.to_text() + "\n")


def cmd_vandermonde(args, out):
    V = vandermonde(_measure(args), _degree(args))
    out.write(V.to_text() + "\n")


def cmd_relations(args, out):
    order = _order(args, GRLEX)
    for p in recursive_relations(_measure(args), _degree(args)):
        out.write(p.primitive(order).to_str(order) + "\n")


def cmd_groebner(args, out):
    order = _order(args, LEX)
    G = groebner_of_relations(_measure(args), order)
    for line in G.to_lines():
        out.write(line + "\n")


def cmd_variety(args, out):
    if args.poly:
        G = reduce_basis(buchberger([parse_polynomial(s) for s in args.poly], LEX))
    else:
        G = groebner_of_relations(_measure(args), LEX)
    points = solve_variety(G)
    if args.densities:
        dens = [parse_rational(tok.strip()) for tok in args.densities.split(",")]
        out.write(format_measure(measure_from_points(points, dens, normalize=args.normalize)))
        return
    for x, y in points:
        out.write(f"{x} {y}\n")
    out.write(f"# positive quadrant: {'yes' if positivity_screen(points) else 'no'}\n")


def cmd_verify(args, out):
    if not args.poly or len(args.poly) != 1:
        raise UsageError("verify needs exactly one --poly")
    p = parse_polynomial(args.poly[0])
    ok = verify_relation(_measure(args), _degree(args), p)
    out.write(f"RELATION: {'yes' if ok else 'no'}\n")


def cmd_extend(args, out):
    mu = _measure(args)
    k = _degree(args)
    ext = extension_matrix(recursive_relations(mu, k + 1))
    extended = extend_moment_matrix(moment_matrix(mu, k), ext)
    out.write("# C\n" + ext.C.to_text() + "\n")
    out.write(f"# M({k + 1}) from block formula\n" + extended.to_text() + "\n")
    match = extended == moment_matrix(mu, k + 1)
    out.write(f"# matches direct moment matrix: {'yes' if match else 'no'}\n")


def cmd_weights(args, out):
    W = weights_from_measure(_measure(args), _degree(args))
    for name, table in (("alpha_sq", W.alpha_sq), ("beta_sq", W.beta_sq)):
        for k, v in table.items():
            out.write(f"{name} {k.k1} {k.k2} {v}  # ~{approx_weight(v):.12g} (inexact sqrt)\n")
    out.write(f"# commuting: {'yes' if commutativity_check(W) else 'no'}\n")


def cmd_roundtrip(args, out):
    mu = _measure(args)
    G = groebner_of_relations(mu, LEX)
    points = solve_variety(G)
    rebuilt = measure_from_points(points, [Fraction(1, len(points))] * len(points))
    same_atoms = points.as_set() == mu.atom_set()
    same_basis = groebner_of_relations(rebuilt, LEX) == G
    ok = same_atoms and same_basis
    out.write(f"atoms recovered: {len(points)}/{len(mu)}\n")
    out.write(f"{'PASS' if ok else 'FAIL'}\n")
    return 0 if ok else 1


COMMANDS = {
    "moments": (cmd_moments, "moments gamma_(k1,k2) for k1+k2 <= degree"),
    "matrix": (cmd_matrix, "moment matrix M(mu)(degree)"),
    "vandermonde": (cmd_vandermonde, "Vandermonde-like matrix V(mu)(degree)"),
    "relations": (cmd_relations, "recursive relations of degree <= degree"),
    "groebner": (cmd_groebner, "reduced Groebner basis of the ideal of relations"),
    "variety": (cmd_variety, "atoms recovered from the Groebner basis"),
    "verify": (cmd_verify, "check whether --poly is a recursive relation"),
    "extend": (cmd_extend, "extension matrix C and block-extended moment matrix"),
    "weights": (cmd_weights, "squared shift weights up to order degree"),
    "roundtrip": (cmd_roundtrip, "measure -> relations -> basis -> atoms comparison"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="recrel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--measure", metavar="PATH")
        p.add_argument("--degree", type=int)
        p.add_argument("--poly", action="append", help="polynomial; repeat for a basis (variety)")
        p.add_argument("--order", choices=["lex", "grlex"])
        p.add_argument("--normalize", action="store_true", help="divide densities by their sum")
        p.add_argument("--densities", help="comma-separated densities for variety reconstruction")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func = COMMANDS[args.verb][0]
    try:
        code = func(args, out)
    except UsageError as exc:
        err.write(f"recrel {args.verb}: usage error: {exc}\n")
        return 2
    except RecRelError as exc:
        err.write(f"recrel {args.verb}: {type(exc).__name__}: {exc}\n")
        return 1
    return code or 0


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
