"""Command-line front end.

Usage examples::

    polyproj minrep system.poly --order x3,x1,x2
    polyproj project system.poly --eliminate 2
    polyproj project system.ine --eliminate x1,x4 --to ine
    polyproj extreme-rays system.poly
    polyproj check-redundant system.poly --inequality "x + y <= 3"
    polyproj plp problem.poly --params theta1,theta2 --objective="-2*x1 - x2"
    polyproj gen cyclic 5 10 | polyproj minrep
    polyproj convert system.poly --to ine

Exit status: 0 on success, 1 for an infeasible input, 2 for bad input
(parse errors, non-pointed systems, other violated preconditions).
Diagnostics go to stderr and are controlled by ``POLYPROJ_LOG``.
"""

import argparse
import logging
import os
import sys

from polyproj import __version__
from polyproj.balas import initial_test_cone, is_implied, redundancy_test
from polyproj.dd import dd_method
from polyproj.errors import (DimensionMismatch, PolyprojError, PreconditionError,
                             TriviallyInfeasible, Unbounded)
from polyproj.formats import emit_system, parse_inequality, parse_linear, parse_system
from polyproj.linalg import format_rat
from polyproj.minrep import (check_feasible, prepare_system, extract_projection,
                             minimal_projected_representation)
from polyproj.plp import PlpProblem, solve_plp
from polyproj.polyhedron import homogenize
from polyproj.testkit import gen_cyclic, gen_random, gen_simplex

log = logging.getLogger("polyproj")

_LEVELS = {"quiet": logging.CRITICAL + 1, "info": logging.INFO, "debug": logging.DEBUG}


def _setup_logging():
    name = os.environ.get("POLYPROJ_LOG", "quiet").lower()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root = logging.getLogger("polyproj")
    root.handlers[:] = [handler]
    root.setLevel(_LEVELS.get(name, _LEVELS["quiet"]))
    root.propagate = False


def _names(text):
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _read(args):
    path = args.input
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    fmt = args.format
    if fmt is None:
        fmt = "ine" if path and path.endswith(".ine") else "poly"
    return parse_system(text, fmt)


def _write(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _order(s, spec):
    if spec is None:
        return None
    order = _names(spec)
    if sorted(order) != sorted(s.var_names) or len(order) != s.n:
        raise DimensionMismatch(f"--order must be a permutation of {', '.join(s.var_names)}")
    return order


def cmd_minrep(args):
    s = _read(args)
    pr = minimal_projected_representation(s, _order(s, args.order))
    n = len(pr.order)
    out = ["vars " + " ".join(pr.order)]
    for k in range(n):
        head = "input" if k == 0 else f"eliminated {pr.order[k - 1]}"
        out.append(f"# level {k} ({head})")
        for q in pr.levels[k].ineqs:
            out.append(" ".join(format_rat(x) for x in (0,) * k + q.row))
    _write(args, "\n".join(out) + "\n")


def cmd_project(args):
    s = _read(args)
    spec = args.eliminate
    if spec.strip().lstrip("-").isdigit():
        k = int(spec)
        order = _order(s, args.order)
    else:
        block = _names(spec)
        unknown = [v for v in block if v not in s.var_names]
        if unknown or len(set(block)) != len(block):
            raise DimensionMismatch(f"cannot eliminate {', '.join(unknown or block)}")
        k = len(block)
        order = block + tuple(v for v in s.var_names if v not in block)
    pr = minimal_projected_representation(s, order)
    _write(args, emit_system(extract_projection(pr, k), args.to or "poly"))


def cmd_extreme_rays(args):
    s = _read(args)
    cone = s if s.is_cone else homogenize(s).base
    out = [] if s.is_cone else ["# rays of the homogenized cone over " + " ".join(cone.var_names)]
    out += [" ".join(format_rat(x) for x in r) for r in dd_method(cone).rays]
    _write(args, "".join(line + "\n" for line in out))


def cmd_check_redundant(args):
    s = prepare_system(_read(args))
    ineq = parse_inequality(args.inequality, s.var_names)
    if ineq.is_trivial:
        verdict = "redundant" if ineq.rhs >= 0 else "irredundant"
    else:
        tc = initial_test_cone(s)
        check_feasible(tc)
        if ineq in set(s.ineqs):
            verdict = "redundant" if redundancy_test(tc, ineq, check=False) else "irredundant"
        else:
            verdict = "redundant" if is_implied(tc, ineq) else "irredundant"
    _write(args, verdict + "\n")


def cmd_plp(args):
    s = _read(args)
    params = _names(args.params)
    missing = [p for p in params if p not in s.var_names]
    if missing:
        raise DimensionMismatch(f"unknown parameters: {', '.join(missing)}")
    xs = tuple(v for v in s.var_names if v not in params)
    coeffs, const = parse_linear(args.objective, s.var_names)
    if const:
        raise PreconditionError("the objective must be linear (no constant term)")
    if any(coeffs[s.var_names.index(p)] for p in params):
        raise PreconditionError("the objective may only involve decision variables")
    xi = [s.var_names.index(v) for v in xs]
    ti = [s.var_names.index(v) for v in params]
    A = [[q.coeffs[i] for i in xi] for q in s.ineqs]
    B = [[-q.coeffs[i] for i in ti] for q in s.ineqs]
    b = [q.rhs for q in s.ineqs]
    problem = PlpProblem(A, B, b, [coeffs[i] for i in xi], xs, params)
    try:
        sol = solve_plp(problem)
    except Unbounded:
        _write(args, "unbounded\n")
        return
    out = []
    for piece in sol.pieces:
        out.append("region:")
        out += ["  " + q.format(params) for q in piece.region.ineqs]
        out.append("value: " + piece.value.format(params))
    _write(args, "\n".join(out) + "\n")


def cmd_gen(args):
    if args.kind == "simplex":
        s = gen_simplex(args.dims[0])
    elif args.kind == "cyclic":
        s = gen_cyclic(*args.dims)
    else:
        n, m = args.dims
        s = gen_random(n, m, args.bits, args.seed)
    _write(args, emit_system(s, args.to or "poly"))


def cmd_convert(args):
    _write(args, emit_system(_read(args), args.to))


def _gen_dims(parser, args):
    need = {"simplex": 1, "cyclic": 2, "random": 2}[args.kind]
    if len(args.dims) != need:
        parser.error(f"gen {args.kind} takes {need} integer argument(s)")


def build_parser():
    p = argparse.ArgumentParser(
        prog="polyproj",
        description="Exact minimal projections of polyhedra {y | A y <= c}.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def with_input(sp):
        sp.add_argument("input", nargs="?", default="-",
                        help="input file (default: stdin)")
        sp.add_argument("--format", choices=["poly", "ine"],
                        help="input format (default: by extension, else poly)")
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    sp = with_input(sub.add_parser("minrep", help="minimal projected representation"))
    sp.add_argument("--order", help="elimination order, comma separated")
    sp.set_defaults(func=cmd_minrep)

    sp = with_input(sub.add_parser("project", help="minimal representation of a projection"))
    sp.add_argument("--eliminate", required=True,
                    help="number of leading variables, or a comma separated list")
    sp.add_argument("--order", help="elimination order when --eliminate is a count")
    sp.add_argument("--to", choices=["poly", "ine"], help="output format")
    sp.set_defaults(func=cmd_project)

    sp = with_input(sub.add_parser("extreme-rays", help="extreme rays by double description"))
    sp.set_defaults(func=cmd_extreme_rays)

    sp = with_input(sub.add_parser("check-redundant",
                                   help="is an inequality redundant for the system"))
    sp.add_argument("--inequality", required=True, help='e.g. "x + 2*y <= 3"')
    sp.set_defaults(func=cmd_check_redundant)

    sp = with_input(sub.add_parser("plp", help="parametric LP: min c.x s.t. the system"))
    sp.add_argument("--params", required=True, help="parameter variables, comma separated")
    sp.add_argument("--objective", required=True, help='linear objective, e.g. "-2*x1 - x2"')
    sp.set_defaults(func=cmd_plp)

    sp = sub.add_parser("gen", help="write a generated instance")
    sp.add_argument("kind", choices=["simplex", "cyclic", "random"])
    sp.add_argument("dims", type=int, nargs="+",
                    help="simplex N | cyclic D V | random N M")
    sp.add_argument("--bits", type=int, default=8, help="random: coefficient bits")
    sp.add_argument("--seed", type=int, default=0, help="random: seed")
    sp.add_argument("--to", choices=["poly", "ine"], help="output format")
    sp.add_argument("-o", "--output", help="write to this file instead of stdout")
    sp.set_defaults(func=cmd_gen)

    sp = with_input(sub.add_parser("convert", help="transcode between poly and ine"))
    sp.add_argument("--to", required=True, choices=["poly", "ine"])
    sp.set_defaults(func=cmd_convert)
    return p


def main(argv=None):
    _setup_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        _gen_dims(parser, args)
    try:
        args.func(args)
    except TriviallyInfeasible as exc:
        print(f"polyproj: infeasible: {exc}", file=sys.stderr)
        return 1
    except (PreconditionError, ValueError) as exc:
        print(f"polyproj: error: {exc}", file=sys.stderr)
        return 2
    except PolyprojError as exc:
        print(f"polyproj: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"polyproj: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
