"""Command-line front end.

Exit status: 0 success, 1 bad input, 2 a checked invariant failed (which
means a bug, not a property of the input), 64 usage error.
"""

import argparse
import sys

from .bounds import verify_bounds
from .conjecture import explore, search_half_net
from .constructions import (
    ChainedConfig,
    gen_tight_planar_basic,
    gen_tight_planar_extended,
    gen_tight_simplicial,
    verify_construction,
)
from .counting import count_facets, crossing_identity, sweep_count_2d
from .exact import GeometryError, require_general_position
from .fileio import PointFileError, dumps_points, load_points, save_points, to_jsonl, to_table
from .structure import check_structural_optimality, find_half_net_2d, verify_eps_net

OK, BAD_INPUT, VIOLATION, USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


class BadInput(Exception):
    pass


def _load(path, need_dim=None):
    try:
        obj = load_points(path)
    except FileNotFoundError:
        raise BadInput(f"file not found: {path}") from None
    except (OSError, PointFileError, GeometryError) as exc:
        raise BadInput(f"{path}: {exc}") from None
    S = obj.points if isinstance(obj, ChainedConfig) else obj
    if need_dim is not None and S.dim != need_dim:
        raise BadInput(f"{path}: this command needs {need_dim}-dimensional points")
    require_general_position(S)
    return obj, S


def _emit(args, records):
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(to_jsonl(records))
    out = to_jsonl(records) if args.format == "jsonl" else to_table(records)
    sys.stdout.write(out)


def cmd_gen(args):
    try:
        if args.kind == "basic":
            config = gen_tight_planar_basic(_required(args.n, "--n"))
        elif args.kind == "extended":
            config = gen_tight_planar_extended(_required(args.n, "--n"))
        else:
            config = gen_tight_simplicial(_required(args.d, "--d"), _required(args.m, "--m"))
    except ValueError as exc:
        raise BadInput(str(exc)) from None
    if args.output:
        save_points(config, args.output)
        _emit(args, [{"kind": config.kind, "n": config.n, "d": config.d, "file": args.output}])
    else:
        sys.stdout.write(dumps_points(config) + "\n")
    return OK


def _required(value, flag):
    if value is None:
        raise BadInput(f"{flag} is required for this generator")
    return value


def cmd_count(args):
    _, S = _load(args.file)
    fv = sweep_count_2d(S) if args.sweep else count_facets(S)
    top = len(fv.e) - 1 if args.kmax is None else min(args.kmax, len(fv.e) - 1)
    _emit(args, [{"k": k, "e_k": fv.e[k], "E_k": fv.E[k]} for k in range(top + 1)])
    problems = fv.check_invariants()
    for p in problems:
        print(f"invariant violated: {p}", file=sys.stderr)
    return VIOLATION if problems else OK


def cmd_bounds(args):
    _, S = _load(args.file)
    if not 0 <= args.kmax <= S.n - S.dim:
        raise BadInput(f"--kmax must lie in [0, {S.n - S.dim}]")
    report = verify_bounds(S, args.kmax)
    records = []
    for row in report.rows:
        rec = {"k": row.k, "E_k": row.counted}
        rec.update(row.bounds)
        rec.update({"satisfied": row.satisfied, "tight": row.tight, "optimal": row.optimal})
        records.append(rec)
    _emit(args, records)
    return OK if report.satisfied else VIOLATION


def cmd_structure(args):
    _, S = _load(args.file, need_dim=2)
    try:
        rep = check_structural_optimality(S, args.k)
    except GeometryError as exc:
        raise BadInput(str(exc)) from None
    rec = {"k": rep.k, "optimal": rep.optimal, "E": rep.E, "e": rep.e,
           "hull_size": rep.hull_size, "triangular_layers": rep.triangular_layers,
           "needed_layers": rep.required_triangular_layers}
    rec.update(rep.checks)
    _emit(args, [rec])
    return OK if rep.consistent else VIOLATION


def cmd_crossing(args):
    _, S = _load(args.file, need_dim=2)
    if S.n < 4:
        raise BadInput("crossing needs at least 4 points")
    res = crossing_identity(S)
    _emit(args, [{"n": S.n, "lhs": res.lhs, "rhs": res.rhs, "equal": res.equal}])
    return OK if res.equal else VIOLATION


def cmd_halfnet(args):
    _, S = _load(args.file)
    if S.dim == 2:
        net = find_half_net_2d(S)
    else:
        net = search_half_net(S)
    if net is None:
        _emit(args, [{"n": S.n, "d": S.dim, "vertices": None, "verified": False}])
        return OK
    verified = verify_eps_net(S, net.vertices, net.epsilon) is None
    _emit(args, [{"n": S.n, "d": S.dim, "vertices": net.vertices, "rounds": net.iterations,
                  "verified": verified}])
    return OK if verified else VIOLATION


def cmd_explore(args):
    try:
        result = explore(args.trials, args.n, args.d, args.seed, args.coord_bound)
    except ValueError as exc:
        raise BadInput(str(exc)) from None
    records = []
    for r in result.records:
        rec = {"seed": r.seed, "n": r.n, "d": r.d, "hull": r.hull_size, "found": r.found,
               "examined": r.examined, "work": r.work, "verified": r.verified}
        if r.points is not None:
            rec["points"] = r.points
        records.append(rec)
    if args.format == "jsonl":
        _emit(args, records + [{"summary": result.summary()}])
    else:
        _emit(args, records)
        sys.stdout.write(to_table([result.summary()]))
    bad = result.verification_failures or (args.d == 2 and result.not_found)
    return VIOLATION if bad else OK


def cmd_compare(args):
    _, S = _load(args.file, need_dim=2)
    a, b = count_facets(S), sweep_count_2d(S)
    _emit(args, [{"k": k, "enumeration": a.e[k], "sweep": b.e[k]} for k in range(len(a.e))])
    return OK if a == b else VIOLATION


def cmd_verify_construction(args):
    obj, _ = _load(args.file)
    if not isinstance(obj, ChainedConfig):
        raise BadInput(f"{args.file} carries no chain labels")
    if obj.kind == "extended" and obj.subchain is None:
        raise BadInput(f"{args.file} has no subchain labels")
    report = verify_construction(obj)
    _emit(args, [{"property": c.name, "passed": c.passed, "witness": c.witness} for c in report.checks])
    return OK if report.passed else VIOLATION


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "jsonl"), default="table")
    common.add_argument("--report", metavar="PATH", help="also write line-delimited JSON records here")
    parser = _Parser(prog="kfacets", description="Exact k-facet counting and extremal configurations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a tight configuration")
    p.add_argument("kind", choices=("basic", "extended", "simplicial"))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", parents=[common], help="histogram of k-facets")
    p.add_argument("file")
    p.add_argument("--sweep", action="store_true", help="use the planar rotational sweep")
    p.add_argument("--kmax", type=int)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bounds", parents=[common], help="counted E_k against lower bounds")
    p.add_argument("file")
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("structure", parents=[common], help="structure of optimal planar sets")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("crossing", parents=[common], help="convex quadrilaterals vs (<=k)-edges")
    p.add_argument("file")
    p.set_defaults(func=cmd_crossing)

    p = sub.add_parser("halfnet", parents=[common], help="find and verify a simplicial half-net")
    p.add_argument("file")
    p.set_defaults(func=cmd_halfnet)

    p = sub.add_parser("explore", parents=[common], help="random search for sets without a half-net")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord-bound", type=int)
    p.set_defaults(func=cmd_explore)

    p = sub.add_parser("compare", parents=[common], help="enumeration vs sweep histograms")
    p.add_argument("file")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify-construction", parents=[common], help="check a labeled configuration")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_construction)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BadInput as exc:
        print(f"kfacets: {exc}", file=sys.stderr)
        return BAD_INPUT
    except GeometryError as exc:
        print(f"kfacets: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
