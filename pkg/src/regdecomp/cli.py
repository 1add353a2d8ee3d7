"""Command-line front end.

Exit codes: 0 success, 1 a verification came out false (the witness is
printed), 2 usage or input error, 3 a resource budget was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import serialize as ser
from .blocks import check_partition
from .errors import BudgetExceeded, CapacityError
from .liealg import (construct_k1k, construct_k1k_beta, construct_kk,
                     extend_partition_to_decomposition, extend_two_block,
                     is_regular_decomposition, verify_by_roots)
from .regpart import (DEFAULT_NODE_BUDGET, build_partition_graph, check_graph_properties,
                      finest_partition, integer_partitions,
                      partition_from_int_partition, reconstruct_from_graph,
                      regularity_violation, search_regular_partitions, stirling_count_upper)
from .rootsys import RootSystemType, beta_chain_basis, build_root_system
from .weyl import canonicalize, parse_modulo

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _modulo(text: str) -> frozenset[str]:
    try:
        return parse_modulo(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _system(args):
    try:
        return build_root_system(RootSystemType(args.family.upper(), args.rank))
    except ValueError as e:
        raise UsageError(str(e))


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}")


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _root_list(rs, idx):
    return [list(rs.roots[i]) for i in idx]


# ---------------------------------------------------------------- subcommands

def cmd_build(args) -> int:
    rs = _system(args)
    _emit({"family": rs.family, "rank": rs.rank,
           "cartan_matrix": [list(r) for r in rs.cartan],
           "num_roots": len(rs), "num_positive": rs.num_positive,
           "positive_roots": ser.rootset_to_json(rs, rs.positive),
           "highest_root": list(max((rs.roots[r] for r in rs.positive), key=sum)),
           "beta_basis": _root_list(rs, beta_chain_basis(rs))})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    rs = _system(args)
    try:
        rep = search_regular_partitions(rs, args.min_blocks, args.modulo,
                                        max_blocks=args.max_blocks,
                                        node_budget=args.node_budget, jobs=args.jobs,
                                        coarsening_shortcut=not args.no_shortcut)
    except ValueError as e:
        raise UsageError(str(e))
    if args.format == "csv":
        sys.stdout.write(ser.reports_to_csv([rep]))
    else:
        _emit(ser.report_to_json(rs, rep, with_classes=not args.no_classes))
    return EXIT_OK


def _load_partition(path):
    try:
        return ser.partition_from_json(_read_json(path))
    except ValueError as e:
        raise UsageError(str(e))


def cmd_verify_partition(args) -> int:
    rs, p = _load_partition(args.input)
    try:
        check_partition(rs, p)
    except ValueError as e:
        _emit({"regular": False, "m": len(p), "reason": str(e)})
        return EXIT_FALSE
    bad = regularity_violation(rs, p)
    if bad is None:
        _emit({"regular": True, "m": len(p)})
        return EXIT_OK
    x, y, z = bad
    where = p.block_of()
    _emit({"regular": False, "m": len(p),
           "witness": {"roots": _root_list(rs, (x, y)), "sum": list(rs.roots[z]),
                       "blocks": [where[x] + 1, where[y] + 1], "sum_block": where[z] + 1}})
    return EXIT_FALSE


def cmd_verify_decomposition(args) -> int:
    try:
        d = ser.decomposition_from_json(_read_json(args.input))
    except ValueError as e:
        raise UsageError(str(e))
    route = args.route
    if route == "auto":
        route = "matrix" if d.rs.family == "A" else "roots"
    if route == "matrix" and d.rs.family != "A":
        raise UsageError("the matrix route needs type A; use --route roots")
    verdict = is_regular_decomposition(d) if route == "matrix" else verify_by_roots(d)
    out = verdict.as_dict()
    out["route"] = route
    _emit(out)
    return EXIT_OK if verdict.valid else EXIT_FALSE


def cmd_graph(args) -> int:
    rs, p = _load_partition(args.input)
    try:
        g = build_partition_graph(rs, p)
    except ValueError as e:
        raise UsageError(str(e))
    _emit({**ser.graph_to_json(g), "properties": check_graph_properties(g).as_dict()})
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    try:
        g = ser.graph_from_json(_read_json(args.input))
    except ValueError as e:
        raise UsageError(str(e))
    rank = args.rank if args.rank is not None else g.rank
    try:
        rs = build_root_system(("A", rank))
    except ValueError as e:
        raise UsageError(str(e))
    try:
        p = reconstruct_from_graph(rs, g)
    except ValueError as e:
        _emit({"reconstructed": False, "reason": str(e)})
        return EXIT_FALSE
    _emit(ser.partition_to_json(rs, p))
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        if args.family_k1k or args.family_kk or args.family_k1k_beta:
            if args.n is None or args.lam is None:
                raise UsageError("--n and --lambda are required for the constructive families")
            if args.family_k1k:
                d = construct_k1k(args.n, args.lam)
            elif args.family_k1k_beta:
                d = construct_k1k_beta(args.n, args.lam)
            else:
                d = construct_kk(args.n, args.lam, args.x)
            _emit(ser.decomposition_to_json(d))
        elif args.finest:
            rs = build_root_system(("A", _need_n(args)))
            _emit(ser.partition_to_json(rs, finest_partition(rs, args.finest)))
        elif args.int_partition:
            rs = build_root_system(("A", _need_n(args)))
            _emit(ser.partition_to_json(rs, partition_from_int_partition(
                rs, args.int_partition, args.orientation)))
        elif args.extend:
            rs, p = _load_partition(args.extend)
            if len(p) == 2:
                d = extend_two_block(rs, *p.blocks)
            else:
                d = extend_partition_to_decomposition(rs, p, alternative=args.alternative)
            _emit(ser.decomposition_to_json(d))
    except ValueError as e:
        raise UsageError(str(e))
    return EXIT_OK


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


def cmd_canonicalize(args) -> int:
    rs, p = _load_partition(args.input)
    try:
        q = canonicalize(rs, p, args.modulo)
    except ValueError as e:
        raise UsageError(str(e))
    _emit(ser.partition_to_json(rs, q))
    return EXIT_OK


def cmd_count(args) -> int:
    n = args.n
    if n < 2:
        raise UsageError("--n must be >= 2")
    _emit({"family": "A", "rank": n,
           "modulo_renumber_sign": stirling_count_upper(n),
           "modulo_renumber_sign_weyl": sum(1 for _ in integer_partitions(n + 1, min_parts=3))})
    return EXIT_OK


# --------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regdecomp",
                                 description="Regular partitions of root systems and "
                                             "regular decompositions of sl(n+1).")
    sub = ap.add_subparsers(dest="command", required=True)

    def system_flags(p, rank_required=True):
        p.add_argument("--family", required=True, help="A, B, C, D, E, F or G")
        p.add_argument("--rank", type=int, required=rank_required)

    p = sub.add_parser("build", help="construct a root system")
    system_flags(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("enumerate", help="enumerate regular partitions")
    system_flags(p)
    p.add_argument("--min-blocks", type=int, required=True)
    p.add_argument("--max-blocks", type=int)
    p.add_argument("--modulo", type=_modulo, required=True,
                   help="comma list from renumber,sign,weyl, or 'none'")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-shortcut", action="store_true",
                   help="skip the exactly-min-blocks probe search")
    p.add_argument("--no-classes", action="store_true", help="omit the class list from JSON")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify-partition", help="check regularity of a partition JSON")
    p.add_argument("input", help="file or - for stdin")
    p.set_defaults(func=cmd_verify_partition)

    p = sub.add_parser("verify-decomposition", help="check a decomposition JSON")
    p.add_argument("input", help="file or - for stdin")
    p.add_argument("--route", choices=("auto", "matrix", "roots"), default="auto")
    p.set_defaults(func=cmd_verify_decomposition)

    p = sub.add_parser("graph", help="graph of a partition with property report")
    p.add_argument("input", help="file or - for stdin")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("reconstruct", help="rebuild an A_n partition from its graph")
    p.add_argument("input", help="file or - for stdin")
    p.add_argument("--rank", type=int, help="defaults to the number of graph labels")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("construct", help="build a decomposition or partition")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--family-k1k", action="store_true", help="(k+1, k) family")
    what.add_argument("--family-kk", action="store_true", help="(k, k) family")
    what.add_argument("--family-k1k-beta", action="store_true",
                      help="(k+1, k) family in beta-chain form")
    what.add_argument("--finest", choices=("row", "column"), help="finest partition of A_n")
    what.add_argument("--int-partition", type=_int_list, metavar="L1,L2,...",
                      help="partition of A_n from an integer partition of n+1")
    what.add_argument("--extend", metavar="FILE",
                      help="extend a regular partition JSON (or - ) to a decomposition")
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam", type=_int_list, metavar="L1,L2,...")
    p.add_argument("--x", type=_rational_list, metavar="X1,...,Xn",
                   help="coefficients of X over H_1..H_n (default 0)")
    p.add_argument("--orientation", choices=("row", "column"), default="row")
    p.add_argument("--alternative", action="store_true",
                   help="with --extend: use H_{beta_n - beta_i} lines")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("canonicalize", help="canonical representative of a partition")
    p.add_argument("input", help="file or - for stdin")
    p.add_argument("--modulo", type=_modulo, required=True)
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("count", help="closed-form class counts for A_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_count)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"regdecomp: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CapacityError) as e:
        _emit({"error": "budget_exceeded", "message": str(e)})
        print(f"regdecomp: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
