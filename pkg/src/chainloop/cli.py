"""Command-line interface: ``chainloop <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import serialize as ser
from .errors import ChainLoopError, NotEquivalent
from .lattice_path import lingering_path, rank_at_least
from .picard import class_of, reduce_v0
from .pl_function import certificate, divisor_of
from .search import catalan_lambda, count_rho0, gp_verify, oracle_crosscheck

EXIT_OK, EXIT_FOUND, EXIT_INVALID = 0, 1, 2


def _load_graph_and_divisor(args):
    G = ser.graph_from_dict(ser.load_json(args.graph))
    D = ser.divisor_from_list(G, ser.load_json(args.divisor))
    return G, D


def _emit(obj, out=None) -> None:
    text = ser.dump_json(obj, out)
    if out is None:
        print(text)


def cmd_verify(args) -> int:
    rep = gp_verify(args.genus, args.degree, workers=args.workers, concrete_all=args.concrete_all)
    data = rep.to_dict()
    if args.json:
        ser.dump_json(data, args.json)
    summary = {k: data[k] for k in ("status", "genus", "degrees", "strata", "branches", "elapsed_ms")}
    summary["counterexamples"] = data["counterexamples"]
    print(json.dumps(summary, indent=2, default=str))
    return EXIT_OK if rep.status == "verified" else EXIT_FOUND


def cmd_count(args) -> int:
    g = args.genus
    n = count_rho0(g)
    lam = catalan_lambda(g, 1, g // 2 + 1)
    _emit({"genus": g, "degree": g // 2 + 1, "count": n, "formula": int(lam), "match": n == lam})
    return EXIT_OK if n == lam else EXIT_FOUND


def cmd_rank(args) -> int:
    G, D = _load_graph_and_divisor(args)
    c = class_of(G, D)
    R = reduce_v0(G, c)
    out = {"d": D.degree, "r": args.r, "rank_at_least": rank_at_least(G, c, args.r)}
    if R.d0 >= 0:
        out["path"] = ser.path_to_dict(lingering_path(G, R, args.r))
    _emit(out)
    return EXIT_OK


def cmd_reduce(args) -> int:
    G, D = _load_graph_and_divisor(args)
    c = class_of(G, D)
    R = reduce_v0(G, c)
    _emit({"class": ser.class_to_dict(c), "reduced": ser.reduced_to_dict(R), "effective": R.d0 >= 0})
    return EXIT_OK


def cmd_certificate(args) -> int:
    G, D = _load_graph_and_divisor(args)
    D2 = ser.divisor_from_list(G, ser.load_json(args.divisor2))
    try:
        psi = certificate(G, D, D2)
    except NotEquivalent as exc:
        _emit({"equivalent": False, "reason": str(exc)})
        return EXIT_FOUND
    assert divisor_of(G, psi) == D - D2
    _emit({"equivalent": True, "function": psi.to_records()})
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    lengths = (ser.parse_rational(args.ell), ser.parse_rational(args.m))
    rep = oracle_crosscheck(args.genus, args.max_degree, lengths, scale=args.scale)
    _emit(rep.to_dict())
    return EXIT_OK if rep.status == "agree" else EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chainloop", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="search for D of positive rank with K - 2D effective")
    v.add_argument("--genus", type=int, required=True)
    v.add_argument("--degree", type=int)
    v.add_argument("--json", metavar="OUT", help="write the full report here")
    v.add_argument("--workers", type=int, help="default: $CHAINLOOP_WORKERS or all cores")
    v.add_argument("--concrete-all", action="store_true",
                   help="also run every stratum on the concrete chain ell=2g+1, m=1")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", help="rank-one classes at rho = 0 versus the Catalan formula")
    c.add_argument("--genus", type=int, required=True)
    c.set_defaults(func=cmd_count)

    for name, func, doc in (("rank", cmd_rank, "decide rank >= r"), ("reduce", cmd_reduce, "v_0-reduced data")):
        s = sub.add_parser(name, help=doc)
        s.add_argument("--graph", required=True)
        s.add_argument("--divisor", required=True)
        if name == "rank":
            s.add_argument("-r", type=int, default=1)
        s.set_defaults(func=func)

    s = sub.add_parser("certificate", help="PL function witnessing D ~ D2")
    s.add_argument("--graph", required=True)
    s.add_argument("--divisor", required=True)
    s.add_argument("--divisor2", required=True)
    s.set_defaults(func=cmd_certificate)

    o = sub.add_parser("oracle-check", help="compare against the finite-graph Dhar oracle")
    o.add_argument("--genus", type=int, required=True)
    o.add_argument("--max-degree", type=int, required=True)
    o.add_argument("--ell", required=True)
    o.add_argument("--m", required=True)
    o.add_argument("--scale", type=int, default=1)
    o.set_defaults(func=cmd_oracle_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (ChainLoopError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
