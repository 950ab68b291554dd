"""Command-line front end.

    graphpoly poly fc --lambda 3 k3.edges
    graphpoly compare gray1.edges gray2.edges --invariants tutte,symat
    graphpoly cert verify cert.json
    graphpoly cert search p4.edges k13.edges --context chromatic --depth 3

Exit codes: 0 success (valid / found), 1 invalid certificate or nothing
found, 2 unreadable input or bad arguments, 3 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import binary, certificates, go, invariants, partial, partition, tutte
from .graph import LabelledGraph
from .graphio import GraphFormatError, read_graph
from .limits import LIMITS, SizeLimitError
from .poly import MultiPoly

INVARIANTS = ("tutte", "whitney", "chromatic", "edge-chromatic", "bp", "potts", "ising",
              "symat", "pc", "pc-fixed", "ec", "fc", "go-count", "go-prob", "homcyc", "mc",
              "genus-dist", "lambda-tw")


class UsageError(ValueError):
    pass


def _need(args, name: str, flag: str):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"invariant {args.invariant!r} needs {flag}")
    return value


def compute(name: str, lg: LabelledGraph, args):
    """Value of one invariant: a MultiPoly, an int, a float or a genus map."""
    g = lg.graph
    labelled = bool(lg.C or lg.U)
    if name == "tutte":
        return tutte.tutte_poly(g)
    if name == "whitney":
        return tutte.whitney_rank_poly(g)
    if name == "chromatic":
        return tutte.chromatic_poly(g)
    if name == "edge-chromatic":
        return tutte.edge_chromatic_count_poly(g)
    if name == "bp":
        return tutte.bp_poly(g)
    if name == "potts":
        return partition.potts_reduced(g, _need(args, "q", "--q"))
    if name == "ising":
        return partition.ising_reduced(g)
    if name == "symat":
        return partition.symat_reduced(g)
    if name == "pc":
        return partial.pc_labelled(lg)
    if name == "pc-fixed":
        lam = _need(args, "lam", "--lambda")
        return partial.pc_labelled(lg).subs(l=lam) if labelled else partial.pc_poly_fixed(g, lam)
    if name == "ec":
        return partial.ec_labelled(lg, _need(args, "lam", "--lambda"))
    if name == "fc":
        return partial.fc_labelled(lg, _need(args, "lam", "--lambda"))
    if name == "go-count":
        return go.go_count_poly(g)
    if name == "go-prob":
        return go.go_prob_poly(g, _need(args, "lam", "--lambda"))
    if name == "homcyc":
        return invariants.hom_cycle_count(g, _need(args, "q", "--q"), args.surjective)
    if name == "mc":
        return invariants.bounded_chromon_count(g, _need(args, "s", "--s"))
    if name == "genus-dist":
        return invariants.genus_distribution(g)
    if name == "lambda-tw":
        lam = _need(args, "lam_real", "--lambda")
        x, y = _need(args, "x", "--x"), _need(args, "y", "--y")
        return binary.lambda_tw(binary.graphic(g), x, y, lam)
    raise UsageError(f"unknown invariant {name!r}")


def _text(value, ascending: bool) -> str:
    if isinstance(value, MultiPoly):
        return value.to_text(ascending=ascending)
    if isinstance(value, dict):
        return "\n".join(f"{k}: {v}" for k, v in value.items())
    return str(value)


def _json(value):
    if isinstance(value, MultiPoly):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): v for k, v in value.items()}
    return value


def cmd_poly(args) -> int:
    lg = read_graph(args.graph)
    value = compute(args.invariant, lg, args)
    if args.json:
        report = {"invariant": args.invariant, "n": lg.graph.n, "m": lg.graph.m,
                  "result": _json(value)}
        print(json.dumps(report, sort_keys=True))
    else:
        print(_text(value, args.order == "ascending"))
    return 0


def cmd_compare(args) -> int:
    a, b = read_graph(args.graph_a), read_graph(args.graph_b)
    names = [s.strip() for s in args.invariants.split(",") if s.strip()]
    rows = []
    for name in names:
        rows.append((name, compute(name, a, args) == compute(name, b, args)))
    if args.json:
        print(json.dumps({"results": {n: ("EQUAL" if eq else "DISTINCT") for n, eq in rows}},
                         sort_keys=True))
    else:
        width = max(len(n) for n, _ in rows) if rows else 0
        for name, eq in rows:
            print(f"{name:<{width}}  {'EQUAL' if eq else 'DISTINCT'}")
        equal = sum(eq for _, eq in rows)
        print(f"{len(rows)} invariants: {equal} equal, {len(rows) - equal} distinct")
    return 0


def cmd_cert_verify(args) -> int:
    with open(args.certificate) as fh:
        cert = certificates.Certificate.from_json(fh.read())
    result = certificates.verify(cert)
    if args.json:
        print(json.dumps({"valid": result.valid, "step": result.step, "reason": result.reason}))
    else:
        print(result)
    return 0 if result.valid else 1


def cmd_cert_search(args) -> int:
    g, h = read_graph(args.graph_a).graph, read_graph(args.graph_b).graph
    result = certificates.search(g, h, args.context, args.depth)
    if result.found:
        print(result.certificate.dumps())
        return 0
    if args.json:
        print(json.dumps({"found": False, "reason": result.reason}))
    else:
        print(f"NOT-FOUND: {result.reason}")
    return 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam_real", type=_fraction, default=None,
                   help="number of colours (integer invariants) or lambda for lambda-tw")
    p.add_argument("--q", type=int, default=None, help="Potts states or cycle length")
    p.add_argument("--s", type=int, default=None, help="chromon size bound for mc")
    p.add_argument("--x", type=float, default=None)
    p.add_argument("--y", type=float, default=None)
    p.add_argument("--surjective", action="store_true", help="homcyc: count onto maps only")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--order", choices=("ascending", "descending"), default="ascending",
                   help="term order of printed polynomials (default: ascending)")


def _add_limits(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("size limits")
    g.add_argument("--max-canon-n", type=int, default=LIMITS.canon_n,
                   help="vertices for canonical labelling (default %(default)s)")
    g.add_argument("--max-subset-edges", type=int, default=LIMITS.subset_edges,
                   help="edges for 2^m subset expansions (default %(default)s)")
    g.add_argument("--max-enumeration", type=int, default=LIMITS.enumeration,
                   help="assignments, positions or rotation systems (default %(default)s)")
    g.add_argument("--max-search-nodes", type=int, default=LIMITS.search_nodes,
                   help="expressions explored by certificate search (default %(default)s)")
    g.add_argument("--max-search-depth", type=int, default=LIMITS.search_depth,
                   help="longest certificate searched for (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphpoly",
                                     description="Graph polynomials and certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="compute one invariant of a graph")
    p.add_argument("invariant", choices=INVARIANTS)
    p.add_argument("graph", help="edge-list file, or graph6 with a .g6 suffix")
    _add_params(p)
    _add_output(p)
    _add_limits(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("compare", help="compare two graphs across invariants")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    p.add_argument("--invariants", default="tutte,chromatic,symat",
                   help="comma-separated list (default %(default)s)")
    _add_params(p)
    _add_output(p)
    _add_limits(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("cert", help="verify or search for equivalence certificates")
    csub = p.add_subparsers(dest="cert_command", required=True)
    v = csub.add_parser("verify", help="check a certificate file")
    v.add_argument("certificate")
    v.add_argument("--json", action="store_true")
    _add_limits(v)
    v.set_defaults(func=cmd_cert_verify)
    s = csub.add_parser("search", help="breadth-first search for a certificate")
    s.add_argument("graph_a")
    s.add_argument("graph_b")
    s.add_argument("--context", choices=certificates.CONTEXTS, default="chromatic")
    s.add_argument("--depth", type=int, default=3)
    s.add_argument("--json", action="store_true")
    _add_limits(s)
    s.set_defaults(func=cmd_cert_search)
    return parser


def _apply_limits(args) -> None:
    LIMITS.canon_n = args.max_canon_n
    LIMITS.subset_edges = args.max_subset_edges
    LIMITS.enumeration = args.max_enumeration
    LIMITS.search_nodes = args.max_search_nodes
    LIMITS.search_depth = args.max_search_depth


def _integer_lambda(args) -> None:
    lam = getattr(args, "lam_real", None)
    args.lam = None
    if lam is not None and lam.denominator == 1:
        args.lam = int(lam)
    needs_int = {"pc-fixed", "ec", "fc", "go-prob"}
    chosen = {getattr(args, "invariant", None)} | set(
        getattr(args, "invariants", "").split(","))
    if lam is not None and args.lam is None and chosen & needs_int:
        raise UsageError("--lambda must be an integer for colouring invariants")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = vars(LIMITS).copy()
    try:
        _apply_limits(args)
        _integer_lambda(args)
        return args.func(args)
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return 3
    except (GraphFormatError, certificates.CertificateFormatError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        for k, v in saved.items():
            setattr(LIMITS, k, v)


if __name__ == "__main__":
    sys.exit(main())
