"""Command line: ``lowhigh bench ...`` and ``lowhigh query ...``."""

from __future__ import annotations

import argparse
import sys

from .applications import InvalidForest, query_avoiding_path, query_two_disjoint_paths, valid_set
from .bench import MODES, SaturatedGraph, WorkloadSpec, run_experiment
from .checks import VerificationFailure
from .dominators import Unreachable
from .graph import IdOutOfRange, ParseError, read_graph_file
from .incremental import initialize
from .twovcss import Not2VC


def _percent(text: str) -> float:
    p = float(text)
    # accept both 0.1 and 10 for ten percent
    return p / 100.0 if p >= 1 else p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="lowhigh", description="Incremental low-high orders and dominator trees.")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="run an insertion workload and print a CSV row")
    b.add_argument("--graph", required=True, help="edge list or DIMACS (.gr/.dimacs) file")
    b.add_argument("--mode", choices=MODES, default="dynamize")
    b.add_argument("--percent", type=_percent, default=0.1, help="fraction (0.1) or percentage (10)")
    b.add_argument("--algo", choices=["efficient", "simple", "slt", "slt-nca", "lhz"], default="efficient")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--verify", action="store_true", help="check every insertion against the oracle")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--out", help="write the CSV here instead of stdout")

    q = sub.add_parser("query", help="answer a path or valid-set query")
    q.add_argument("--graph", required=True)
    qs = q.add_subparsers(dest="query", required=True)
    tp = qs.add_parser("two-paths", help="two maximally disjoint paths to v and w")
    tp.add_argument("v", type=int)
    tp.add_argument("w", type=int)
    av = qs.add_parser("avoid", help="a path to v avoiding w")
    av.add_argument("v", type=int)
    av.add_argument("w", type=int)
    vs = qs.add_parser("valid-set", help="edges to add to a forest so dominators are kept")
    vs.add_argument("tfile", help="forest edges, one 'parent child' pair per line")
    return ap


def _read_forest(path: str) -> dict[int, int]:
    t: dict[int, int] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(lineno, "forest line must be 'parent child'")
            try:
                p, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(lineno, "expected integers") from None
            if v in t:
                raise InvalidForest(f"vertex {v} has two forest parents")
            t[v] = p
    return t


def _fmt(path) -> str:
    return " ".join(map(str, path))


def _bench(args) -> int:
    spec = WorkloadSpec(graph=args.graph, mode=args.mode, percent=args.percent, seed=args.seed,
                        algo=args.algo, verify=args.verify, repeats=args.repeats)
    try:
        report = run_experiment(spec)
    except VerificationFailure as exc:
        print(f"verification failed: {exc} (graph {args.graph}, seed {args.seed})", file=sys.stderr)
        return 2
    text = report.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _query(args) -> int:
    G = read_graph_file(args.graph)
    state = initialize(G)
    if args.query == "two-paths":
        pair = query_two_disjoint_paths(state, args.v, args.w)
        print(_fmt(pair.p1))
        print(_fmt(pair.p2))
    elif args.query == "avoid":
        path = query_avoiding_path(state, args.v, args.w)
        print("none" if path is None else _fmt(path))
    else:
        for u, v in sorted(valid_set(state, _read_forest(args.tfile)).edges):
            print(u, v)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bench":
            return _bench(args)
        return _query(args)
    except (ParseError, IdOutOfRange, Unreachable, InvalidForest, SaturatedGraph, Not2VC, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
