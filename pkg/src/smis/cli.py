"""Command-line entry point.

Every report is deterministic except the trailing ``time:`` line.
Exit codes: 0 success, 2 input error, 3 resource cap or inconclusive,
4 verification failure.
"""
from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import engine
from .family import FAMILY_NAMES, smallest_missing_in_family
from .gadgets import build_xi, clique_number_via_smis, reduce_3col_to_clique
from .graph import Graph, GraphError, emit_graph6, parse_edge_list, parse_graph6
from .oracle import (ENUM_MAX_ORDER, Inconclusive, canonical_code, enumerate_nonisomorphic,
                     is_induced_subgraph, max_clique)

EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_FAIL = 4


def read_graph(path: str, fmt: str = "auto") -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if fmt == "auto":
        fmt = "g6" if path.endswith((".g6", ".graph6")) else "edges"
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphError(f"{path}: no graph6 record")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _g6(g: Graph) -> str:
    return emit_graph6(g).decode("ascii")


class Report:
    def __init__(self, args: argparse.Namespace, out):
        self.out = out
        self.start = time.perf_counter()
        self.line(f"command: {args.command} " + " ".join(args.echo))

    def line(self, text: str) -> None:
        print(text, file=self.out)

    def graph(self, g: Graph) -> None:
        self.line(f"input: n={g.n} m={g.m}")

    def close(self) -> None:
        self.line(f"time: {time.perf_counter() - self.start:.4f}s")


def cmd_smis(args, rep: Report) -> int:
    g = read_graph(args.input, args.format)
    rep.graph(g)
    result = engine.smis(g, workers=args.workers, max_k=args.max_k)
    rep.line(f"k={result.k} missing={_g6(result.missing)} code={result.code.hex}")
    rep.line(f"method: {result.method}")
    rep.line(f"workers: {args.workers}")
    if args.counts_out:
        text = ""
        if result.k >= 2:
            text = engine.dump_counts(engine.count_labeled(g, result.k, workers=args.workers))
        Path(args.counts_out).write_text(text)
    return 0


def cmd_verify(args, rep: Report) -> int:
    g = read_graph(args.input, args.format)
    rep.graph(g)
    w = parse_graph6(args.witness)
    k = w.n
    rep.line(f"witness: k={k} code={canonical_code(w).hex}")
    if k - 1 > ENUM_MAX_ORDER or k > 10:
        raise Inconclusive(f"witness order {k} above verification cap", ENUM_MAX_ORDER)
    absent = not is_induced_subgraph(w, g)
    universal = all(is_induced_subgraph(h, g) for h in enumerate_nonisomorphic(max(k - 1, 0)))
    rep.line(f"absent: {'PASS' if absent else 'FAIL'}")
    rep.line(f"order-{k - 1} universal: {'PASS' if universal else 'FAIL'}")
    return 0 if absent and universal else EXIT_FAIL


def cmd_gen_xi(args, rep: Report) -> int:
    x = build_xi(args.i)
    body = f"{_g6(x.graph)}\nlabels: {' '.join(map(str, x.labels))}\n"
    print(body, end="", file=rep.out)
    if args.output:
        Path(args.output).write_text(body)
    return 0


def cmd_clique(args, rep: Report) -> int:
    g = read_graph(args.input, args.format)
    rep.graph(g)
    if args.direct:
        rep.line(f"omega={max_clique(g, max_n=None)} method=branch-and-bound")
    else:
        rep.line(f"omega={clique_number_via_smis(g, workers=args.workers)} method=smis-reduction")
    return 0


def cmd_family(args, rep: Report) -> int:
    g = read_graph(args.input, args.format)
    rep.graph(g)
    result = smallest_missing_in_family(g, args.family, args.max_k, workers=args.workers)
    rep.line(f"k={result.k} missing={_g6(result.missing)} code={result.code.hex} family={args.family}")
    rep.line(f"universality={result.k - 1}")
    return 0


def cmd_reduce3col(args, rep: Report) -> int:
    g = read_graph(args.input, args.format)
    rep.graph(g)
    red = reduce_3col_to_clique(g, args.t)
    rep.line(f"H={_g6(red.graph)} n={red.graph.n} m={red.graph.m}")
    rep.line("parts: " + " ".join(f"{p[0]}-{p[-1]}" for p in red.parts))
    has = max_clique(red.graph, max_n=None) >= args.t
    rep.line(f"t-clique={'yes' if has else 'no'} 3-colourable={'yes' if has else 'no'}")
    return 0


def cmd_counts(args, rep: Report) -> int:
    g = read_graph(args.input, args.format)
    rep.graph(g)
    table = engine.count_labeled(g, args.k, workers=args.workers)
    print(engine.dump_counts(table), end="", file=rep.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smis", description="Smallest missing induced subgraph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("auto", "g6", "edges"), default="auto")
        return p

    def with_workers(p):
        p.add_argument("--workers", type=int, default=engine.default_workers())
        return p

    p = with_workers(with_input(sub.add_parser("smis", help="find the smallest missing induced subgraph")))
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--counts-out", default=None, help="write the final order's counter table here")
    p.set_defaults(func=cmd_smis)

    p = with_input(sub.add_parser("verify", help="check a claimed missing subgraph"))
    p.add_argument("witness", help="witness graph in graph6")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen-xi", help="emit the all-but-clique gadget X_i")
    p.add_argument("i", type=int)
    p.add_argument("-o", "--output", default=None, help="also write graph6 and labels to this file")
    p.set_defaults(func=cmd_gen_xi)

    p = with_workers(with_input(sub.add_parser("clique", help="clique number via the X_i reduction")))
    p.add_argument("--direct", action="store_true", help="use branch and bound instead")
    p.set_defaults(func=cmd_clique)

    p = with_workers(with_input(sub.add_parser("family", help="smallest missing member of a family")))
    p.add_argument("--family", choices=FAMILY_NAMES, default="all")
    p.add_argument("--max-k", type=int, default=ENUM_MAX_ORDER)
    p.set_defaults(func=cmd_family)

    p = with_input(sub.add_parser("reduce3col", help="3-colouring to clique blow-up"))
    p.add_argument("-t", type=int, required=True)
    p.set_defaults(func=cmd_reduce3col)

    p = with_workers(with_input(sub.add_parser("counts", help="labeled counter table")))
    p.add_argument("-k", type=int, required=True)
    p.set_defaults(func=cmd_counts)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    args.echo = argv[1:]
    rep = Report(args, out)
    try:
        code = args.func(args, rep)
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (engine.ResourceLimitError, Inconclusive) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    rep.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
