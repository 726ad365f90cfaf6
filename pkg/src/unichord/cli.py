"""Command line front end.

Exit codes: 0 success / in the class / oracle agrees; 1 not in the
class / oracle disagrees; 2 usage, parse or budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from .chromatic import NotInCError, max_clique, optimal_coloring
from .compose import make_heawood, make_no_transversal_fixture, make_petersen, random_c_graph, two_subdivision
from .decomp import recognize
from .graph import Graph, GraphParseError, parse_edge_list, to_dot, to_edge_list
from .oracle import CYCLE_LIMIT, has_unique_chord_cycle

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2

GEN_KINDS = ("petersen", "heawood", "random-c", "2subdiv", "fixture-no-transversal")


class UsageError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_edge_list(text)


def _dump(obj: Any) -> None:
    print(json.dumps(obj, sort_keys=True))


def _only_json(args: argparse.Namespace) -> None:
    if args.format not in (None, "json"):
        raise UsageError(f"--format {args.format} is not supported by '{args.command}'")


def cmd_recognize(args: argparse.Namespace) -> int:
    _only_json(args)
    res = recognize(_read_graph(args.path))
    print("IN_C" if res else "NOT_IN_C")
    _dump(res.to_json())
    return EXIT_OK if res else EXIT_NO


def cmd_tree(args: argparse.Namespace) -> int:
    _only_json(args)
    res = recognize(_read_graph(args.path))
    if not res:
        print("NOT_IN_C")
        _dump(res.to_json())
        return EXIT_NO
    _dump({"verdict": "IN_C", "components": [{"nodes": comp, "tree": t.to_json()} for comp, t in res.trees]})
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    try:
        col = optimal_coloring(g)
    except NotInCError as exc:
        print("NOT_IN_C")
        _dump(exc.verdict.to_json())
        return EXIT_NO
    if args.format == "dot":
        lines = to_dot(g).splitlines()
        labels = [f'  {v} [label="{v}:{c}"];' for v, c in enumerate(col.colors)]
        print("\n".join(lines[:1] + labels + lines[1:]))
    elif args.format in (None, "json"):
        _dump(col.to_json())
    else:
        raise UsageError(f"--format {args.format} is not supported by 'color'")
    return EXIT_OK


def cmd_clique(args: argparse.Namespace) -> int:
    _only_json(args)
    g = _read_graph(args.path)
    res = recognize(g)
    if not res:
        # the linear-time scan is only exact on members
        print("NOT_IN_C")
        _dump(res.to_json())
        return EXIT_NO
    clique = max_clique(g)
    _dump({"clique": clique, "size": len(clique)})
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    log = None
    if args.kind == "petersen":
        g = make_petersen()
    elif args.kind == "heawood":
        g = make_heawood()
    elif args.kind == "fixture-no-transversal":
        g = make_no_transversal_fixture()
    elif args.kind == "random-c":
        g, log = random_c_graph(args.seed, args.size)
    else:
        if args.input is None:
            raise UsageError("gen 2subdiv needs --input PATH (or - for stdin)")
        g = two_subdivision(_read_graph(args.input))
    if args.log is not None:
        with open(args.log, "w", encoding="utf-8") as fh:
            json.dump(log or [], fh)
    fmt = args.format or "edgelist"
    if fmt == "edgelist":
        sys.stdout.write(to_edge_list(g))
    elif fmt == "dot":
        sys.stdout.write(to_dot(g))
    else:
        _dump({"n": g.n, "edges": [list(e) for e in g.edges()]})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    _only_json(args)
    g = _read_graph(args.path)
    if g.n > CYCLE_LIMIT:
        print(f"REFUSED: oracle is limited to {CYCLE_LIMIT} nodes, graph has {g.n}", file=sys.stderr)
        return EXIT_ERROR
    res = recognize(g)
    witness = has_unique_chord_cycle(g)
    agree = bool(res) == (witness is None)
    print("AGREE" if agree else "DISAGREE")
    _dump(
        {
            "recognizer": "IN_C" if res else "NOT_IN_C",
            "oracle": "IN_C" if witness is None else "NOT_IN_C",
            "witness": None if witness is None else witness.to_json(),
        }
    )
    return EXIT_OK if agree else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for every random choice (default 0)")
    common.add_argument("--format", choices=("json", "dot", "edgelist"), default=None)

    parser = argparse.ArgumentParser(prog="unichord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, func, help_ in (
        ("recognize", cmd_recognize, "decide membership; prints IN_C or NOT_IN_C and a JSON verdict"),
        ("tree", cmd_tree, "print the proper decomposition tree as JSON"),
        ("color", cmd_color, "print an optimal colouring"),
        ("clique", cmd_clique, "print a maximum clique"),
        ("verify", cmd_verify, "compare the recogniser with the brute-force oracle"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("path", help="edge-list file, or - for standard input")
        p.set_defaults(func=func)
    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("kind", choices=GEN_KINDS)
    p.add_argument("--size", type=int, default=30, help="target node count for random-c")
    p.add_argument("--input", help="graph to subdivide for 2subdiv")
    p.add_argument("--log", help="write the random-c build log to this JSON file")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
