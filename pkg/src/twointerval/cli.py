"""Command-line entry point.

Exit codes: 0 success (for ``check``: reduction agrees with brute force),
1 usage error, 2 guard or node budget exceeded, 3 I/O or parse error,
4 ``check`` found a disagreement.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .formats import (
    ParseError,
    emit_graph,
    emit_instance,
    parse_graph,
    parse_instance,
    read_provenance,
    read_text,
    write_provenance,
    write_text,
)
from .model import ModelError
from .reduction import ReductionError, Variant, reduce
from .render import render_svg
from .solvers import GuardExceeded, UnsupportedRelations, solve
from .verify import check_reduction_equivalence, random_coloured_graph

EXIT_OK, EXIT_USAGE, EXIT_GUARD, EXIT_IO, EXIT_DISAGREE = 0, 1, 2, 3, 4

RELATIONS_HELP = "relation tokens: p = preceding (<), n = nested (⊏), c = crossing (≬)"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def provenance_path(instance_path: str | Path) -> Path:
    p = Path(instance_path)
    return p.with_name(p.name + ".prov.json")


def cmd_gen(args) -> int:
    g = parse_graph(read_text(args.graph))
    if g.dropped:
        n = len(g.dropped)
        print(f"warning: dropped {n} edge{'s' if n != 1 else ''} joining same-colour vertices",
              file=sys.stderr)
    r = reduce(g, Variant(args.variant))
    text = emit_instance(r.instance)
    if args.out:
        write_text(args.out, text)
        write_provenance(args.provenance or provenance_path(args.out), r)
    else:
        sys.stdout.write(text)
    print(f"k'={r.k_prime}")
    print(f"|F|={len(r.instance)}")
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = parse_instance(read_text(args.instance))
    try:
        sol = solve(inst, args.method, args.budget)
    except UnsupportedRelations as exc:
        raise UsageError(str(exc)) from None
    print(f"method {sol.method}")
    print(f"size {sol.size}")
    print("labels " + " ".join(sol.sorted_labels()))
    return EXIT_OK


def cmd_check(args) -> int:
    g = parse_graph(read_text(args.graph))
    report = check_reduction_equivalence(g, Variant(args.variant), args.budget)
    print(report.render())
    return EXIT_OK if report.agrees else EXIT_DISAGREE


def cmd_render(args) -> int:
    inst = parse_instance(read_text(args.instance))
    prov = read_provenance(args.provenance) if args.provenance else None
    write_text(args.out, render_svg(inst, prov))
    return EXIT_OK


def cmd_randgraph(args) -> int:
    try:
        g = random_coloured_graph(args.k, args.n, args.p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = emit_graph(g)
    if args.out:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twointerval", description="2-interval pattern toolkit. " + RELATIONS_HELP)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    variants = [v.value for v in Variant]

    p = sub.add_parser("gen", help="reduce a coloured graph to a 2-interval instance")
    p.add_argument("graph")
    p.add_argument("--variant", choices=variants, default=Variant.NESTED_CROSSING.value)
    p.add_argument("--out", help="instance file (default: stdout, no provenance)")
    p.add_argument("--provenance", help="provenance sidecar (default: <out>.prov.json)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="maximum R-comparable subset of an instance file")
    p.add_argument("instance")
    p.add_argument("--method", choices=["auto", "clique", "chain", "brute"], default="auto")
    p.add_argument("--budget", type=int, default=None, help="clique search node budget")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="compare reduction optimum with brute-force clique search")
    p.add_argument("graph")
    p.add_argument("--variant", choices=variants, default=Variant.NESTED_CROSSING.value)
    p.add_argument("--budget", type=int, default=None, help="clique search node budget")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("render", help="draw an instance as SVG")
    p.add_argument("instance")
    p.add_argument("--out", required=True)
    p.add_argument("--provenance", help="provenance sidecar written by 'gen'")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("randgraph", help="seeded random coloured graph")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_randgraph)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (OSError, ParseError, ModelError, ReductionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
