"""Command-line interface.

Exit status: 0 when the command succeeded or the checked property holds,
1 when a check came out false (a JSON witness is printed on stdout), and 2
when the input could not be processed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import builders, congruence, enumeration, morphism, valuation
from .errors import GamegraphError
from .graph import Gamegraph, Rulegraph, sources
from .io import (
    export_dot,
    graph_document,
    parse_graph,
    parse_map,
    parse_partition,
    serialize_graph,
    serialize_map,
)

__all__ = ["main"]

VALUATIONS = ("nim", "outcome+", "outcome-", "fbd", "mindist", "terminal-labeled")
ANNOTATIONS = VALUATIONS + ("blocks",)

OK, FALSE, ERROR = 0, 1, 2


class CliError(Exception):
    """Input problem reported with exit status 2."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> tuple[Rulegraph, dict[int, str] | None]:
    return parse_graph(_read(path))


def _print_json(obj: Any, compact: bool = False) -> None:
    print(json.dumps(obj, ensure_ascii=False, indent=None if compact else 2))


def _verdict(v: morphism.Verdict, ok_payload: dict | None = None) -> int:
    if v:
        _print_json({"ok": True, **(ok_payload or {})})
        return OK
    _print_json({"ok": False, "witness": v.witness})
    return FALSE


def _values(graph: Rulegraph, labeling: dict[int, str] | None, name: str) -> tuple:
    if name == "terminal-labeled":
        if labeling is None:
            raise CliError("terminal-labeled needs a graph document with terminal_labels")
        return valuation.outcome_with_terminal_labels(graph, labeling)
    if name == "blocks":
        return congruence.max_congruence(graph).block_of
    return valuation.evaluate(graph, valuation.BUILTIN[name]).values


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args) -> int:
    params: list[Any] = []
    for raw in args.params:
        try:
            params.append(int(raw))
        except ValueError:
            raise CliError(f"parameters must be integers, got {raw!r}") from None
    result = builders.build(builders.GameSpec(args.game, tuple(params), allow_large=args.allow_large))
    graph, labeling = result if isinstance(result, tuple) else (result, None)
    print(serialize_graph(graph, labeling))
    return OK


def cmd_analyze(args) -> int:
    graph, labeling = _load_graph(args.file)
    values = _values(graph, labeling, args.valuation)
    out: dict[str, Any] = {
        "valuation": args.valuation,
        "values": {graph.labels[p]: values[p] for p in graph.positions()},
    }
    if isinstance(graph, Gamegraph):
        out["start"] = graph.labels[graph.start]
        out["start_value"] = values[graph.start]
    _print_json(out)
    return OK


def cmd_sum(args) -> int:
    a, _ = _load_graph(args.left)
    b, _ = _load_graph(args.right)
    print(serialize_graph(builders.box_sum(a, b)))
    return OK


def cmd_check_map(args) -> int:
    dom, _ = _load_graph(args.src)
    cod, _ = _load_graph(args.dst)
    alpha = parse_map(_read(args.map), dom, cod)
    v = morphism.check_option_preserving(alpha)
    if v and args.source:
        if not (isinstance(dom, Gamegraph) and isinstance(cod, Gamegraph)):
            raise CliError("--source needs two gamegraph documents (with start)")
        v = morphism.check_source_preserving(alpha)
    return _verdict(v, {"surjective": alpha.is_surjective(), "injective": alpha.is_injective()})


def cmd_find_map(args) -> int:
    dom, _ = _load_graph(args.src)
    cod, _ = _load_graph(args.dst)
    if args.source and not (isinstance(dom, Gamegraph) and isinstance(cod, Gamegraph)):
        raise CliError("--source needs two gamegraph documents (with start)")
    alpha = morphism.find_option_preserving_map(dom, cod, require_source=args.source, budget=args.budget)
    if alpha is None:
        _print_json({"ok": False, "witness": {"reason": "no option-preserving map exists"}})
        return FALSE
    print(serialize_map(alpha))
    return OK


def cmd_iso(args) -> int:
    a, _ = _load_graph(args.left)
    b, _ = _load_graph(args.right)
    v = morphism.are_isomorphic(a, b)
    return _verdict(v, {"map": v.map.label_mapping()} if v else None)


def cmd_check_congruence(args) -> int:
    graph, _ = _load_graph(args.file)
    pi = parse_partition(_read(args.partition), graph)
    return _verdict(congruence.is_congruence(graph, pi))


def cmd_quotient(args) -> int:
    graph, _ = _load_graph(args.file)
    pi = parse_partition(_read(args.partition), graph)
    v = congruence.is_congruence(graph, pi)
    if not v:
        return _verdict(v)
    print(serialize_graph(congruence.quotient(graph, pi).graph))
    return OK


def cmd_minquot(args) -> int:
    graph, _ = _load_graph(args.file)
    print(serialize_graph(congruence.min_quotient(graph).graph))
    return OK


def cmd_con_lattice(args) -> int:
    graph, _ = _load_graph(args.file)
    lat = congruence.con_lattice(graph, budget=args.budget)
    _print_json({
        "size": len(lat),
        "elements": [{"notation": pi.notation(graph), "blocks": pi.label_blocks(graph)} for pi in lat.elements],
        "covers": lat.covers(),
        "bottom": lat.index(lat.bottom),
        "top": lat.index(lat.top),
    })
    return OK


def cmd_emul(args) -> int:
    a, _ = _load_graph(args.left)
    b, _ = _load_graph(args.right)
    return _verdict(congruence.emulationally_equivalent(a, b))


def cmd_enumerate(args) -> int:
    if args.by_fbd is not None:
        d = args.by_fbd
        if args.formula:
            if args.stream or args.gamegraphs:
                raise CliError("--formula only counts rulegraphs")
            budget = enumeration.DEFAULT_TOTAL_DEPTH if args.budget is None else args.budget
            print(enumeration.decimal_string(enumeration.x_total(d, max_depth=budget)))
            return OK
        budget = enumeration.DEFAULT_FBD_BUDGET if args.budget is None else args.budget
        if not (args.stream or args.gamegraphs):
            print(enumeration.enumerate_by_fbd(d, "count", budget=budget))
            return OK
        graphs = (g for g in enumeration.iter_by_fbd(d, budget) if not args.gamegraphs or len(sources(g)) == 1)
        if not args.stream:
            print(sum(1 for _ in graphs))
            return OK
    else:
        if args.formula:
            raise CliError("--formula applies to --by-fbd")
        n = args.by_positions
        if not args.stream:
            print(enumeration.enumerate_simple_rulegraphs(n, "count", args.gamegraphs, budget=args.budget))
            return OK
        graphs = enumeration.enumerate_simple_rulegraphs(n, "stream", args.gamegraphs, budget=args.budget)
    for g in graphs:
        if args.gamegraphs:
            g = Gamegraph(g.labels, g.options)
        _print_json(graph_document(g), compact=True)
    return OK


def cmd_export(args) -> int:
    graph, labeling = _load_graph(args.file)
    if not args.dot:
        raise CliError("choose an export format (--dot)")
    annotations = {name: _values(graph, labeling, name) for name in args.annotate or ()}
    sys.stdout.write(export_dot(graph, annotations))
    return OK


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gamegraph", description="Impartial games as digraphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a built-in game as a graph document")
    p.add_argument("game", help=", ".join(builders.GAME_KINDS))
    p.add_argument("params", nargs="*", help="integer parameters")
    p.add_argument("--allow-large", action="store_true", help="lift the m_graph depth limit to 4")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="evaluate a valuation on every position")
    p.add_argument("file")
    p.add_argument("--valuation", choices=VALUATIONS, default="nim")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sum", help="sum of two graphs")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("check-map", help="check that a map is option preserving")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--map", required=True)
    p.add_argument("--source", action="store_true", help="also require source preservation")
    p.set_defaults(func=cmd_check_map)

    p = sub.add_parser("find-map", help="search for an option-preserving map")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--source", action="store_true")
    p.add_argument("--budget", type=int, default=morphism.DEFAULT_MAP_BUDGET)
    p.set_defaults(func=cmd_find_map)

    p = sub.add_parser("iso", help="isomorphism test")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("check-congruence", help="check a partition for being a congruence")
    p.add_argument("file")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_check_congruence)

    p = sub.add_parser("quotient", help="quotient by a congruence")
    p.add_argument("file")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("minquot", help="minimum quotient")
    p.add_argument("file")
    p.set_defaults(func=cmd_minquot)

    p = sub.add_parser("con-lattice", help="all congruences with their covering relation")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=congruence.DEFAULT_LATTICE_BUDGET)
    p.set_defaults(func=cmd_con_lattice)

    p = sub.add_parser("emul", help="emulational equivalence (isomorphic minimum quotients)")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_emul)

    p = sub.add_parser("enumerate", help="count or list simple rulegraphs")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--by-fbd", type=int, metavar="D")
    group.add_argument("--by-positions", type=int, metavar="N")
    p.add_argument("--gamegraphs", action="store_true", help="only graphs with one source")
    p.add_argument("--stream", action="store_true", help="print graphs as JSON lines")
    p.add_argument("--formula", action="store_true", help="with --by-fbd: use the closed-form count")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("export", help="export a graph")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--annotate", action="append", choices=ANNOTATIONS)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (GamegraphError, CliError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
