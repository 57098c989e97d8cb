"""JSON documents for graphs, maps and partitions, and DOT export.

Labels are the only identity shared between files: a map or partition
document names positions by label and is resolved against a graph.

Graph document::

    {"positions": ["2", "1", "0"],
     "arrows": [["2", "1"], ["2", "0"], ["1", "0"]],
     "start": "2",
     "terminal_labels": {"0": "P"}}

``start`` and ``terminal_labels`` are optional; a document with ``start``
is read as a gamegraph.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from .errors import ParseError
from .graph import Gamegraph, Rulegraph, new_gamegraph, new_rulegraph
from .morphism import PositionMap
from .partition import Partition

__all__ = [
    "graph_document",
    "parse_graph",
    "serialize_graph",
    "parse_map",
    "serialize_map",
    "parse_partition",
    "serialize_partition",
    "export_dot",
]

Labeling = dict[int, str]


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None


def _object(doc: Any, keys: set[str], required: set[str]) -> dict:
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", "document")
    unknown = sorted(set(doc) - keys)
    if unknown:
        raise ParseError(f"unknown key {unknown[0]!r}", "document")
    for key in sorted(required):
        if key not in doc:
            raise ParseError(f"missing key {key!r}", "document")
    return doc


def _string_list(value: Any, where: str) -> list[str]:
    if not isinstance(value, list):
        raise ParseError("expected a list", where)
    for i, x in enumerate(value):
        if not isinstance(x, str):
            raise ParseError("expected a string", f"{where}[{i}]")
    return value


def parse_graph(text: str) -> tuple[Rulegraph, Labeling | None]:
    """Read a graph document; returns the graph and the terminal labelling, if any.

    Malformed JSON or schema problems raise :class:`ParseError` with a
    location; structural problems (cycles, duplicate labels, several
    sources) raise the corresponding validation error.
    """
    doc = _object(_load(text), {"positions", "arrows", "start", "terminal_labels"}, {"positions", "arrows"})
    labels = _string_list(doc["positions"], "positions")
    arrows = doc["arrows"]
    if not isinstance(arrows, list):
        raise ParseError("expected a list", "arrows")
    pairs = []
    for i, arrow in enumerate(arrows):
        _string_list(arrow, f"arrows[{i}]")
        if len(arrow) != 2:
            raise ParseError("an arrow is a [from, to] pair", f"arrows[{i}]")
        pairs.append((arrow[0], arrow[1]))
    start = doc.get("start")
    if start is not None:
        if not isinstance(start, str):
            raise ParseError("expected a string", "start")
        graph: Rulegraph = new_gamegraph(labels, pairs, start)
    else:
        graph = new_rulegraph(labels, pairs)
    labeling = None
    if "terminal_labels" in doc:
        raw = doc["terminal_labels"]
        if not isinstance(raw, dict):
            raise ParseError("expected an object", "terminal_labels")
        labeling = {}
        for label, value in raw.items():
            if label not in labels:
                raise ParseError(f"unknown position {label!r}", "terminal_labels")
            if value not in ("P", "N"):
                raise ParseError(f"outcome must be 'P' or 'N', got {value!r}", f"terminal_labels.{label}")
            labeling[graph.id_of(label)] = value
    return graph, labeling


def graph_document(graph: Rulegraph, labeling: Mapping[int, str] | None = None) -> dict:
    """Positions in id order, arrows sorted by (from, to) id."""
    doc: dict[str, Any] = {
        "positions": list(graph.labels),
        "arrows": [[graph.labels[p], graph.labels[q]] for p, q in sorted(graph.arrows())],
    }
    if isinstance(graph, Gamegraph):
        doc["start"] = graph.labels[graph.start]
    if labeling:
        doc["terminal_labels"] = {graph.labels[p]: labeling[p] for p in sorted(labeling)}
    return doc


def serialize_graph(graph: Rulegraph, labeling: Mapping[int, str] | None = None, indent: int | None = 2) -> str:
    """Graph document text; with an indent, one position or arrow per line."""
    doc = graph_document(graph, labeling)
    if indent is None:
        return json.dumps(doc, ensure_ascii=False)
    pad = " " * indent

    def dump(value) -> str:
        return json.dumps(value, ensure_ascii=False)

    parts = []
    for key, value in doc.items():
        if isinstance(value, list) and value:
            body = ",\n".join(pad * 2 + dump(x) for x in value)
            parts.append(f"{pad}{dump(key)}: [\n{body}\n{pad}]")
        else:
            parts.append(f"{pad}{dump(key)}: {dump(value)}")
    return "{\n" + ",\n".join(parts) + "\n}"


def parse_map(text: str, domain: Rulegraph, codomain: Rulegraph) -> PositionMap:
    """Read ``{"map": {"srcLabel": "dstLabel", ...}}``; the map must be total."""
    doc = _object(_load(text), {"map"}, {"map"})
    mapping = doc["map"]
    if not isinstance(mapping, dict):
        raise ParseError("expected an object", "map")
    for key, value in mapping.items():
        if key not in domain.labels:
            raise ParseError(f"unknown source position {key!r}", "map")
        if not isinstance(value, str) or value not in codomain.labels:
            raise ParseError(f"unknown target position {value!r}", f"map.{key}")
    missing = [x for x in domain.labels if x not in mapping]
    if missing:
        raise ParseError(f"map is not total; no image for {missing[0]!r}", "map")
    return PositionMap.from_labels(domain, codomain, mapping)


def serialize_map(alpha: PositionMap, indent: int | None = 2) -> str:
    return json.dumps({"map": alpha.label_mapping()}, ensure_ascii=False, indent=indent)


def parse_partition(text: str, graph: Rulegraph) -> Partition:
    """Read ``{"blocks": [["a", "b"], ...]}``; unmentioned positions are singletons."""
    doc = _object(_load(text), {"blocks"}, {"blocks"})
    blocks = doc["blocks"]
    if not isinstance(blocks, list):
        raise ParseError("expected a list", "blocks")
    seen: set[str] = set()
    for i, block in enumerate(blocks):
        _string_list(block, f"blocks[{i}]")
        for label in block:
            if label not in graph.labels:
                raise ParseError(f"unknown position {label!r}", f"blocks[{i}]")
            if label in seen:
                raise ParseError(f"position {label!r} appears in two blocks", f"blocks[{i}]")
            seen.add(label)
    return Partition.from_labels(graph, blocks)


def serialize_partition(pi: Partition, graph: Rulegraph, indent: int | None = 2) -> str:
    return json.dumps({"blocks": pi.label_blocks(graph)}, ensure_ascii=False, indent=indent)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph: Rulegraph, annotations: Mapping[str, Sequence[object]] | None = None) -> str:
    """Graphviz text: one node per position, one edge per arrow.

    ``annotations`` maps a name such as ``"nim"`` to one value per position;
    each node label then reads like ``1 [nim=1]``. The start of a gamegraph
    is drawn with a double border.
    """
    annotations = dict(annotations or {})
    for name, values in annotations.items():
        if len(values) != graph.n:
            raise ValueError(f"annotation {name!r} has {len(values)} values for {graph.n} positions")
    lines = ["digraph G {"]
    for p in graph.positions():
        text = graph.labels[p]
        if annotations:
            text += " [" + ", ".join(f"{name}={values[p]}" for name, values in annotations.items()) + "]"
        attrs = f"label={_quote(text)}"
        if isinstance(graph, Gamegraph) and p == graph.start:
            attrs += ", peripheries=2"
        lines.append(f"  p{p} [{attrs}];")
    for p, q in sorted(graph.arrows()):
        lines.append(f"  p{p} -> p{q};")
    lines.append("}")
    return "\n".join(lines) + "\n"
