"""Text formats for coloured graphs and 2-interval instances, plus the JSON
provenance sidecar written next to generated instances.

Graph file::

    # comment
    k 3
    v 1 1
    v 2 2
    e 1 2

Instance file::

    relations n,c
    d v:1 0 4 90 94
"""

from __future__ import annotations

import json
from pathlib import Path

from .model import ColouredGraph, Instance, Interval, ModelError, RelationSet, TwoInterval
from .reduction import Part, ReductionInstance, Role


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        where = [x for x in (source, f"line {line}" if line is not None else None) if x]
        super().__init__(": ".join(where + [message]))
        self.line = line


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", line) from None


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def parse_graph(text: str) -> ColouredGraph:
    k = None
    colours: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    for no, toks in _lines(text):
        tag = toks[0]
        if tag == "k":
            if len(toks) != 2:
                raise ParseError("expected 'k <int>'", no)
            if k is not None:
                raise ParseError("duplicate 'k' header", no)
            k = _int(toks[1], no, "k")
        elif tag == "v":
            if len(toks) != 3:
                raise ParseError("expected 'v <id> <colour>'", no)
            v, c = _int(toks[1], no, "vertex id"), _int(toks[2], no, "colour")
            if v in colours:
                raise ParseError(f"duplicate vertex {v}", no)
            colours[v] = c
        elif tag == "e":
            if len(toks) != 3:
                raise ParseError("expected 'e <u> <v>'", no)
            edges.append((_int(toks[1], no, "vertex id"), _int(toks[2], no, "vertex id")))
        else:
            raise ParseError(f"unknown line type {tag!r}", no)
    if k is None:
        raise ParseError("missing 'k <int>' header")
    try:
        return ColouredGraph.from_edges(k, colours, edges)
    except ModelError as exc:
        raise ParseError(str(exc)) from exc


def emit_graph(g: ColouredGraph) -> str:
    out = [f"k {g.k}"]
    out += [f"v {v} {c}" for v, c in g.colour_of.items()]
    out += [f"e {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> Instance:
    relations = None
    items: list[TwoInterval] = []
    seen: set[str] = set()
    for no, toks in _lines(text):
        tag = toks[0]
        if tag == "relations":
            if len(toks) != 2:
                raise ParseError("expected 'relations <tokens>'", no)
            if relations is not None:
                raise ParseError("duplicate 'relations' header", no)
            try:
                relations = RelationSet.parse(toks[1])
            except ModelError as exc:
                raise ParseError(str(exc), no) from None
        elif tag == "d":
            if len(toks) != 6:
                raise ParseError("expected 'd <label> <x1> <x2> <x3> <x4>'", no)
            if toks[1] in seen:
                raise ParseError(f"duplicate label {toks[1]!r}", no)
            seen.add(toks[1])
            xs = [_int(t, no, "coordinate") for t in toks[2:]]
            if not xs[0] < xs[1] < xs[2] < xs[3]:
                raise ParseError(f"coordinates must satisfy x1<x2<x3<x4, got {xs}", no)
            items.append(TwoInterval(Interval(xs[0], xs[1]), Interval(xs[2], xs[3]), toks[1]))
        else:
            raise ParseError(f"unknown line type {tag!r}", no)
    if relations is None:
        raise ParseError("missing 'relations' header")
    try:
        return Instance(tuple(items), relations)
    except ModelError as exc:
        raise ParseError(str(exc)) from exc


def emit_instance(inst: Instance) -> str:
    out = [f"relations {inst.relations.tokens()}"]
    for d in inst.two_intervals:
        if any(ch.isspace() for ch in d.label):
            raise ValueError(f"label {d.label!r} contains whitespace")
        out.append(f"d {d.label} {d.left.lo} {d.left.hi} {d.right.lo} {d.right.hi}")
    return "\n".join(out) + "\n"


def provenance_to_json(r: ReductionInstance) -> dict:
    return {
        "variant": r.variant.value,
        "k_prime": r.k_prime,
        "S": r.params.S,
        "regions": [{"gadget": g, "lo": lo, "hi": hi} for g, lo, hi in r.region_spans],
        "roles": {
            label: {
                "role": role.kind,
                "ends": list(role.ends),
                "parts": [{"gadget": p.gadget, "row": p.row, "col": p.col} for p in role.parts],
            }
            for label, role in r.provenance.items()
        },
    }


def roles_from_json(data: dict) -> dict[str, Role]:
    roles = {}
    for label, rec in data.get("roles", {}).items():
        a, b = (Part(p["gadget"], int(p["row"]), int(p["col"])) for p in rec["parts"])
        roles[label] = Role(rec["role"], tuple(rec["ends"]), (a, b))
    return roles


def read_text(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def read_provenance(path: str | Path) -> dict:
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad provenance JSON: {exc}", source=str(path)) from None


def write_provenance(path: str | Path, r: ReductionInstance) -> None:
    write_text(path, json.dumps(provenance_to_json(r), indent=1, sort_keys=True) + "\n")
