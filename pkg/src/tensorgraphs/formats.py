"""Graph document formats and DOT export.

Documents are UTF-8 JSON with a fixed top-level shape:

colored-tensor-graph, version 1::

    {"format": "colored-tensor-graph", "version": 1, "rank": 3,
     "whites": ["w1", ...], "blacks": ["b1", ...],
     "edges": [{"color": 0, "white": "w1", "black": "b1"}, ...]}

stranded-tensor-graph, version 1::

    {"format": "stranded-tensor-graph", "version": 1, "rank": 3,
     "vertices": [{"id": "v", "halfedges": ["h0", "h1", "h2", "h3"]}, ...],
     "edges": [{"halfedges": ["h0", "h1"],
                "strand_permutation": [0, 1, 2]}, ...]}

``strand_permutation`` may be omitted and defaults to the identity, so
files derived from colored graphs stay short.  Serialization uses a
canonical key order and round-trips exactly.
"""

from __future__ import annotations

import json

from .core import (
    ColoredGraph,
    StrandedGraph,
    build_colored,
    build_stranded,
    identity_permutation,
)
from .errors import ParseError, UnknownFormat, VersionUnsupported

COLORED_FORMAT = "colored-tensor-graph"
STRANDED_FORMAT = "stranded-tensor-graph"
FORMAT_VERSION = 1


def _need(obj: dict, key: str, kind: type, location: str):
    if key not in obj:
        raise ParseError(f"missing field {key!r}", location)
    value = obj[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise ParseError(f"field {key!r} must be {kind.__name__}", location)
    return value


def _string_list(obj: dict, key: str, location: str) -> list[str]:
    values = _need(obj, key, list, location)
    for i, v in enumerate(values):
        if not isinstance(v, str):
            raise ParseError("expected a string", f"{location}.{key}[{i}]")
    return values


def parse_graph(document: bytes | str) -> ColoredGraph | StrandedGraph:
    """Parse and build a graph document; the result is always validated.

    Malformed JSON or missing/ill-typed fields raise ParseError with the
    offending location; unrecognized format tags raise UnknownFormat and
    unsupported versions VersionUnsupported.  Graph-level problems
    (duplicate colors, dangling half-edges, ...) surface as the builder
    errors, naming the offending element.
    """
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as err:
            raise ParseError(f"document is not UTF-8: {err}") from None
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as err:
        raise ParseError(f"invalid JSON: {err.msg}", f"line {err.lineno} column {err.colno}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be an object", "document")

    fmt = _need(obj, "format", str, "document")
    if fmt not in (COLORED_FORMAT, STRANDED_FORMAT):
        raise UnknownFormat(f"unrecognized format {fmt!r}")
    version = _need(obj, "version", int, "document")
    if version != FORMAT_VERSION:
        raise VersionUnsupported(f"version {version} unsupported; this build reads version {FORMAT_VERSION}")
    rank = _need(obj, "rank", int, "document")

    if fmt == COLORED_FORMAT:
        whites = _string_list(obj, "whites", "document")
        blacks = _string_list(obj, "blacks", "document")
        raw_edges = _need(obj, "edges", list, "document")
        edges = []
        for i, entry in enumerate(raw_edges):
            where = f"edges[{i}]"
            if not isinstance(entry, dict):
                raise ParseError("expected an object", where)
            edges.append((
                _need(entry, "color", int, where),
                _need(entry, "white", str, where),
                _need(entry, "black", str, where),
            ))
        return build_colored(rank, whites, blacks, edges)

    raw_vertices = _need(obj, "vertices", list, "document")
    vertices = []
    for i, entry in enumerate(raw_vertices):
        where = f"vertices[{i}]"
        if not isinstance(entry, dict):
            raise ParseError("expected an object", where)
        vertices.append((
            _need(entry, "id", str, where),
            _string_list(entry, "halfedges", where),
        ))
    raw_edges = _need(obj, "edges", list, "document")
    edges = []
    for i, entry in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(entry, dict):
            raise ParseError("expected an object", where)
        ends = _string_list(entry, "halfedges", where)
        if len(ends) != 2:
            raise ParseError("field 'halfedges' must hold exactly two labels", where)
        perm = None
        if "strand_permutation" in entry:
            perm = entry["strand_permutation"]
            if not isinstance(perm, list) or any(
                isinstance(x, bool) or not isinstance(x, int) for x in perm
            ):
                raise ParseError("field 'strand_permutation' must be a list of integers", where)
        edges.append(((ends[0], ends[1]), perm))
    return build_stranded(rank, vertices, edges)


def _dump(obj: dict) -> bytes:
    # insertion order is the canonical key order
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def serialize_graph(g: ColoredGraph | StrandedGraph) -> bytes:
    """Canonical document bytes; parse(serialize(g)) == g."""
    if isinstance(g, ColoredGraph):
        return _dump({
            "format": COLORED_FORMAT,
            "version": FORMAT_VERSION,
            "rank": g.rank,
            "whites": list(g.whites),
            "blacks": list(g.blacks),
            "edges": [
                {"color": e.color, "white": e.white, "black": e.black}
                for e in g.edges()
            ],
        })
    ident = identity_permutation(g.rank)
    edges = []
    for e in g.edges:
        entry: dict = {"halfedges": list(e.halfedges)}
        if e.permutation != ident:
            entry["strand_permutation"] = list(e.permutation)
        edges.append(entry)
    return _dump({
        "format": STRANDED_FORMAT,
        "version": FORMAT_VERSION,
        "rank": g.rank,
        "vertices": [
            {"id": v.label, "halfedges": list(v.halfedges)} for v in g.vertices
        ],
        "edges": edges,
    })


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: ColoredGraph | StrandedGraph) -> bytes:
    """DOT rendering: hollow circles for whites, filled for blacks,
    edge ``color`` attribute carrying the color id."""
    lines = ["graph tensorgraph {"]
    if isinstance(g, ColoredGraph):
        for label in g.whites:
            lines.append(f"  {_quote(label)} [shape=circle, style=solid];")
        for label in g.blacks:
            lines.append(f"  {_quote(label)} [shape=circle, style=filled, fillcolor=black];")
        for e in g.edges():
            lines.append(
                f"  {_quote(e.white)} -- {_quote(e.black)} "
                f"[color={e.color}, label={e.color}];")
    else:
        ident = identity_permutation(g.rank)
        for v in g.vertices:
            lines.append(f"  {_quote(v.label)} [shape=circle];")
        for e in g.edges:
            r1 = g.halfedge_refs[e.halfedges[0]]
            r2 = g.halfedge_refs[e.halfedges[1]]
            label = f"{e.halfedges[0]}/{e.halfedges[1]}"
            if e.permutation != ident:
                label += " twist " + ",".join(str(k) for k in e.permutation)
            lines.append(
                f"  {_quote(r1.vertex)} -- {_quote(r2.vertex)} [label={_quote(label)}];")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")
