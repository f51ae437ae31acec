"""Graph input and output: line DSL, JSON documents, DOT rendering.

The DSL has one declaration per line::

    # comment
    vertex u
    edge b u w

``vertex <id>`` declares a vertex, ``edge <id> <src> <dst>`` an edge between
already-declared vertices; ``#`` starts a comment anywhere in a line.  Ids
are arbitrary non-whitespace tokens not containing ``#``.

The JSON form is ``{"vertices": [ids...], "edges": [{"id","src","dst"}...]}``
with no extra fields; serialization reproduces documents bit-exactly for
canonical data and ``parse(serialize(g)) == g`` in both formats.

Every failure carries located diagnostics: line and column for DSL input,
field paths like ``edges[3].src`` for JSON.  Lexical and structural problems
raise :class:`ParseError`; graph-level problems (duplicate ids, undeclared
endpoints) raise :class:`GraphSemanticError`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional, Union

from .graphs import Edge, Graph
from .verdicts import AnalysisReport

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # "syntax", "schema", or "semantic"
    message: str
    line: Optional[int] = None    # 1-based
    column: Optional[int] = None  # 1-based
    path: Optional[str] = None    # JSON field path

    @property
    def location(self) -> str:
        if self.line is not None:
            loc = f"line {self.line}"
            if self.column is not None:
                loc += f", column {self.column}"
            return loc
        if self.path is not None:
            return self.path
        return "input"

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


class FormatError(Exception):
    """Input could not be turned into a valid graph; see ``diagnostics``."""

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = tuple(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class ParseError(FormatError):
    """Lexical, structural, or schema failure."""


class GraphSemanticError(FormatError):
    """Well-formed input describing an invalid graph."""


@dataclass(frozen=True)
class GraphDocument:
    """A parsed graph plus the source locations of its declarations."""

    source: str
    graph: Graph
    vertex_lines: dict[str, int]
    edge_lines: dict[str, int]


def _raise(diags: list[Diagnostic]) -> None:
    if any(d.kind in ("syntax", "schema") for d in diags):
        raise ParseError(diags)
    if diags:
        raise GraphSemanticError(diags)


def parse_dsl_document(text: str) -> GraphDocument:
    """Parse DSL text, keeping declaration locations for later diagnostics.

    All problems in the input are collected before raising, so one failed
    parse reports every offending line.
    """
    diags: list[Diagnostic] = []
    vertices: list[str] = []
    vertex_lines: dict[str, int] = {}
    edges: list[Edge] = []
    edge_lines: dict[str, int] = {}
    edge_ids: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        word, col = tokens[0]
        if word == "vertex":
            if len(tokens) != 2:
                diags.append(Diagnostic(
                    "syntax", f"expected 'vertex <id>', got {len(tokens) - 1} argument(s)",
                    line=lineno, column=col))
                continue
            vid, vcol = tokens[1]
            if vid in vertex_lines:
                diags.append(Diagnostic(
                    "semantic",
                    f"duplicate vertex id {vid!r} (first declared on line {vertex_lines[vid]})",
                    line=lineno, column=vcol))
                continue
            vertices.append(vid)
            vertex_lines[vid] = lineno
        elif word == "edge":
            if len(tokens) != 4:
                diags.append(Diagnostic(
                    "syntax", f"expected 'edge <id> <src> <dst>', got {len(tokens) - 1} argument(s)",
                    line=lineno, column=col))
                continue
            eid, ecol = tokens[1]
            src, scol = tokens[2]
            dst, dcol = tokens[3]
            bad = False
            if eid in edge_ids:
                diags.append(Diagnostic(
                    "semantic",
                    f"duplicate edge id {eid!r} (first declared on line {edge_lines[eid]})",
                    line=lineno, column=ecol))
                bad = True
            if src not in vertex_lines:
                diags.append(Diagnostic(
                    "semantic", f"undeclared vertex {src!r}", line=lineno, column=scol))
                bad = True
            if dst not in vertex_lines:
                diags.append(Diagnostic(
                    "semantic", f"undeclared vertex {dst!r}", line=lineno, column=dcol))
                bad = True
            if bad:
                continue
            edges.append(Edge(eid, src, dst))
            edge_ids.add(eid)
            edge_lines[eid] = lineno
        else:
            diags.append(Diagnostic(
                "syntax", f"unknown directive {word!r}", line=lineno, column=col))

    _raise(diags)
    g = Graph(tuple(vertices), tuple(edges))
    g.require_valid()  # unreachable failure; parsing enforces the invariants
    return GraphDocument(text, g, vertex_lines, edge_lines)


def parse_dsl(text: str) -> Graph:
    return parse_dsl_document(text).graph


_DSL_ID = re.compile(r"[^\s#]+\Z")


def serialize_dsl(g: Graph) -> str:
    """Render a graph in the DSL; inverse of :func:`parse_dsl`.

    Ids containing whitespace or '#' cannot be written in this format and
    raise ValueError; use the JSON form for such graphs.
    """
    g.require_valid()
    for name in (*g.vertices, *(e.id for e in g.edges)):
        if not _DSL_ID.match(name):
            raise ValueError(f"id {name!r} cannot be written in the DSL")
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.id} {e.src} {e.dst}" for e in g.edges]
    return "\n".join(lines) + "\n"


def parse_json(document: Union[str, dict]) -> Graph:
    """Parse the JSON graph form from a decoded dict or raw text.

    Schema problems raise :class:`ParseError` with the offending field path;
    duplicate ids and dangling endpoints raise :class:`GraphSemanticError`.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError([Diagnostic(
                "syntax", f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno)]) from None

    diags: list[Diagnostic] = []
    if not isinstance(document, dict):
        _raise([Diagnostic("schema", "document must be an object", path="$")])
    for key in document:
        if key not in ("vertices", "edges"):
            diags.append(Diagnostic("schema", f"unexpected field {key!r}", path=str(key)))
    for key in ("vertices", "edges"):
        if key not in document:
            diags.append(Diagnostic("schema", f"missing field {key!r}", path="$"))
    if diags:
        _raise(diags)

    vertices: list[str] = []
    if not isinstance(document["vertices"], list):
        diags.append(Diagnostic("schema", "must be an array", path="vertices"))
    else:
        for i, v in enumerate(document["vertices"]):
            if not isinstance(v, str):
                diags.append(Diagnostic("schema", "vertex id must be a string", path=f"vertices[{i}]"))
            else:
                vertices.append(v)

    edges: list[Edge] = []
    if not isinstance(document["edges"], list):
        diags.append(Diagnostic("schema", "must be an array", path="edges"))
    else:
        for i, e in enumerate(document["edges"]):
            if not isinstance(e, dict):
                diags.append(Diagnostic("schema", "edge must be an object", path=f"edges[{i}]"))
                continue
            ok = True
            for key in e:
                if key not in ("id", "src", "dst"):
                    diags.append(Diagnostic(
                        "schema", f"unexpected field {key!r}", path=f"edges[{i}].{key}"))
                    ok = False
            for key in ("id", "src", "dst"):
                if key not in e:
                    diags.append(Diagnostic("schema", f"missing field {key!r}", path=f"edges[{i}]"))
                    ok = False
                elif not isinstance(e[key], str):
                    diags.append(Diagnostic("schema", "must be a string", path=f"edges[{i}].{key}"))
                    ok = False
            if ok:
                edges.append(Edge(e["id"], e["src"], e["dst"]))
    if diags:
        _raise(diags)

    declared = set(vertices)
    seen_v: set[str] = set()
    for i, v in enumerate(vertices):
        if v in seen_v:
            diags.append(Diagnostic("semantic", f"duplicate vertex id {v!r}", path=f"vertices[{i}]"))
        seen_v.add(v)
    seen_e: set[str] = set()
    for i, e in enumerate(edges):
        if e.id in seen_e:
            diags.append(Diagnostic("semantic", f"duplicate edge id {e.id!r}", path=f"edges[{i}].id"))
        seen_e.add(e.id)
        if e.src not in declared:
            diags.append(Diagnostic("semantic", f"undeclared vertex {e.src!r}", path=f"edges[{i}].src"))
        if e.dst not in declared:
            diags.append(Diagnostic("semantic", f"undeclared vertex {e.dst!r}", path=f"edges[{i}].dst"))
    _raise(diags)

    g = Graph(tuple(vertices), tuple(edges))
    g.require_valid()
    return g


def serialize_json(g: Graph) -> dict:
    """Plain-data JSON form; inverse of :func:`parse_json` on canonical
    documents, including key order."""
    g.require_valid()
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in g.edges],
    }


def _dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(target: Union[Graph, AnalysisReport]) -> str:
    """Render a graph (or an analysis report) as deterministic DOT text.

    In report mode the edges of the exitless cycle witnessing a Condition (L)
    failure are drawn red, and vertices lying in some nontrivial proper
    saturated hereditary subset are filled grey.
    """
    if isinstance(target, AnalysisReport):
        g = target.graph
        report: Optional[AnalysisReport] = target
    else:
        g = target
        report = None
    g.require_valid()

    cycle_edges: frozenset[str] = frozenset()
    marked_vertices: frozenset[str] = frozenset()
    header: list[str] = []
    if report is not None:
        if report.violating_cycle is not None:
            cycle_edges = frozenset(report.violating_cycle.edges)
        full = frozenset(g.vertices)
        marked_vertices = frozenset(
            v
            for s in report.saturated_hereditary_lattice.elements
            if s and s != full
            for v in s)
        header.append(f"  // simplicity: {report.simplicity}")

    lines = ["digraph G {"]
    lines += header
    for v in g.vertices:
        attrs = ""
        if v in marked_vertices:
            attrs = " [style=filled, fillcolor=lightgrey]"
        lines.append(f"  {_dot_quote(v)}{attrs};")
    for e in g.edges:
        attrs = [f"label={_dot_quote(e.id)}"]
        if e.id in cycle_edges:
            attrs.append("color=red")
        lines.append(
            f"  {_dot_quote(e.src)} -> {_dot_quote(e.dst)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
