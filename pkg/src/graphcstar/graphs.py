"""Finite directed multigraphs with ordered vertices and edges.

The graphs here are the combinatorial substrate for everything else in the
package: an edge ``e`` is emitted at ``src(e)`` and received at ``dst(e)``,
parallel edges and self-loops are allowed, and the declaration order of
vertices and edges is significant.  Every enumeration in this module (paths,
cycles, power graphs) breaks ties by declaration order, so results are
deterministic and reproducible across runs.

A path ``e1 e2 ... en`` requires ``dst(e_i) == src(e_{i+1})``; its source is
``src(e1)`` and its range is ``dst(en)``.  A cycle is a path whose source
equals its range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Optional

DEFAULT_POWER_CAP = 10**6
DEFAULT_CYCLE_CAP = 10**6


class CapExceeded(Exception):
    """An enumeration would exceed its configured size cap.

    No partial results are produced: callers either get the complete answer
    or this error.
    """


class ValidationIssue(NamedTuple):
    kind: str      # "duplicate id" or "dangling endpoint"
    offender: str  # the vertex or edge id at fault
    message: str

    def __str__(self) -> str:
        return self.message


@dataclass(frozen=True)
class ValidationResult:
    issues: tuple[ValidationIssue, ...]

    @property
    def ok(self) -> bool:
        return not self.issues


class InvalidGraphError(ValueError):
    """Raised when an operation requires a graph whose invariants fail."""

    def __init__(self, result: ValidationResult):
        self.result = result
        super().__init__("; ".join(i.message for i in result.issues))


class Edge(NamedTuple):
    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Graph:
    """A finite directed multigraph with named vertices and edges.

    Construction does not validate; call :meth:`validate` to collect every
    invariant violation, or build through :meth:`checked` to raise on the
    first invalid input.  All other operations assume (and check) a valid
    graph.  Instances are immutable and safe to share between threads.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))

    @classmethod
    def checked(cls, vertices: Iterable[str], edges: Iterable[Edge | tuple[str, str, str]]) -> "Graph":
        g = cls(tuple(vertices), tuple(edges))
        g.require_valid()
        return g

    def validate(self) -> ValidationResult:
        """Check all graph invariants, reporting every violation.

        Invariants: vertex ids are unique, edge ids are unique, and both
        endpoints of every edge are declared vertices.
        """
        issues: list[ValidationIssue] = []
        seen_v: set[str] = set()
        for v in self.vertices:
            if v in seen_v:
                issues.append(ValidationIssue("duplicate id", v, f"duplicate vertex id {v!r}"))
            seen_v.add(v)
        seen_e: set[str] = set()
        for e in self.edges:
            if e.id in seen_e:
                issues.append(ValidationIssue("duplicate id", e.id, f"duplicate edge id {e.id!r}"))
            seen_e.add(e.id)
            if e.src not in seen_v:
                issues.append(ValidationIssue(
                    "dangling endpoint", e.id,
                    f"edge {e.id!r} has undeclared src vertex {e.src!r}"))
            if e.dst not in seen_v:
                issues.append(ValidationIssue(
                    "dangling endpoint", e.id,
                    f"edge {e.id!r} has undeclared dst vertex {e.dst!r}"))
        return ValidationResult(tuple(issues))

    @cached_property
    def _validation(self) -> ValidationResult:
        return self.validate()

    def require_valid(self) -> None:
        if not self._validation.ok:
            raise InvalidGraphError(self._validation)

    # Index structures below assume a valid graph.

    @cached_property
    def vertex_pos(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def edge_pos(self) -> dict[str, int]:
        return {e.id: i for i, e in enumerate(self.edges)}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.dst].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        """Edges emitted at ``v``, in declaration order."""
        self.require_valid()
        if v not in self.vertex_pos:
            raise ValueError(f"unknown vertex {v!r}")
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        """Edges received at ``v``, in declaration order."""
        self.require_valid()
        if v not in self.vertex_pos:
            raise ValueError(f"unknown vertex {v!r}")
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self.out_edges(v))

    def in_degree(self, v: str) -> int:
        return len(self.in_edges(v))

    def adjacency_matrix(self) -> list[list[int]]:
        """Integer matrix ``M[i][j]`` = number of edges from vertex i to vertex j.

        Row and column order follow vertex declaration order.  Entry sums of
        the n-th matrix power count paths of length n, which makes this the
        reference oracle for path enumeration.
        """
        self.require_valid()
        pos = self.vertex_pos
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for e in self.edges:
            m[pos[e.src]][pos[e.dst]] += 1
        return m

    def path(self, edge_ids: Iterable[str]) -> "Path":
        """Build a validated path from a sequence of edge ids.

        Raises ValueError on unknown ids or non-composable consecutive edges.
        """
        self.require_valid()
        ids = tuple(edge_ids)
        if not ids:
            raise ValueError("path needs at least one edge")
        for eid in ids:
            if eid not in self.edge_map:
                raise ValueError(f"unknown edge {eid!r}")
        for i in range(len(ids) - 1):
            a, b = self.edge_map[ids[i]], self.edge_map[ids[i + 1]]
            if a.dst != b.src:
                raise ValueError(
                    f"edges do not compose at position {i + 1}: "
                    f"{a.id!r} ends at {a.dst!r} but {b.id!r} starts at {b.src!r}")
        return Path(self, ids)


@dataclass(frozen=True)
class Path:
    """A composable sequence of edge ids in a fixed graph.

    Equality and hashing use the edge sequence only; the graph reference is
    carried for convenience.  Construct through :meth:`Graph.path` unless the
    sequence is already known to compose.
    """

    graph: Graph = field(compare=False, repr=False)
    edges: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def source(self) -> str:
        return self.graph.edge_map[self.edges[0]].src

    @property
    def range(self) -> str:
        return self.graph.edge_map[self.edges[-1]].dst

    def is_cycle(self) -> bool:
        return self.source == self.range

    def __str__(self) -> str:
        return " ".join(self.edges)


class VertexClasses(NamedTuple):
    sinks: frozenset[str]      # emit no edge
    sources: frozenset[str]    # receive no edge
    regular: frozenset[str]    # emit at least one edge


class Connectivity(NamedTuple):
    weakly_connected: bool
    strongly_connected: bool


def vertex_classes(g: Graph) -> VertexClasses:
    """Partition information: sinks, sources, and regular (non-sink) vertices."""
    g.require_valid()
    sinks = frozenset(v for v in g.vertices if not g._out[v])
    sources = frozenset(v for v in g.vertices if not g._in[v])
    regular = frozenset(v for v in g.vertices if g._out[v])
    return VertexClasses(sinks, sources, regular)


def paths_of_length(
    g: Graph,
    n: int,
    from_vertices: Optional[Iterable[str]] = None,
    to_vertices: Optional[Iterable[str]] = None,
) -> list[Path]:
    """All paths of exactly ``n`` edges, in lexicographic edge order.

    Lexicographic means: compare paths position by position using edge
    declaration order.  ``from_vertices`` filters on the path source,
    ``to_vertices`` on the path range.  An empty result is valid.
    """
    g.require_valid()
    if n < 1:
        raise ValueError("path length must be at least 1")
    src_filter = _vertex_set(g, from_vertices)
    dst_filter = _vertex_set(g, to_vertices)

    # Grow (edge tuple, range vertex) pairs; extending in edge order keeps
    # the whole list lexicographically sorted at every stage.
    current: list[tuple[tuple[str, ...], str]] = [
        ((e.id,), e.dst)
        for e in g.edges
        if src_filter is None or e.src in src_filter
    ]
    for _ in range(n - 1):
        nxt: list[tuple[tuple[str, ...], str]] = []
        for seq, rng in current:
            for e in g._out[rng]:
                nxt.append((seq + (e.id,), e.dst))
        current = nxt
    return [
        Path(g, seq) for seq, rng in current
        if dst_filter is None or rng in dst_filter
    ]


def _vertex_set(g: Graph, vs: Optional[Iterable[str]]) -> Optional[frozenset[str]]:
    if vs is None:
        return None
    out = frozenset(vs)
    for v in out:
        if v not in g.vertex_pos:
            raise ValueError(f"unknown vertex {v!r}")
    return out


def count_paths(g: Graph, n: int) -> int:
    """Number of paths of length ``n``, via adjacency matrix powers (exact)."""
    g.require_valid()
    if n < 1:
        raise ValueError("path length must be at least 1")
    m = matrix_power(g.adjacency_matrix(), n)
    return sum(sum(row) for row in m)


def matrix_power(m: list[list[int]], n: int) -> list[list[int]]:
    """n-th power of a square integer matrix, exact arithmetic, n >= 1."""
    if n < 1:
        raise ValueError("exponent must be at least 1")
    result = m
    for _ in range(n - 1):
        result = matmul(result, m)
    return result


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def power_graph(g: Graph, n: int, cap: int = DEFAULT_POWER_CAP) -> Graph:
    """The graph whose edges are the length-``n`` paths of ``g``.

    Vertices are unchanged; each length-n path becomes one edge from its
    source to its range, with id the constituent edge ids joined by ".".
    Edges appear in lexicographic path order.  ``power_graph(g, 1)`` equals
    ``g``.  Refuses with :class:`CapExceeded` when the result would have more
    than ``cap`` edges.
    """
    g.require_valid()
    if n < 1:
        raise ValueError("power must be at least 1")
    total = count_paths(g, n)
    if total > cap:
        raise CapExceeded(f"power graph too large: {total} edges exceeds cap {cap}")
    edges = []
    for p in paths_of_length(g, n):
        first = g.edge_map[p.edges[0]]
        last = g.edge_map[p.edges[-1]]
        edges.append(Edge(".".join(p.edges), first.src, last.dst))
    result = Graph(g.vertices, tuple(edges))
    check = result.validate()
    if not check.ok:
        # Only possible when original edge ids contain the "." separator.
        raise ValueError(
            "power graph edge ids collide; avoid '.' in edge ids: "
            + "; ".join(i.message for i in check.issues))
    return result


def simple_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[Path]:
    """All elementary cycles, one canonical representative per rotation class.

    A cycle is elementary when its edge sources are pairwise distinct, i.e.
    it passes through each vertex at most once.  Rotations of a cycle revisit
    the same edges, so only the representative based at the cycle's earliest
    vertex (in declaration order) is emitted; among cycles with the same base
    the order is lexicographic in edge order.  Parallel edges and self-loops
    yield distinct cycles.

    Raises :class:`CapExceeded` when more than ``cap`` cycles exist.
    """
    g.require_valid()
    pos = g.vertex_pos
    result: list[Path] = []

    def dfs(v: str, base_pos: int, base: str, trail: list[str], on_trail: set[str]) -> None:
        for e in g._out[v]:
            if e.dst == base:
                trail.append(e.id)
                result.append(Path(g, tuple(trail)))
                trail.pop()
                if len(result) > cap:
                    raise CapExceeded(f"cycle enumeration exceeds cap {cap}")
            elif pos[e.dst] > base_pos and e.dst not in on_trail:
                trail.append(e.id)
                on_trail.add(e.dst)
                dfs(e.dst, base_pos, base, trail, on_trail)
                on_trail.discard(e.dst)
                trail.pop()

    for base in g.vertices:
        dfs(base, pos[base], base, [], {base})
    return result


def cycle_exits(g: Graph, cycle: Path) -> list[str]:
    """Edge ids that exit the given cycle, in edge declaration order.

    An edge ``f`` is an exit when some cycle position ``i`` satisfies
    ``src(f) == src(e_i)`` and ``f != e_i``.  Raises ValueError when the
    argument is not a cycle of this graph.
    """
    g.require_valid()
    for eid in cycle.edges:
        if eid not in g.edge_map:
            raise ValueError(f"unknown edge {eid!r}")
    if not cycle.edges:
        raise ValueError("not a cycle: empty path")
    gp = g.path(cycle.edges)  # re-validates composability
    if gp.source != gp.range:
        raise ValueError("not a cycle: source differs from range")
    used_at: dict[str, set[str]] = {}
    for eid in cycle.edges:
        e = g.edge_map[eid]
        used_at.setdefault(e.src, set()).add(eid)
    exits = []
    for f in g.edges:
        used = used_at.get(f.src)
        if used is not None and used != {f.id}:
            exits.append(f.id)
    return exits


def connectivity(g: Graph) -> Connectivity:
    """Weak and strong connectivity of a nonempty graph.

    Weak: every vertex is reachable from every other ignoring direction.
    Strong: for every ordered pair (v, w), including v == w, there is a
    directed path of length at least one from v to w.  A single vertex
    without a loop is weakly but not strongly connected.
    """
    g.require_valid()
    if not g.vertices:
        raise ValueError("empty graph")

    undirected: dict[str, set[str]] = {v: set() for v in g.vertices}
    for e in g.edges:
        undirected[e.src].add(e.dst)
        undirected[e.dst].add(e.src)
    seen = {g.vertices[0]}
    stack = [g.vertices[0]]
    while stack:
        v = stack.pop()
        for w in undirected[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    weak = len(seen) == len(g.vertices)

    all_vs = set(g.vertices)
    strong = True
    for v in g.vertices:
        # reachable via at least one edge
        reach: set[str] = set()
        stack = [e.dst for e in g._out[v]]
        while stack:
            w = stack.pop()
            if w in reach:
                continue
            reach.add(w)
            stack.extend(e.dst for e in g._out[w] if e.dst not in reach)
        if reach != all_vs:
            strong = False
            break
    return Connectivity(weak, strong)
