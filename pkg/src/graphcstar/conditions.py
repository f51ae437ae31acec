"""Structural conditions on graphs: returning paths, Condition (L),
Condition (S), periodicity, and constructive witness search.

Condition (L) asks that every cycle has an exit.  Condition (S) asks that,
for every nonzero nonnegative vertex weight a, every n, and every tolerance,
some tensor power beyond n contains a nonreturning unit vector almost
attaining the norm of a under the inner product; for finite graphs it is
equivalent to Condition (L) together with the absence of sinks, and it forces
the left action to be injective.  Periodicity asks that some tensor power of
the edge correspondence is isomorphic to the coefficient algebra, which
happens exactly when the graph is a disjoint union of cycles; the minimal
period is then the lcm of the cycle lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, NamedTuple, Optional

from .correspondence import (
    PathVector,
    VertexWeights,
    inner_product,
    is_nonreturning_vector,
    left_action,
    sup_norm,
)
from .graphs import (
    DEFAULT_CYCLE_CAP,
    Graph,
    Path,
    cycle_exits,
    matmul,
    paths_of_length,
    simple_cycles,
)


def is_returning(p: Path) -> bool:
    """Whether the last edge of the path occurs earlier in the path."""
    return p.edges[-1] in p.edges[:-1]


def is_nonreturning_set(paths: Iterable[Path]) -> bool:
    """Whether a nonempty set of equal-length paths is jointly nonreturning.

    The requirement is pairwise, including each path against itself: the last
    edge of any member never occurs among the non-final edges of any member.
    Raises ValueError on an empty collection or mixed lengths.
    """
    ps = list(paths)
    if not ps:
        raise ValueError("nonempty set of paths required")
    length = ps[0].length
    if any(p.length != length for p in ps):
        raise ValueError("mixed path lengths")
    lasts = {p.edges[-1] for p in ps}
    inner = {eid for p in ps for eid in p.edges[:-1]}
    return lasts.isdisjoint(inner)


class ConditionL(NamedTuple):
    holds: bool
    violating_cycle: Optional[Path]


def condition_L(g: Graph) -> ConditionL:
    """Decide whether every cycle has an exit.

    A cycle without an exit passes only through vertices of out-degree one,
    so Condition (L) fails exactly when the subgraph of out-degree-one
    vertices contains a cycle.  On failure the witness is the exitless cycle
    through the earliest such vertex in declaration order, walked from that
    vertex.
    """
    g.require_valid()
    next_edge = {v: g._out[v][0] for v in g.vertices if len(g._out[v]) == 1}
    for v in g.vertices:
        if v not in next_edge:
            continue
        trail = []
        u = v
        for _ in range(len(g.vertices)):
            e = next_edge.get(u)
            if e is None:
                break
            trail.append(e.id)
            u = e.dst
            if u == v:
                return ConditionL(False, Path(g, tuple(trail)))
    return ConditionL(True, None)


def condition_L_bruteforce(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> ConditionL:
    """Reference route: enumerate elementary cycles and test each for exits.

    Exitless cycles never revisit a vertex (out-degree one along the way), so
    elementary cycles suffice.  Kept independent of :func:`condition_L` as a
    cross-check.
    """
    for c in simple_cycles(g, cap=cap):
        if not cycle_exits(g, c):
            return ConditionL(False, c)
    return ConditionL(True, None)


class ConditionS(NamedTuple):
    holds: bool
    reason: str  # "ok", "has_sinks", or "fails_L"


def condition_S(g: Graph) -> ConditionS:
    """Decide Condition (S): holds iff the graph has no sinks and satisfies
    Condition (L).  Sinks are reported first."""
    g.require_valid()
    if any(not g._out[v] for v in g.vertices):
        return ConditionS(False, "has_sinks")
    if not condition_L(g).holds:
        return ConditionS(False, "fails_L")
    return ConditionS(True, "ok")


@dataclass(frozen=True)
class PeriodicityVerdict:
    periodic: bool
    minimal_period: Optional[int]
    method: str  # "structural" or "direct-power"
    # For the direct-power method only: the largest power examined.  A
    # non-periodic verdict from that method means no period up to this bound.
    searched_bound: Optional[int] = None


def _unit_degrees(g: Graph) -> bool:
    return all(len(g._out[v]) == 1 and len(g._in[v]) == 1 for v in g.vertices)


def _cycle_lengths(g: Graph) -> list[int]:
    # Assumes unit in- and out-degrees: the out-edges form a permutation.
    lengths = []
    seen: set[str] = set()
    for v in g.vertices:
        if v in seen:
            continue
        length = 0
        u = v
        while u not in seen:
            seen.add(u)
            u = g._out[u][0].dst
            length += 1
        lengths.append(length)
    return lengths


def is_disjoint_cycles(g: Graph) -> bool:
    """Whether every vertex has in-degree and out-degree exactly one."""
    g.require_valid()
    return _unit_degrees(g)


def periodicity(g: Graph, method: str = "structural", bound: Optional[int] = None) -> PeriodicityVerdict:
    """Decide whether some tensor power of the edge correspondence is the
    coefficient algebra.

    structural: periodic iff every vertex has in- and out-degree one (the
    graph is a disjoint union of cycles); the minimal period is the lcm of
    the cycle lengths.

    direct-power: search n = 1..bound for the n-th power graph consisting of
    exactly one self-loop at every vertex, i.e. the n-th adjacency power
    equal to the identity.  The default bound is the structural lcm when
    degrees are all one and twice the vertex count otherwise.  A negative
    verdict from this method only rules out periods up to the bound, which is
    reported in ``searched_bound``.
    """
    g.require_valid()
    if not g.vertices:
        raise ValueError("empty graph")
    if method == "structural":
        if _unit_degrees(g):
            return PeriodicityVerdict(True, lcm(*_cycle_lengths(g)), "structural")
        return PeriodicityVerdict(False, None, "structural")
    if method != "direct-power":
        raise ValueError(f"unknown method {method!r}")
    if bound is None:
        bound = lcm(*_cycle_lengths(g)) if _unit_degrees(g) else 2 * len(g.vertices)
    a = g.adjacency_matrix()
    size = len(a)
    identity = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    power = a
    for n in range(1, bound + 1):
        if power == identity:
            return PeriodicityVerdict(True, n, "direct-power", searched_bound=bound)
        power = matmul(power, a)
    return PeriodicityVerdict(False, None, "direct-power", searched_bound=bound)


@dataclass(frozen=True)
class WitnessRequest:
    """Parameters for the constructive Condition (S) witness search."""

    a: VertexWeights
    n: int
    epsilon: float
    max_length: int

    def __post_init__(self):
        if self.a.is_zero():
            raise ValueError("weight function must be nonzero")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.epsilon > self.a.sup_norm:
            raise ValueError("epsilon must not exceed the sup norm of the weights")
        if self.max_length <= self.n:
            raise ValueError("max_length must exceed n")


def find_witness(g: Graph, req: WitnessRequest) -> Optional[tuple[int, Path]]:
    """Search for a nonreturning witness path beyond length ``req.n``.

    Scans lengths m = n+1 .. max_length in order and, within each length,
    paths in lexicographic edge order.  A witness must start at a vertex
    where the weight exceeds ``sup_norm(a) - epsilon`` strictly, must not be
    a returning path, and its delta vector must pass the operator-level
    nonreturning check; the attained value is re-derived through the inner
    product before accepting.  Returns the first (m, path) found, or None
    when the bound is exhausted -- which never claims nonexistence.
    """
    g.require_valid()
    if not _same(g, req.a.graph):
        raise ValueError("weights live over a different graph")
    threshold = req.a.sup_norm - req.epsilon
    candidates = frozenset(
        v for v in g.vertices if req.a(v) > threshold)
    if not candidates:
        return None
    for m in range(req.n + 1, req.max_length + 1):
        for p in paths_of_length(g, m, from_vertices=candidates):
            if is_returning(p):
                continue
            if not is_nonreturning_vector(p):
                continue
            zeta = PathVector.delta(p)
            attained = sup_norm(inner_product(zeta, left_action(req.a, zeta)))
            if attained > threshold:
                return m, p
    return None


def _same(a: Graph, b: Graph) -> bool:
    return a is b or a == b
