"""Hereditary and saturated vertex subsets and their lattices.

A subset H of vertices is hereditary when every edge emitted inside H is
received inside H, and saturated when every non-sink vertex whose out-edges
all land in H already belongs to H.  Subsets that are both correspond to the
gauge-invariant ideals of the associated algebra, so the lattice of saturated
hereditary subsets decides simplicity questions: a trivial lattice (only the
empty set and the full vertex set) means no nontrivial invariant ideals.

Subsets are plain frozensets of vertex ids.  Lattice enumeration is
exhaustive over all 2^n subsets and refuses graphs beyond a configurable
vertex cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import CapExceeded, Graph

DEFAULT_LATTICE_CAP = 16

KINDS = ("hereditary", "saturated_hereditary")


def _check_subset(g: Graph, members: Iterable[str]) -> frozenset[str]:
    g.require_valid()
    s = frozenset(members)
    for v in s:
        if v not in g.vertex_pos:
            raise ValueError(f"unknown vertex {v!r}")
    return s


def is_hereditary(g: Graph, members: Iterable[str]) -> bool:
    """Whether every edge emitted in the subset is also received in it."""
    s = _check_subset(g, members)
    return all(e.dst in s for e in g.edges if e.src in s)


def is_saturated(g: Graph, members: Iterable[str]) -> bool:
    """Whether every non-sink vertex feeding entirely into the subset belongs
    to it."""
    s = _check_subset(g, members)
    for v in g.vertices:
        if v in s:
            continue
        out = g._out[v]
        if out and all(e.dst in s for e in out):
            return False
    return True


def saturated_hereditary_closure(g: Graph, members: Iterable[str]) -> frozenset[str]:
    """Least saturated hereditary superset of the given vertices.

    Computed as a fixed point: alternately add targets of edges leaving the
    set (hereditary sweep) and non-sink vertices all of whose out-edges land
    in the set (saturation sweep).  The map is extensive, monotone, and
    idempotent.
    """
    current = set(_check_subset(g, members))
    changed = True
    while changed:
        changed = False
        for e in g.edges:
            if e.src in current and e.dst not in current:
                current.add(e.dst)
                changed = True
        for v in g.vertices:
            if v in current:
                continue
            out = g._out[v]
            if out and all(e.dst in current for e in out):
                current.add(v)
                changed = True
    return frozenset(current)


@dataclass(frozen=True)
class SubsetLattice:
    """All subsets of one kind, ordered by their vertex bitmask (ascending,
    bit i = i-th declared vertex), so output order is deterministic."""

    graph: Graph
    kind: str
    elements: tuple[frozenset[str], ...]

    def __contains__(self, members: Iterable[str]) -> bool:
        return frozenset(members) in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        """Only the empty set and the full vertex set are present."""
        full = frozenset(self.graph.vertices)
        return all(s == frozenset() or s == full for s in self.elements)


def lattice(g: Graph, kind: str, cap: int = DEFAULT_LATTICE_CAP) -> SubsetLattice:
    """Enumerate the full lattice of hereditary (or saturated hereditary)
    subsets by exhaustive check of all vertex subsets.

    Raises :class:`CapExceeded` when the graph has more than ``cap`` vertices;
    no partial lattice is returned.
    """
    g.require_valid()
    if kind not in KINDS:
        raise ValueError(f"unknown lattice kind {kind!r}")
    n = len(g.vertices)
    if n > cap:
        raise CapExceeded(
            f"lattice enumeration over {n} vertices exceeds cap {cap}")
    elements = []
    for mask in range(1 << n):
        s = frozenset(v for i, v in enumerate(g.vertices) if mask >> i & 1)
        if not is_hereditary(g, s):
            continue
        if kind == "saturated_hereditary" and not is_saturated(g, s):
            continue
        elements.append(s)
    return SubsetLattice(g, kind, tuple(elements))
