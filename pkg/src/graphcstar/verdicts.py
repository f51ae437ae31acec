"""Simplicity verdicts and counterexample classification for finite graphs.

The verdict layer combines the structural conditions into the statements the
package exists to decide: a finite graph algebra is simple exactly when
Condition (L) holds and the saturated hereditary lattice is trivial.  When
the graph has no sources and no sinks the correspondence is full with
injective left action over a unital algebra, and an independent dichotomy
applies: simple iff nonperiodic with trivial hereditary lattice.  The two
routes must agree whenever both apply; disagreement raises
:class:`InternalInvariantError`, which should never happen and signals a
soundness bug rather than bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .conditions import condition_L, condition_S, periodicity
from .graphs import Graph, Path, vertex_classes
from .ideals import DEFAULT_LATTICE_CAP, SubsetLattice, lattice

SIMPLE = "simple"
NOT_SIMPLE = "not_simple"


class InternalInvariantError(AssertionError):
    """Two independently derived answers disagree; indicates a bug."""


# Mathematical facts the verdicts rely on, keyed by stable tags that reports
# cite.  Kept in emission order.
CITATIONS: dict[str, str] = {
    "simplicity-criterion": (
        "a finite graph algebra is simple iff Condition (L) holds and the "
        "only saturated hereditary vertex sets are the empty and full sets"),
    "condition-s-simplicity": (
        "Condition (S) plus a trivial saturated hereditary lattice forces "
        "simplicity of the Cuntz-Pimsner algebra"),
    "l-iff-s-no-sinks": (
        "for finite graphs, Condition (S) holds iff the graph has no sinks "
        "and satisfies Condition (L)"),
    "no-sinks-injectivity": (
        "the left action on the edge correspondence is injective iff the "
        "graph has no sinks"),
    "schweizer-simplicity": (
        "for a full correspondence over a unital algebra with injective left "
        "action, the Cuntz-Pimsner algebra is simple iff the correspondence "
        "is nonperiodic and has trivial hereditary subsets"),
    "cycle-decomposition-periodicity": (
        "a finite graph with all in- and out-degrees one is a disjoint union "
        "of cycles; its correspondence is periodic with minimal period the "
        "lcm of the cycle lengths"),
}


@dataclass(frozen=True)
class ReportFlags:
    no_sinks: bool
    no_sources: bool
    finite: bool
    full: bool
    unital: bool
    injective_left_action: bool
    condition_L: bool
    condition_S: bool
    nonperiodic: bool
    trivial_hereditary: bool
    trivial_saturated_hereditary: bool


class SchweizerStatus(NamedTuple):
    holds: bool
    failed: tuple[str, ...]  # subset of ("has_sources", "has_sinks")


@dataclass(frozen=True)
class AnalysisReport:
    """Full verdict record for one graph."""

    graph: Graph
    flags: ReportFlags
    simplicity: str  # SIMPLE or NOT_SIMPLE
    condition_S_reason: str
    schweizer: SchweizerStatus
    schweizer_predicted: Optional[str]
    counterexample_flags: tuple[str, ...]
    citations: tuple[str, ...]
    minimal_period: Optional[int]
    violating_cycle: Optional[Path]
    hereditary_lattice: SubsetLattice
    saturated_hereditary_lattice: SubsetLattice


def simplicity_verdict(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> tuple[str, tuple[str, ...]]:
    """Decide simplicity: Condition (L) plus trivial saturated hereditary
    lattice.  Returns the verdict and the citation tags used; the Condition
    (S) route is cited as well whenever it independently applies."""
    g.require_valid()
    cl = condition_L(g)
    sat_her = lattice(g, "saturated_hereditary", cap=cap)
    trivial = sat_her.is_trivial()
    verdict = SIMPLE if cl.holds and trivial else NOT_SIMPLE
    tags = ["simplicity-criterion"]
    cs = condition_S(g)
    if cs.holds and trivial:
        # Independent route: Condition (S) with no invariant ideals.  It can
        # only ever point the same way, since (S) implies (L).
        if verdict != SIMPLE:
            raise InternalInvariantError(
                "Condition (S) route and Condition (L) route disagree")
        tags.append("condition-s-simplicity")
    return verdict, tuple(tags)


def schweizer_check(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> tuple[SchweizerStatus, Optional[str]]:
    """Check the hypotheses of the nonperiodicity dichotomy and, when they
    hold, its prediction.

    Hypotheses: the correspondence is full (no sources) and the left action
    injective (no sinks); finiteness and unitality are automatic here.  Under
    them the prediction (simple iff nonperiodic with trivial hereditary
    lattice) must match :func:`simplicity_verdict`; a mismatch raises
    :class:`InternalInvariantError`.
    """
    g.require_valid()
    classes = vertex_classes(g)
    failed = []
    if classes.sources:
        failed.append("has_sources")
    if classes.sinks:
        failed.append("has_sinks")
    status = SchweizerStatus(not failed, tuple(failed))
    if not status.holds:
        return status, None
    nonper = not periodicity(g).periodic
    her = lattice(g, "hereditary", cap=cap)
    predicted = SIMPLE if nonper and her.is_trivial() else NOT_SIMPLE
    actual, _ = simplicity_verdict(g, cap=cap)
    if predicted != actual:
        raise InternalInvariantError(
            f"dichotomy predicts {predicted} but the simplicity criterion "
            f"gives {actual}")
    return status, predicted


def classify(g: Graph, cap: int = DEFAULT_LATTICE_CAP) -> AnalysisReport:
    """Compute the full flag record, verdicts, and counterexample flags.

    Counterexample flags mark the structurally interesting combinations:
    ``nonperiodic_but_not_L`` (nonperiodicity alone does not give Condition
    (L)), ``nonperiodic_trivial_invariant_not_simple`` (nonperiodic with no
    nontrivial invariant ideals yet not simple), and
    ``periodic_disjoint_cycles`` (the periodic case, always a disjoint union
    of cycles).
    """
    g.require_valid()
    classes = vertex_classes(g)
    no_sinks = not classes.sinks
    no_sources = not classes.sources
    cl = condition_L(g)
    cs = condition_S(g)
    per = periodicity(g)
    her = lattice(g, "hereditary", cap=cap)
    sat_her = lattice(g, "saturated_hereditary", cap=cap)
    verdict, tags = simplicity_verdict(g, cap=cap)
    schweizer, predicted = schweizer_check(g, cap=cap)

    flags = ReportFlags(
        no_sinks=no_sinks,
        no_sources=no_sources,
        finite=True,
        full=no_sources,
        unital=True,
        injective_left_action=no_sinks,
        condition_L=cl.holds,
        condition_S=cs.holds,
        nonperiodic=not per.periodic,
        trivial_hereditary=her.is_trivial(),
        trivial_saturated_hereditary=sat_her.is_trivial(),
    )
    if flags.condition_S != (flags.condition_L and flags.no_sinks):
        raise InternalInvariantError("Condition (S) flag is inconsistent")
    if verdict != (SIMPLE if flags.condition_L and flags.trivial_saturated_hereditary else NOT_SIMPLE):
        raise InternalInvariantError("simplicity flag is inconsistent")

    counterexample = []
    if flags.nonperiodic and not flags.condition_L:
        counterexample.append("nonperiodic_but_not_L")
    if flags.nonperiodic and flags.trivial_saturated_hereditary and verdict == NOT_SIMPLE:
        counterexample.append("nonperiodic_trivial_invariant_not_simple")
    if per.periodic:
        counterexample.append("periodic_disjoint_cycles")

    cited = set(tags)
    cited.update(("l-iff-s-no-sinks", "no-sinks-injectivity"))
    if schweizer.holds:
        cited.add("schweizer-simplicity")
    if per.periodic:
        cited.add("cycle-decomposition-periodicity")
    citations = tuple(tag for tag in CITATIONS if tag in cited)

    return AnalysisReport(
        graph=g,
        flags=flags,
        simplicity=verdict,
        condition_S_reason=cs.reason,
        schweizer=schweizer,
        schweizer_predicted=predicted,
        counterexample_flags=tuple(counterexample),
        citations=citations,
        minimal_period=per.minimal_period,
        violating_cycle=cl.violating_cycle,
        hereditary_lattice=her,
        saturated_hereditary_lattice=sat_her,
    )


def _subset_sorted(g: Graph, s: frozenset[str]) -> list[str]:
    return sorted(s, key=g.vertex_pos.__getitem__)


def report_to_dict(report: AnalysisReport) -> dict:
    """Deterministic plain-data form of a report, for structured output."""
    g = report.graph
    flags = report.flags
    return {
        "graph": {"vertices": len(g.vertices), "edges": len(g.edges)},
        "flags": {
            "no_sinks": flags.no_sinks,
            "no_sources": flags.no_sources,
            "finite": flags.finite,
            "full": flags.full,
            "unital": flags.unital,
            "injective_left_action": flags.injective_left_action,
            "condition_L": flags.condition_L,
            "condition_S": flags.condition_S,
            "nonperiodic": flags.nonperiodic,
            "trivial_hereditary": flags.trivial_hereditary,
            "trivial_saturated_hereditary": flags.trivial_saturated_hereditary,
        },
        "condition_S_reason": report.condition_S_reason,
        "simplicity": report.simplicity,
        "schweizer": {
            "hypotheses_hold": report.schweizer.holds,
            "failed": list(report.schweizer.failed),
            "predicted": report.schweizer_predicted,
        },
        "counterexample_flags": list(report.counterexample_flags),
        "citations": list(report.citations),
        "minimal_period": report.minimal_period,
        "violating_cycle": list(report.violating_cycle.edges) if report.violating_cycle else None,
        "hereditary_lattice": [_subset_sorted(g, s) for s in report.hereditary_lattice.elements],
        "saturated_hereditary_lattice": [
            _subset_sorted(g, s) for s in report.saturated_hereditary_lattice.elements],
    }
