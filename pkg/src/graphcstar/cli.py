"""Command line interface.

Subcommands: analyze, power, cycles, ideals, witness, classify, dot.  Input
files ending in ``.json`` are read in the JSON form, everything else as the
line DSL.

Exit codes: 0 success; 1 parse or schema error; 2 semantic graph error;
3 a bound or cap was exhausted (including an unsuccessful witness search);
4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .conditions import WitnessRequest, find_witness, periodicity
from .correspondence import VertexWeights
from .graphs import (
    DEFAULT_CYCLE_CAP,
    DEFAULT_POWER_CAP,
    CapExceeded,
    Graph,
    InvalidGraphError,
    power_graph,
    simple_cycles,
)
from .ideals import DEFAULT_LATTICE_CAP, lattice
from .io_formats import (
    FormatError,
    GraphSemanticError,
    ParseError,
    emit_dot,
    parse_dsl,
    parse_json,
    serialize_dsl,
    serialize_json,
)
from .verdicts import (
    CITATIONS,
    AnalysisReport,
    InternalInvariantError,
    classify,
    report_to_dict,
)

ENV_CAP_VERTICES = "GRAPHCSTAR_CAP_VERTICES"
ENV_CAP_PATHS = "GRAPHCSTAR_CAP_PATHS"


def _load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return parse_json(text)
    return parse_dsl(text)


def _resolve_cap(flag_value: Optional[int], env_name: str, default: int) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(env_name)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{env_name} must be an integer, got {env!r}") from None
    return default


def _vertex_cap(args) -> int:
    return _resolve_cap(args.cap_vertices, ENV_CAP_VERTICES, DEFAULT_LATTICE_CAP)


def _path_cap(args, default: int) -> int:
    return _resolve_cap(args.cap_paths, ENV_CAP_PATHS, default)


def _subset_str(g: Graph, s: frozenset[str]) -> str:
    if not s:
        return "{}"
    return "{" + " ".join(sorted(s, key=g.vertex_pos.__getitem__)) + "}"


def render_report_text(report: AnalysisReport) -> str:
    g = report.graph
    lines = [f"graph: {len(g.vertices)} vertices, {len(g.edges)} edges"]
    lines.append("flags:")
    for name, value in vars(report.flags).items():
        lines.append(f"  {name}: {'yes' if value else 'no'}")
    if report.flags.condition_L:
        lines.append("condition (L): holds")
    else:
        lines.append(f"condition (L): fails (exitless cycle: {report.violating_cycle})")
    if report.flags.condition_S:
        lines.append("condition (S): holds")
    else:
        lines.append(f"condition (S): fails ({report.condition_S_reason})")
    if report.flags.nonperiodic:
        lines.append("periodicity: nonperiodic")
    else:
        lines.append(f"periodicity: periodic, minimal period {report.minimal_period}")
    lines.append("hereditary lattice: "
                 + " ".join(_subset_str(g, s) for s in report.hereditary_lattice.elements))
    lines.append("saturated hereditary lattice: "
                 + " ".join(_subset_str(g, s) for s in report.saturated_hereditary_lattice.elements))
    lines.append(f"simplicity: {report.simplicity}")
    if report.schweizer.holds:
        lines.append(f"schweizer hypotheses: hold; predicted {report.schweizer_predicted}")
    else:
        lines.append("schweizer hypotheses: fail (" + ", ".join(report.schweizer.failed) + ")")
    lines.append("counterexample flags: "
                 + (", ".join(report.counterexample_flags) if report.counterexample_flags else "none"))
    lines.append("citations:")
    for tag in report.citations:
        lines.append(f"  {tag}: {CITATIONS[tag]}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> int:
    g = _load_graph(args.file)
    report = classify(g, cap=_vertex_cap(args))
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        sys.stdout.write(render_report_text(report))
    return 0


def _cmd_classify(args) -> int:
    g = _load_graph(args.file)
    report = classify(g, cap=_vertex_cap(args))
    if args.format == "json":
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        all_flags = (
            "nonperiodic_but_not_L",
            "nonperiodic_trivial_invariant_not_simple",
            "periodic_disjoint_cycles",
        )
        for flag in all_flags:
            state = "yes" if flag in report.counterexample_flags else "no"
            print(f"{flag}: {state}")
    return 0


def _cmd_power(args) -> int:
    g = _load_graph(args.file)
    result = power_graph(g, args.power, cap=_path_cap(args, DEFAULT_POWER_CAP))
    if args.format == "json":
        print(json.dumps(serialize_json(result), indent=2))
    else:
        sys.stdout.write(serialize_dsl(result))
    return 0


def _cmd_cycles(args) -> int:
    g = _load_graph(args.file)
    cycles = simple_cycles(g, cap=_path_cap(args, DEFAULT_CYCLE_CAP))
    if args.format == "json":
        print(json.dumps([list(c.edges) for c in cycles]))
    else:
        if not cycles:
            print("no cycles")
        for c in cycles:
            print(f"{c.source}: {c}")
    return 0


_KIND_BY_FLAG = {"hereditary": "hereditary", "satHer": "saturated_hereditary"}


def _cmd_ideals(args) -> int:
    g = _load_graph(args.file)
    lat = lattice(g, _KIND_BY_FLAG[args.kind], cap=_vertex_cap(args))
    if args.format == "json":
        print(json.dumps([sorted(s, key=g.vertex_pos.__getitem__) for s in lat.elements]))
    else:
        for s in lat.elements:
            print(_subset_str(g, s))
    return 0


def _parse_weights(g: Graph, args) -> VertexWeights:
    if args.support is not None:
        return VertexWeights.indicator(g, [v for v in args.support.split(",") if v])
    weights = {}
    for item in args.weights.split(","):
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"bad weight {item!r}, expected vertex=value")
        v, _, raw = item.partition("=")
        weights[v] = float(raw)
    return VertexWeights(g, weights)


def _cmd_witness(args) -> int:
    g = _load_graph(args.file)
    a = _parse_weights(g, args)
    req = WitnessRequest(a=a, n=args.n, epsilon=args.epsilon, max_length=args.max_length)
    found = find_witness(g, req)
    if found is None:
        if args.format == "json":
            print(json.dumps({"found": False, "searched_max_length": args.max_length}))
        else:
            print(f"no witness found up to length {args.max_length} "
                  "(existence is not ruled out)")
        return 3
    m, path = found
    if args.format == "json":
        print(json.dumps({"found": True, "m": m, "path": list(path.edges),
                          "source": path.source}))
    else:
        print(f"witness: m={m} path: {path} (source {path.source})")
    return 0


def _cmd_dot(args) -> int:
    g = _load_graph(args.file)
    if args.annotate:
        sys.stdout.write(emit_dot(classify(g, cap=_vertex_cap(args))))
    else:
        sys.stdout.write(emit_dot(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcstar",
        description="Structural analysis of finite directed multigraphs: "
                    "simplicity of the associated algebras, Condition (L)/(S), "
                    "ideal lattices, periodicity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file (.json for JSON, otherwise DSL)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("analyze", _cmd_analyze, "full structural report")
    p.add_argument("--cap-vertices", type=int, default=None,
                   help="lattice enumeration cap (env GRAPHCSTAR_CAP_VERTICES)")

    p = add("classify", _cmd_classify, "counterexample classification")
    p.add_argument("--cap-vertices", type=int, default=None)

    p = add("power", _cmd_power, "emit the n-th power graph")
    p.add_argument("-n", "--power", type=int, required=True)
    p.add_argument("--cap-paths", type=int, default=None,
                   help="edge count cap (env GRAPHCSTAR_CAP_PATHS)")

    p = add("cycles", _cmd_cycles, "list elementary cycles")
    p.add_argument("--cap-paths", type=int, default=None)

    p = add("ideals", _cmd_ideals, "list the subset lattice")
    p.add_argument("--kind", choices=tuple(_KIND_BY_FLAG), default="satHer")
    p.add_argument("--cap-vertices", type=int, default=None)

    p = add("witness", _cmd_witness, "search for a nonreturning witness path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--support", help="comma-separated vertices, indicator weights")
    group.add_argument("--weights", help="comma-separated vertex=value pairs")
    p.add_argument("--n", type=int, default=0, help="witness length must exceed this")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--max-length", type=int, required=True)

    p = add("dot", _cmd_dot, "emit DOT")
    p.add_argument("--annotate", action="store_true",
                   help="color exitless cycles and invariant subsets from the report")
    p.add_argument("--cap-vertices", type=int, default=None)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _print_error(exc)
        return 1
    except GraphSemanticError as exc:
        _print_error(exc)
        return 2
    except (InvalidGraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _print_error(exc: FormatError) -> None:
    for d in exc.diagnostics:
        print(f"error: {d}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
