"""Command-line front end.

Exit codes follow one rule everywhere: 0 means the answer is "yes" (a
classification was produced, a trail exists, a walk validates), 1 means
the domain answer is "no" (Type III verdict, no trail from that start,
walk not Eulerian, empty proposal list), and 2 means the inputs were
unusable (bad JSON, unknown names, malformed trail strings, exhausted
enumeration budget, bad flags).

Documents are given as file paths or as ``atlas:NAME`` references into
the builtin collection. ``--json`` switches any informational command to
stable JSON output (sorted keys, fixed indent), suitable for diffing.
"""
from __future__ import annotations

import argparse
import sys

from .choreography import (
    BUILTIN_SCHEMA_NAMES,
    Schema,
    choreograph,
    validate_choreography,
)
from .errors import (
    BudgetExceeded,
    EngineError,
    InfeasibleStart,
    NoTrail,
)
from .graph import (
    DEFAULT_BUDGET,
    ClassificationReport,
    EulerKind,
    Multigraph,
    classify,
    enumerate_trails,
    find_trail,
    no_trail_message,
)
from .inverse import AddEdge, MoveEdge, RemoveEdge, search_edits
from .jsonio import as_graph, atlas_lookup, document_kind, dumps_stable, load_source
from .maps import BUILTIN_MAP_NAMES, MapInstance, map_to_graph
from .notation import parse, render, validate_trail


def headline(report: ClassificationReport) -> str:
    """One-line verdict, stable across releases; scripts match on it."""
    if report.kind is EulerKind.TYPE_I:
        if report.degenerate:
            return "Type I (degenerate)"
        return "Type I — Eulerian circuits from every start"
    if report.kind is EulerKind.TYPE_II:
        ends = ",".join(report.endpoints)
        return f"Type II — start/end {{{ends}}}"
    return "Type III — no Eulerian trail"


def _emit_json(payload) -> None:
    print(dumps_stable(payload))


def _names(ids) -> str:
    return ", ".join(sorted(ids)) if ids else "none"


def _cmd_classify(args) -> int:
    g = as_graph(load_source(args.source))
    report = classify(g)
    if args.json:
        _emit_json(report.to_json())
    else:
        print(headline(report))
        print(f"odd vertices: {_names(report.odd_vertices)}")
        print(f"feasible starts: {_names(report.feasible_starts)}")
        degrees = " ".join(f"{v}={d}" for v, d in sorted(report.degree_table.items()))
        print(f"degrees: {degrees}")
        if report.reason is not None:
            print(f"reason: {no_trail_message(report)}")
    return 1 if report.kind is EulerKind.TYPE_III else 0


def _require_known_start(g: Multigraph, start: str | None) -> None:
    if start is not None and not g.has_vertex(start):
        raise EngineError(f"unknown vertex {start!r}")


def _cmd_solve(args) -> int:
    g = as_graph(load_source(args.source))
    _require_known_start(g, args.start)
    try:
        trail = find_trail(g, args.start)
    except (NoTrail, InfeasibleStart) as exc:
        print(f"no trail: {exc}")
        return 1
    if args.json:
        _emit_json(
            {
                "trail": render(trail),
                "start": trail.start,
                "end": trail.end,
                "is_circuit": trail.is_circuit,
            }
        )
    else:
        print(render(trail))
    return 0


def _cmd_enumerate(args) -> int:
    g = as_graph(load_source(args.source))
    _require_known_start(g, args.start)
    trails = enumerate_trails(g, args.start, budget=args.budget)
    strings = [render(t) for t in trails]
    shown = strings if args.limit is None else strings[: args.limit]
    if args.json:
        _emit_json({"trails": shown, "count": len(strings)})
    else:
        for s in shown:
            print(s)
        print(f"{len(strings)} trails")
    return 0 if strings else 1


def _cmd_validate(args) -> int:
    g = as_graph(load_source(args.source))
    trail = parse(args.trail)
    verdict = validate_trail(trail, g)
    if args.json:
        _emit_json(verdict.to_json())
    else:
        if verdict.is_eulerian:
            print("Eulerian circuit" if verdict.is_circuit else "Eulerian trail")
        elif verdict.status == "well_formed":
            print("well-formed walk, not Eulerian")
        else:
            print("invalid walk")
        for v in verdict.violations:
            print(f"  {_describe_violation(v)}")
    return 0 if verdict.is_eulerian else 1


def _describe_violation(v) -> str:
    if v.kind == "missing_edges":
        return f"missing edges: {', '.join(str(e) for e in sorted(v.missing))}"
    where = f" at step {v.at_step}" if v.at_step is not None else ""
    what = f" edge {v.edge_id}" if v.edge_id is not None else ""
    who = f" vertex {v.vertex}" if v.vertex is not None else ""
    return f"{v.kind}{where}:{what}{who}".rstrip(":")


def _describe_edit(edit, g: Multigraph) -> str:
    if isinstance(edit, AddEdge):
        return f"add {edit.ends[0]}-{edit.ends[1]}"
    if isinstance(edit, RemoveEdge):
        u, v = g.endpoints(edit.edge_id)
        return f"remove {edit.edge_id} ({u}-{v})"
    assert isinstance(edit, MoveEdge)
    u, v = g.endpoints(edit.edge_id)
    return f"move {edit.edge_id} ({u}-{v}) to {edit.ends[0]}-{edit.ends[1]}"


def _cmd_edits(args) -> int:
    g = as_graph(load_source(args.source))
    target = EulerKind(args.target)
    search = search_edits(g, args.op, target)
    if args.json:
        payload = search.to_json()
        payload["count"] = len(search.proposals)
        _emit_json(payload)
    else:
        for p in search.proposals:
            suffix = " (degenerate)" if p.degenerate else ""
            print(f"{_describe_edit(p.edit, g)} -> Type {p.resulting_type.value}{suffix}")
        for r in search.rejected:
            print(f"rejected: {_describe_edit(r.edit, g)} ({r.reason})")
        print(f"{len(search.proposals)} proposals")
    return 0 if search.proposals else 1


def _cmd_translate(args) -> int:
    doc = load_source(args.source)
    if not isinstance(doc, MapInstance):
        raise EngineError(
            f"translate expects a bridge map, got a {document_kind(doc)}"
        )
    print(dumps_stable(map_to_graph(doc).to_json()))
    return 0


def _cmd_choreo(args) -> int:
    doc = load_source(args.source)
    if not isinstance(doc, Schema):
        raise EngineError(f"choreo expects a schema, got a {document_kind(doc)}")
    _require_known_start(doc.graph, args.start)
    try:
        chor = choreograph(doc, args.start, beats_per_step=args.beats_per_step)
    except (NoTrail, InfeasibleStart) as exc:
        print(f"no choreography: {exc}")
        return 1
    verdict = validate_choreography(chor, doc)
    assert verdict.is_performable, "built choreography failed its own validation"
    if args.json:
        _emit_json(chor.to_json())
    else:
        print(render(chor.trail))
        vs, es = chor.trail.vertex_seq, chor.trail.edge_seq
        for i, (e, style, beat) in enumerate(zip(es, chor.styles, chor.beats)):
            print(f"beat {beat}: {vs[i]} -> {vs[i + 1]}  {style}")
    return 0


def _cmd_atlas(args) -> int:
    if args.name:
        doc = atlas_lookup(args.name)
        print(dumps_stable(doc.to_json()))
        return 0
    if args.json:
        _emit_json(
            {"maps": list(BUILTIN_MAP_NAMES), "schemas": list(BUILTIN_SCHEMA_NAMES)}
        )
        return 0
    print("maps:")
    for name in BUILTIN_MAP_NAMES:
        kind = classify(as_graph(atlas_lookup(name))).kind.value
        print(f"  {name:<20} Type {kind}")
    print("schemas:")
    for name in BUILTIN_SCHEMA_NAMES:
        kind = classify(as_graph(atlas_lookup(name))).kind.value
        print(f"  {name:<20} Type {kind}")
    return 0


def _cmd_serve(args) -> int:
    host, _, port = args.bind.rpartition(":")
    if not host or not port.isdigit():
        raise EngineError(f"--bind expects HOST:PORT, got {args.bind!r}")
    from .api import serve  # deferred so the CLI works without the server extras

    serve(
        host=host,
        port=int(port),
        persist=args.persist,
        atlas_readonly=args.atlas_readonly,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coreograph",
        description="Classify multigraphs, build and check Eulerian trails, "
        "search one-edge edits, and serve the document API.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        return p

    def with_source(p):
        p.add_argument("source", help="document file path or atlas:NAME")
        return p

    def with_json(p):
        p.add_argument("--json", action="store_true", help="emit stable JSON")
        return p

    p = with_json(with_source(add("classify", _cmd_classify, "Euler-type verdict for a document")))

    p = with_json(with_source(add("solve", _cmd_solve, "construct one Eulerian trail")))
    p.add_argument("--start", help="start vertex (default: smallest feasible)")

    p = with_json(with_source(add("enumerate", _cmd_enumerate, "list every Eulerian trail")))
    p.add_argument("--start", help="only trails from this vertex")
    p.add_argument("--limit", type=int, help="print at most this many trails")
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help="abort after this many search steps (default %(default)s)",
    )

    p = with_json(with_source(add("validate", _cmd_validate, "check a trail string against a document")))
    p.add_argument("trail", help="trail string, e.g. A1D6C5B4A3B2A")

    p = with_json(with_source(add("edits", _cmd_edits, "search single-edge edits reaching a target type")))
    p.add_argument("op", choices=["add", "remove", "move"], help="edit operation")
    p.add_argument("target", choices=["I", "II", "III"], help="target Euler type")

    with_source(add("translate", _cmd_translate, "convert a bridge map to graph JSON"))

    p = with_json(with_source(add("choreo", _cmd_choreo, "build a choreography from a schema")))
    p.add_argument("--start", help="start vertex (default: smallest feasible)")
    p.add_argument(
        "--beats-per-step", type=int, default=1, help="beats between steps (default 1)"
    )

    p = add("atlas", _cmd_atlas, "list builtin documents, or print one")
    p.add_argument("name", nargs="?", help="builtin name to print as JSON")
    with_json(p)

    p = add("serve", _cmd_serve, "run the HTTP document API")
    p.add_argument("--bind", default="127.0.0.1:8000", help="HOST:PORT (default %(default)s)")
    p.add_argument("--persist", help="snapshot documents to this JSON file")
    p.add_argument(
        "--atlas-readonly",
        action="store_true",
        help="serve builtins only; reject document mutations",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
