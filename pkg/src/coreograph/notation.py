"""Trail strings: the compact region-and-bridge notation for walks.

A trail string alternates vertex tokens (maximal uppercase-letter runs)
and edge tokens (positive decimal numbers), starting and ending with a
vertex: ``"A1D6C5B4A3B2A"``. Rendering and parsing are exact inverses on
well-formed strings, and neither consults a graph; all graph-dependent
checking lives in :func:`validate_trail`.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from .errors import MalformedTrailString, NotACircuit
from .graph import EdgeId, Multigraph, Trail, VertexId

_TOKEN_RE = re.compile(r"[A-Z]+|[0-9]+")
_WHOLE_RE = re.compile(r"[A-Z0-9]+")


def render(trail: Trail) -> str:
    """Serialize a trail by interleaving vertex ids and edge ids."""
    parts = [trail.vertex_seq[0]]
    for e, v in zip(trail.edge_seq, trail.vertex_seq[1:]):
        parts.append(str(e))
        parts.append(v)
    return "".join(parts)


def parse(text: str) -> Trail:
    """Inverse of :func:`render`.

    Raises :class:`MalformedTrailString` for anything that is not an
    alternating vertex/edge sequence with vertex tokens at both ends.
    Edge tokens must be positive and carry no leading zeros, otherwise
    the round-trip back through :func:`render` would not be identity.
    """
    if not text:
        raise MalformedTrailString("empty trail string")
    if not _WHOLE_RE.fullmatch(text):
        raise MalformedTrailString(
            f"trail string may contain only A-Z and 0-9: {text!r}"
        )
    tokens = _TOKEN_RE.findall(text)
    if not tokens[0][0].isalpha() or not tokens[-1][0].isalpha():
        raise MalformedTrailString(f"trail string must start and end with a vertex: {text!r}")
    vseq: list[VertexId] = []
    eseq: list[EdgeId] = []
    for i, tok in enumerate(tokens):
        if i % 2 == 0:
            vseq.append(tok)
        else:
            if tok[0] == "0":
                raise MalformedTrailString(
                    f"edge token {tok!r} has a leading zero or is zero"
                )
            eseq.append(int(tok))
    return Trail(tuple(vseq), tuple(eseq))


@dataclass(frozen=True)
class Violation:
    """One discrepancy between a trail and a graph."""

    kind: str  # unknown_vertex | unknown_edge | wrong_endpoints | repeated_edge | missing_edges
    at_step: int | None = None
    edge_id: EdgeId | None = None
    vertex: VertexId | None = None
    missing: frozenset[EdgeId] = frozenset()

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.at_step is not None:
            out["at_step"] = self.at_step
        if self.edge_id is not None:
            out["edge_id"] = self.edge_id
        if self.vertex is not None:
            out["vertex"] = self.vertex
        if self.missing:
            out["missing"] = sorted(self.missing)
        return out


@dataclass(frozen=True)
class TrailValidation:
    """Outcome of checking a trail against a graph.

    ``status`` is ``"eulerian"`` when the walk uses every edge exactly
    once, ``"well_formed"`` when it is a legal walk that merely skips some
    edges, and ``"invalid"`` otherwise.
    """

    status: str
    violations: tuple[Violation, ...] = ()
    is_circuit: bool = False

    @property
    def is_eulerian(self) -> bool:
        return self.status == "eulerian"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "is_circuit": self.is_circuit,
            "violations": [v.to_json() for v in self.violations],
        }


def validate_trail(trail: Trail, g: Multigraph) -> TrailValidation:
    """Check a trail step by step against a graph.

    Every defect is reported, not just the first: unknown vertices or
    edges, steps whose edge does not join its neighbouring vertices,
    edges walked twice, and (if nothing else is wrong) edges never
    walked at all.
    """
    violations: list[Violation] = []
    for i, v in enumerate(trail.vertex_seq):
        if not g.has_vertex(v):
            violations.append(Violation("unknown_vertex", at_step=i, vertex=v))
    seen: Counter[EdgeId] = Counter()
    for i, e in enumerate(trail.edge_seq):
        u, w = trail.vertex_seq[i], trail.vertex_seq[i + 1]
        if not g.has_edge(e):
            violations.append(Violation("unknown_edge", at_step=i, edge_id=e))
            continue
        if set(g.endpoints(e)) != {u, w}:
            violations.append(Violation("wrong_endpoints", at_step=i, edge_id=e))
        seen[e] += 1
        if seen[e] == 2:  # flag once per edge, at its second use
            violations.append(Violation("repeated_edge", at_step=i, edge_id=e))
    if not violations:
        unused = frozenset(g.edge_ids) - set(trail.edge_seq)
        if unused:
            violations.append(Violation("missing_edges", missing=unused))

    if not violations:
        status = "eulerian"
    elif all(v.kind == "missing_edges" for v in violations):
        status = "well_formed"
    else:
        status = "invalid"
    return TrailValidation(
        status=status,
        violations=tuple(violations),
        is_circuit=trail.is_circuit,
    )


def rotate_circuit(trail: Trail, k: int) -> Trail:
    """Shift a circuit's starting point forward by ``k`` steps.

    A circuit of n edges has n equivalent renderings; rotating by one
    moves the first vertex-edge pair to the back. Raises
    :class:`NotACircuit` for open trails.
    """
    if not trail.is_circuit:
        raise NotACircuit(
            f"cannot rotate open trail {trail.start!r}..{trail.end!r}"
        )
    n = len(trail.edge_seq)
    if n == 0:
        return trail
    k %= n
    if k == 0:
        return trail
    vs, es = trail.vertex_seq, trail.edge_seq
    new_es = es[k:] + es[:k]
    new_vs = vs[k:-1] + vs[:k] + (vs[k],)
    return Trail(new_vs, new_es)


def reverse_trail(trail: Trail) -> Trail:
    """The same walk traversed backwards."""
    return Trail(tuple(reversed(trail.vertex_seq)), tuple(reversed(trail.edge_seq)))


@dataclass(frozen=True)
class TrailAudit:
    """Entry/exit tally for each vertex visited by a trail.

    For an open trail the start has one more exit than entry, the end one
    more entry than exit, and every other vertex breaks even; a circuit
    breaks even everywhere. On an Eulerian trail each vertex's entries
    plus exits equal its degree.
    """

    entries: dict[VertexId, int] = field(default_factory=dict)
    exits: dict[VertexId, int] = field(default_factory=dict)
    is_circuit: bool = False
    matches_degrees: bool | None = None  # set when audited against a graph

    def net(self, v: VertexId) -> int:
        return self.exits.get(v, 0) - self.entries.get(v, 0)


def entry_exit_audit(trail: Trail, g: Multigraph | None = None) -> TrailAudit:
    """Tally entries and exits per vertex; optionally compare with degrees.

    Each step i counts one exit from ``vertex_seq[i]`` and one entry into
    ``vertex_seq[i+1]`` (a loop step does both at the same vertex). With a
    graph supplied, ``matches_degrees`` records whether entries+exits at
    every vertex equal its degree, the balance that forces an Eulerian
    trail's interior vertices to be even.
    """
    entries = {v: 0 for v in trail.vertex_seq}
    exits = {v: 0 for v in trail.vertex_seq}
    for i in range(len(trail.edge_seq)):
        exits[trail.vertex_seq[i]] += 1
        entries[trail.vertex_seq[i + 1]] += 1
    matches: bool | None = None
    if g is not None:
        matches = all(
            g.has_vertex(v) and entries[v] + exits[v] == g.degree(v)
            for v in entries
        )
    return TrailAudit(
        entries=entries,
        exits=exits,
        is_circuit=trail.is_circuit,
        matches_degrees=matches,
    )
