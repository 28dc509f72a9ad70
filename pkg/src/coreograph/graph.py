"""Multigraph core: degrees, connectivity, Euler-type classification, trail
construction (cycle splicing) and exhaustive trail enumeration.

Vertices are nonempty uppercase-letter strings and edges are positive
integers; the trail-string grammar in :mod:`coreograph.notation` depends on
both conventions. Parallel edges and self-loops are allowed; a loop adds 2
to its vertex's degree. All values are immutable after construction, so
every operation is a pure function.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Union

from .errors import (
    BudgetExceeded,
    DuplicateEdgeId,
    InfeasibleStart,
    InvalidGraph,
    NoTrail,
    UnknownEdge,
    UnknownVertex,
)

VertexId = str
EdgeId = int

_VERTEX_ID_RE = re.compile(r"[A-Z]+")

#: Default node-expansion limit for exhaustive enumeration; desk-scale
#: instances finish well below it.
DEFAULT_BUDGET = 10_000_000


class EulerKind(str, Enum):
    """The three classes of connected multigraphs by Eulerian-trail behaviour."""

    TYPE_I = "I"      # all degrees even: circuits from every positive-degree vertex
    TYPE_II = "II"    # exactly two odd vertices: open trails between them
    TYPE_III = "III"  # no Eulerian trail

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


class Multigraph:
    """Undirected multigraph with stable vertex/edge identifiers.

    ``vertices`` may be an iterable of ids, of ``(id, label)`` pairs, or an
    id-to-label mapping. ``edges`` may be an iterable of ``(id, u, v)``
    triples or an id-to-endpoint-pair mapping. Endpoints are stored sorted,
    since edges are unordered.
    """

    __slots__ = ("_vertices", "_edges", "_incidence", "_degrees")

    def __init__(
        self,
        vertices: Union[Iterable, Mapping[VertexId, str]] = (),
        edges: Union[Iterable, Mapping[EdgeId, tuple]] = (),
    ):
        self._vertices: dict[VertexId, str] = {}
        items = vertices.items() if isinstance(vertices, Mapping) else vertices
        for item in items:
            if isinstance(item, str):
                vid, label = item, item
            else:
                try:
                    vid, label = item
                except (TypeError, ValueError):
                    raise InvalidGraph(
                        f"vertex entry {item!r} is not an id or an (id, label) pair"
                    ) from None
            if not isinstance(vid, str) or not _VERTEX_ID_RE.fullmatch(vid):
                raise InvalidGraph(f"vertex id {vid!r} is not an uppercase-letter string")
            if vid in self._vertices:
                raise InvalidGraph(f"duplicate vertex id {vid!r}")
            self._vertices[vid] = str(label)

        self._edges: dict[EdgeId, tuple[VertexId, VertexId]] = {}
        edge_items = (
            ((eid, ends[0], ends[1]) for eid, ends in edges.items())
            if isinstance(edges, Mapping)
            else edges
        )
        for eid, u, v in edge_items:
            if not isinstance(eid, int) or isinstance(eid, bool) or eid <= 0:
                raise InvalidGraph(f"edge id {eid!r} is not a positive integer")
            if eid in self._edges:
                raise InvalidGraph(f"duplicate edge id {eid}")
            for end in (u, v):
                if end not in self._vertices:
                    raise InvalidGraph(f"edge {eid} endpoint {end!r} is not a vertex")
            self._edges[eid] = (u, v) if u <= v else (v, u)

        incidence: dict[VertexId, list[EdgeId]] = {v: [] for v in self._vertices}
        degrees: dict[VertexId, int] = {v: 0 for v in self._vertices}
        for eid, (u, v) in self._edges.items():
            incidence[u].append(eid)
            if v != u:
                incidence[v].append(eid)
            degrees[u] += 1
            degrees[v] += 1  # a self-loop contributes 2 to its vertex
        self._incidence = {v: tuple(sorted(eids)) for v, eids in incidence.items()}
        self._degrees = degrees

    # -- structure queries -------------------------------------------------

    @property
    def vertex_ids(self) -> tuple[VertexId, ...]:
        return tuple(sorted(self._vertices))

    @property
    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(sorted(self._edges))

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._vertices

    def has_edge(self, e: EdgeId) -> bool:
        return e in self._edges

    def label(self, v: VertexId) -> str:
        if v not in self._vertices:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return self._vertices[v]

    def endpoints(self, e: EdgeId) -> tuple[VertexId, VertexId]:
        if e not in self._edges:
            raise UnknownEdge(f"unknown edge {e!r}")
        return self._edges[e]

    def other_end(self, e: EdgeId, v: VertexId) -> VertexId:
        """The endpoint of ``e`` opposite ``v`` (``v`` itself for a loop)."""
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownVertex(f"vertex {v!r} is not an endpoint of edge {e}")

    def incident_edges(self, v: VertexId) -> tuple[EdgeId, ...]:
        """Ids of edges touching ``v``, sorted; a loop appears once."""
        if v not in self._incidence:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return self._incidence[v]

    def degree(self, v: VertexId) -> int:
        """Count of edge-endpoint incidences at ``v``; a loop counts 2."""
        if v not in self._degrees:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return self._degrees[v]

    def degrees(self) -> dict[VertexId, int]:
        return dict(self._degrees)

    def odd_vertices(self) -> frozenset[VertexId]:
        """Vertices of odd degree; by the handshake identity, evenly many."""
        return frozenset(v for v, d in self._degrees.items() if d % 2 == 1)

    def is_edge_connected(self) -> bool:
        """True iff all edges lie in one component.

        Zero-degree vertices are ignored; a graph with no edges counts as
        connected.
        """
        if not self._edges:
            return True
        start = next(iter(self._edges.values()))[0]
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for e in self._incidence[v]:
                w = self.other_end(e, v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return all(v in seen for v, d in self._degrees.items() if d > 0)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices.items()), frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"Multigraph({self.vertex_count} vertices, {self.edge_count} edges)"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"id": v, "label": self._vertices[v]} for v in self.vertex_ids
            ],
            "edges": [
                {"id": e, "ends": list(self._edges[e])} for e in self.edge_ids
            ],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "Multigraph":
        try:
            vertices = [(v["id"], v.get("label", v["id"])) for v in doc["vertices"]]
            edges = [(e["id"], e["ends"][0], e["ends"][1]) for e in doc["edges"]]
        except (KeyError, TypeError, IndexError) as exc:
            raise InvalidGraph(f"bad graph document: {exc}") from exc
        return cls(vertices, edges)


@dataclass(frozen=True)
class Trail:
    """Alternating vertex/edge walk: ``len(vertex_seq) == len(edge_seq) + 1``.

    A trail is a pure sequence; whether it is legal or Eulerian on a given
    graph is checked by :func:`coreograph.notation.validate_trail`.
    """

    vertex_seq: tuple[VertexId, ...]
    edge_seq: tuple[EdgeId, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex_seq", tuple(self.vertex_seq))
        object.__setattr__(self, "edge_seq", tuple(self.edge_seq))
        if len(self.vertex_seq) != len(self.edge_seq) + 1:
            raise ValueError(
                f"trail shape mismatch: {len(self.vertex_seq)} vertices "
                f"for {len(self.edge_seq)} edges"
            )

    @property
    def start(self) -> VertexId:
        return self.vertex_seq[0]

    @property
    def end(self) -> VertexId:
        return self.vertex_seq[-1]

    @property
    def is_circuit(self) -> bool:
        return self.start == self.end

    def __len__(self) -> int:
        return len(self.edge_seq)


@dataclass(frozen=True)
class ClassificationReport:
    """Euler-type verdict plus the degree evidence behind it.

    ``feasible_starts`` is every positive-degree vertex for Type I, exactly
    the two odd endpoints for Type II, and empty for Type III. A graph with
    no edges is Type I by convention (``degenerate=True``) and every vertex
    is a feasible start.
    """

    kind: EulerKind
    odd_vertices: frozenset[VertexId]
    degree_table: Mapping[VertexId, int]
    feasible_starts: frozenset[VertexId]
    endpoints: tuple[VertexId, VertexId] | None = None  # Type II only
    reason: str | None = None  # Type III: "odd_count" or "disconnected"
    degenerate: bool = False   # Type I with no edges

    def to_json(self) -> dict:
        out: dict = {
            "type": self.kind.value,
            "odd": sorted(self.odd_vertices),
            "degrees": {v: d for v, d in sorted(self.degree_table.items())},
            "feasible_starts": sorted(self.feasible_starts),
        }
        if self.endpoints is not None:
            out["endpoints"] = list(self.endpoints)
        if self.reason is not None:
            out["reason"] = self.reason
        if self.degenerate:
            out["degenerate"] = True
        return out


# -- single-edge edits -----------------------------------------------------

@dataclass(frozen=True)
class AddEdge:
    """Insert a new edge between two existing vertices (loops allowed).

    ``edge_id`` may be left ``None``; :func:`apply_edit` then assigns the
    smallest id above every existing one.
    """

    ends: tuple[VertexId, VertexId]
    edge_id: EdgeId | None = None


@dataclass(frozen=True)
class RemoveEdge:
    edge_id: EdgeId


@dataclass(frozen=True)
class MoveEdge:
    """Detach an existing edge and reattach it elsewhere, keeping its id."""

    edge_id: EdgeId
    ends: tuple[VertexId, VertexId]


EdgeEdit = Union[AddEdge, RemoveEdge, MoveEdge]


def next_edge_id(g: Multigraph) -> EdgeId:
    return max(g.edge_ids, default=0) + 1


def apply_edit(g: Multigraph, edit: EdgeEdit) -> Multigraph:
    """Return a new graph differing from ``g`` by exactly the given edit."""
    vertices = {v: g.label(v) for v in g.vertex_ids}
    edges = {e: g.endpoints(e) for e in g.edge_ids}
    if isinstance(edit, AddEdge):
        u, v = edit.ends
        for end in (u, v):
            if not g.has_vertex(end):
                raise UnknownVertex(f"unknown vertex {end!r}")
        eid = edit.edge_id if edit.edge_id is not None else next_edge_id(g)
        if eid in edges:
            raise DuplicateEdgeId(f"edge id {eid} already in use")
        edges[eid] = (u, v)
    elif isinstance(edit, RemoveEdge):
        if edit.edge_id not in edges:
            raise UnknownEdge(f"unknown edge {edit.edge_id!r}")
        del edges[edit.edge_id]
    elif isinstance(edit, MoveEdge):
        if edit.edge_id not in edges:
            raise UnknownEdge(f"unknown edge {edit.edge_id!r}")
        u, v = edit.ends
        for end in (u, v):
            if not g.has_vertex(end):
                raise UnknownVertex(f"unknown vertex {end!r}")
        edges[edit.edge_id] = (u, v)
    else:
        raise TypeError(f"not an edge edit: {edit!r}")
    return Multigraph(vertices, {e: ends for e, ends in edges.items()})


# -- classification ----------------------------------------------------------

def classify(g: Multigraph) -> ClassificationReport:
    """Sort ``g`` into Type I / II / III with its feasible start set.

    Type I: edge-connected with all degrees even (circuits from any
    positive-degree start). Type II: edge-connected with exactly two odd
    vertices (open trails between them). Everything else is Type III,
    either because the edges are disconnected or because the odd-vertex
    count is wrong.
    """
    degree_table = g.degrees()
    odd = g.odd_vertices()
    if g.edge_count == 0:
        return ClassificationReport(
            kind=EulerKind.TYPE_I,
            odd_vertices=odd,
            degree_table=degree_table,
            feasible_starts=frozenset(g.vertex_ids),
            degenerate=True,
        )
    if not g.is_edge_connected():
        return ClassificationReport(
            kind=EulerKind.TYPE_III,
            odd_vertices=odd,
            degree_table=degree_table,
            feasible_starts=frozenset(),
            reason="disconnected",
        )
    if not odd:
        positive = frozenset(v for v, d in degree_table.items() if d > 0)
        return ClassificationReport(
            kind=EulerKind.TYPE_I,
            odd_vertices=odd,
            degree_table=degree_table,
            feasible_starts=positive,
        )
    if len(odd) == 2:
        v1, v2 = sorted(odd)
        return ClassificationReport(
            kind=EulerKind.TYPE_II,
            odd_vertices=odd,
            degree_table=degree_table,
            feasible_starts=frozenset((v1, v2)),
            endpoints=(v1, v2),
        )
    return ClassificationReport(
        kind=EulerKind.TYPE_III,
        odd_vertices=odd,
        degree_table=degree_table,
        feasible_starts=frozenset(),
        reason="odd_count",
    )


def feasible_starts(g: Multigraph) -> frozenset[VertexId]:
    """Vertices from which an Eulerian trail exists."""
    return classify(g).feasible_starts


def no_trail_message(report: ClassificationReport) -> str:
    if report.reason == "disconnected":
        return "edges are disconnected"
    return f"{len(report.odd_vertices)} odd-degree vertices"


# -- trail construction ------------------------------------------------------

def find_trail(g: Multigraph, start: VertexId | None = None) -> Trail:
    """Build one Eulerian trail by iterative cycle splicing.

    Deterministic: at every expansion the smallest unused incident edge id
    is taken, so identical inputs give identical trails. For Type I graphs
    the result is a circuit; for Type II it runs between the two odd
    vertices. With ``start=None`` the smallest feasible start is used.
    """
    report = classify(g)
    if report.kind is EulerKind.TYPE_III:
        raise NoTrail(f"no Eulerian trail: {no_trail_message(report)}")
    if start is None:
        if not report.feasible_starts:
            raise NoTrail("graph has no vertices")
        start = min(report.feasible_starts)
    elif start not in report.feasible_starts:
        raise InfeasibleStart(
            f"no Eulerian trail starts at {start!r}; feasible starts: "
            f"{sorted(report.feasible_starts)}"
        )
    if g.edge_count == 0:
        return Trail((start,), ())

    incidence = {v: g.incident_edges(v) for v in g.vertex_ids}
    cursor = {v: 0 for v in g.vertex_ids}
    used: set[EdgeId] = set()
    stack: list[tuple[VertexId, EdgeId | None]] = [(start, None)]
    out_vertices: list[VertexId] = []
    out_edges: list[EdgeId | None] = []
    while stack:
        v, via = stack[-1]
        edges_here = incidence[v]
        i = cursor[v]
        while i < len(edges_here) and edges_here[i] in used:
            i += 1
        cursor[v] = i
        if i < len(edges_here):
            e = edges_here[i]
            used.add(e)
            stack.append((g.other_end(e, v), e))
        else:
            out_vertices.append(v)
            out_edges.append(via)
            stack.pop()

    trail = Trail(tuple(reversed(out_vertices)), tuple(reversed(out_edges[:-1])))
    assert len(trail.edge_seq) == g.edge_count, "splicing failed to cover all edges"
    return trail


def enumerate_trails(
    g: Multigraph,
    start: VertexId | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[Trail]:
    """All Eulerian trails from ``start`` (or from every vertex).

    Plain exhaustive backtracking with no theorem-based shortcuts, so it
    serves as an independent oracle for :func:`classify`. Results come in
    lexicographic edge-id order (then by vertex sequence). Each attempted
    edge extension costs one unit of ``budget``; exceeding it raises
    :class:`BudgetExceeded`.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if start is not None and not g.has_vertex(start):
        raise UnknownVertex(f"unknown vertex {start!r}")
    starts = [start] if start is not None else list(g.vertex_ids)

    total = g.edge_count
    incidence = {
        v: tuple((e, g.other_end(e, v)) for e in g.incident_edges(v))
        for v in g.vertex_ids
    }
    used: set[EdgeId] = set()
    expansions = 0
    results: list[Trail] = []

    def extend(v: VertexId, vseq: list[VertexId], eseq: list[EdgeId]) -> None:
        nonlocal expansions
        if len(eseq) == total:
            results.append(Trail(tuple(vseq), tuple(eseq)))
            return
        for e, w in incidence[v]:
            if e in used:
                continue
            expansions += 1
            if expansions > budget:
                raise BudgetExceeded(f"enumeration exceeded {budget} expansions")
            used.add(e)
            vseq.append(w)
            eseq.append(e)
            extend(w, vseq, eseq)
            eseq.pop()
            vseq.pop()
            used.remove(e)

    for s in sorted(starts):
        extend(s, [s], [])
    results.sort(key=lambda t: (t.edge_seq, t.vertex_seq))
    return results
