"""Schemas and choreographies: graphs dressed for the dance floor.

A schema is a multigraph plus floor positions for its vertices and a
step style for each edge. A choreography is a trail through a schema
with one style and one beat number per step. Building a choreography
from a schema is exactly the Eulerian-trail problem, so everything here
leans on :mod:`coreograph.graph` and adds only the dressing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidDocument, UnknownName
from .graph import EdgeId, Multigraph, Trail, VertexId, find_trail
from .maps import builtin_map, map_to_graph
from .notation import Violation, parse, render, validate_trail

Point = tuple[float, float]

#: Step vocabulary used by the builtin schemas, in assignment order.
STYLE_PALETTE = ("step", "slide", "hop", "spin", "kick", "shuffle", "turn", "dip")


@dataclass(frozen=True)
class Schema:
    """A multigraph with a floor layout and per-edge step styles.

    Positions and styles must cover the graph exactly: one position per
    vertex, one style per edge, nothing extra.
    """

    graph: Multigraph
    floor_positions: Mapping[VertexId, Point]
    step_styles: Mapping[EdgeId, str]
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(
            self,
            "floor_positions",
            {v: (float(x), float(y)) for v, (x, y) in dict(self.floor_positions).items()},
        )
        object.__setattr__(self, "step_styles", dict(self.step_styles))
        if set(self.floor_positions) != set(self.graph.vertex_ids):
            raise InvalidDocument("floor positions must cover the vertices exactly")
        if set(self.step_styles) != set(self.graph.edge_ids):
            raise InvalidDocument("step styles must cover the edges exactly")
        for e, style in self.step_styles.items():
            if not isinstance(style, str) or not style:
                raise InvalidDocument(f"edge {e} has a non-string or empty style")

    def to_json(self) -> dict:
        out = self.graph.to_json()
        out["positions"] = {
            v: list(self.floor_positions[v]) for v in self.graph.vertex_ids
        }
        out["styles"] = {str(e): self.step_styles[e] for e in self.graph.edge_ids}
        if self.name is not None:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, doc: Mapping) -> "Schema":
        graph = Multigraph.from_json(doc)
        try:
            positions = {v: (p[0], p[1]) for v, p in doc["positions"].items()}
            styles = {int(e): s for e, s in doc["styles"].items()}
        except (KeyError, TypeError, IndexError, ValueError, AttributeError) as exc:
            raise InvalidDocument(f"bad schema document: {exc}") from exc
        return cls(graph, positions, styles, doc.get("name"))


@dataclass(frozen=True)
class Choreography:
    """One walk through a schema: a trail, a style and a beat per step."""

    trail: Trail
    styles: tuple[str, ...]
    beats: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "styles", tuple(self.styles))
        object.__setattr__(self, "beats", tuple(self.beats))
        n = len(self.trail.edge_seq)
        if len(self.styles) != n or len(self.beats) != n:
            raise InvalidDocument(
                f"choreography shape mismatch: {n} steps, "
                f"{len(self.styles)} styles, {len(self.beats)} beats"
            )

    def to_json(self) -> dict:
        return {
            "trail": render(self.trail),
            "styles": list(self.styles),
            "beats": list(self.beats),
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "Choreography":
        try:
            trail = parse(doc["trail"])
            styles = tuple(doc["styles"])
            beats = tuple(int(b) for b in doc["beats"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDocument(f"bad choreography document: {exc}") from exc
        return cls(trail, styles, beats)


def choreograph(
    schema: Schema,
    start: VertexId | None = None,
    beats_per_step: int = 1,
) -> Choreography:
    """Lay one Eulerian trail through the schema and schedule its steps.

    Step i takes the style of its edge and lands on beat
    ``i * beats_per_step``. Trail errors (no trail, infeasible start)
    propagate from :func:`coreograph.graph.find_trail`.
    """
    if beats_per_step < 1:
        raise ValueError("beats_per_step must be at least 1")
    trail = find_trail(schema.graph, start)
    styles = tuple(schema.step_styles[e] for e in trail.edge_seq)
    beats = tuple(i * beats_per_step for i in range(len(trail.edge_seq)))
    return Choreography(trail, styles, beats)


@dataclass(frozen=True)
class ChoreographyValidation:
    """Trail-level plus dressing-level verdict for a choreography.

    ``status`` follows trail validation ("eulerian", "well_formed",
    "invalid"); any style mismatch or beat-order defect downgrades it to
    "invalid" even when the underlying walk is sound.
    """

    status: str
    violations: tuple[Violation, ...] = ()

    @property
    def is_performable(self) -> bool:
        return self.status == "eulerian"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "violations": [v.to_json() for v in self.violations],
        }


def validate_choreography(c: Choreography, schema: Schema) -> ChoreographyValidation:
    """Check trail legality, style agreement, and beat monotonicity."""
    base = validate_trail(c.trail, schema.graph)
    violations = list(base.violations)
    for i, (e, style) in enumerate(zip(c.trail.edge_seq, c.styles)):
        if schema.graph.has_edge(e) and schema.step_styles[e] != style:
            violations.append(Violation("style_mismatch", at_step=i, edge_id=e))
    beats_ok = all(a < b for a, b in zip(c.beats, c.beats[1:]))
    if c.beats and c.beats[0] != 0:
        beats_ok = False
    if not beats_ok:
        violations.append(Violation("beat_order"))

    if not violations:
        status = "eulerian"
    elif all(v.kind == "missing_edges" for v in violations):
        status = "well_formed"
    else:
        status = "invalid"
    return ChoreographyValidation(status=status, violations=tuple(violations))


def _schema(name, edges, positions, vertices=None) -> Schema:
    vertex_ids = vertices if vertices is not None else sorted(positions)
    graph = Multigraph(vertex_ids, [(i, u, v) for i, (u, v) in enumerate(edges, 1)])
    styles = {
        e: STYLE_PALETTE[(e - 1) % len(STYLE_PALETTE)] for e in graph.edge_ids
    }
    return Schema(graph, positions, styles, name=name)


# Teaching set. GC1 is the running five-dancer example: two dancers (B
# and E) have three steps each, so every run starts at one of them and
# ends at the other. GC2 closes every loop (all even), GC3 overloads
# four dancers with odd step counts and cannot be run at all.
_GC1 = _schema(
    "GC1",
    [("A", "B"), ("B", "C"), ("C", "D"), ("D", "E"), ("E", "A"), ("B", "E")],
    {"A": (2.0, 4.0), "B": (4.0, 2.5), "C": (3.3, 0.5), "D": (0.7, 0.5), "E": (0.0, 2.5)},
)
_GC2 = _schema(
    "GC2",
    [("A", "B"), ("B", "C"), ("C", "A"), ("C", "D"), ("D", "E"), ("E", "C")],
    {"A": (0.0, 2.0), "B": (0.0, 0.0), "C": (1.5, 1.0), "D": (3.0, 2.0), "E": (3.0, 0.0)},
)
_GC3 = _schema(
    "GC3",
    [("A", "B"), ("B", "C"), ("C", "D"), ("D", "E"), ("E", "A"), ("A", "C"), ("B", "D")],
    {"A": (2.0, 4.0), "B": (4.0, 2.5), "C": (3.3, 0.5), "D": (0.7, 0.5), "E": (0.0, 2.5)},
)

# Exercise set: three impossible floors (G1, G5, G6), two start-bound
# floors (G2, G3), one free floor (G4).
_G1_GRAPH = map_to_graph(builtin_map("koenigsberg"))
_G1 = Schema(
    _G1_GRAPH,
    {"A": (2.0, 1.5), "B": (2.0, 3.0), "C": (2.0, 0.0), "D": (4.0, 1.5)},
    {e: STYLE_PALETTE[(e - 1) % len(STYLE_PALETTE)] for e in _G1_GRAPH.edge_ids},
    name="G1",
)
_G2 = _schema(
    "G2",
    [("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"),
     ("A", "C"), ("B", "D"), ("D", "E"), ("C", "E")],
    {"A": (0.0, 0.0), "B": (2.0, 0.0), "C": (2.0, 2.0), "D": (0.0, 2.0), "E": (1.0, 3.0)},
)
_G3 = _schema(
    "G3",
    [("A", "B"), ("B", "C"), ("C", "A"), ("C", "D"), ("D", "E")],
    {"A": (0.0, 2.0), "B": (2.0, 2.0), "C": (1.0, 0.5), "D": (1.0, -1.0), "E": (1.0, -2.5)},
)
_G4 = _schema(
    "G4",
    [("A", "B"), ("B", "C"), ("C", "D"), ("D", "A"), ("A", "C"), ("A", "C")],
    {"A": (0.0, 2.0), "B": (2.0, 2.0), "C": (2.0, 0.0), "D": (0.0, 0.0)},
)
_G5 = _schema(
    "G5",
    [("A", "B"), ("B", "C"), ("C", "A"), ("D", "E"), ("E", "F"), ("F", "D")],
    {"A": (0.0, 2.0), "B": (2.0, 2.0), "C": (1.0, 0.5),
     "D": (4.0, 2.0), "E": (6.0, 2.0), "F": (5.0, 0.5)},
)
_G6 = _schema(
    "G6",
    [("A", "B"), ("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"), ("C", "D")],
    {"A": (0.0, 2.0), "B": (2.0, 2.0), "C": (2.0, 0.0), "D": (0.0, 0.0)},
)

# Contrast set: a triangle with a tail (C1) and a plain path (C3) both
# admit trails while the pure cycle (C2) admits circuits, showing the
# verdict tracks degree parity rather than the presence of cycles.
_C1 = _schema(
    "C1",
    [("A", "B"), ("B", "C"), ("C", "A"), ("C", "D")],
    {"A": (0.0, 2.0), "B": (2.0, 2.0), "C": (1.0, 0.5), "D": (1.0, -1.0)},
)
_C2 = _schema(
    "C2",
    [("A", "B"), ("B", "C"), ("C", "D"), ("D", "A")],
    {"A": (0.0, 2.0), "B": (2.0, 2.0), "C": (2.0, 0.0), "D": (0.0, 0.0)},
)
_C3 = _schema(
    "C3",
    [("A", "B"), ("B", "C"), ("C", "D")],
    {"A": (0.0, 0.0), "B": (1.5, 0.0), "C": (3.0, 0.0), "D": (4.5, 0.0)},
)

_SCHEMAS: dict[str, Schema] = {
    s.name: s
    for s in (_GC1, _GC2, _GC3, _G1, _G2, _G3, _G4, _G5, _G6, _C1, _C2, _C3)
}

BUILTIN_SCHEMA_NAMES = tuple(sorted(_SCHEMAS))


def builtin_schema(name: str) -> Schema:
    try:
        return _SCHEMAS[name]
    except KeyError:
        raise UnknownName(
            f"unknown schema {name!r}; builtins: {', '.join(BUILTIN_SCHEMA_NAMES)}"
        ) from None
