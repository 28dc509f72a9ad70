"""Bridge maps: land regions joined by bridges, plus the builtin atlas.

A map is the geographic face of a multigraph. Regions carry display
labels and optional polygon outlines for rendering; bridges are unnamed
beyond their numeric ids. :func:`map_to_graph` forgets the geography and
keeps the ids, so trail strings computed on the graph read back onto the
map directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvalidGraph, UnknownName
from .graph import EdgeId, Multigraph, VertexId

Point = tuple[float, float]


@dataclass(frozen=True)
class Region:
    id: VertexId
    label: str
    polygon: tuple[Point, ...] | None = None

    def to_json(self) -> dict:
        out: dict = {"id": self.id, "label": self.label}
        if self.polygon is not None:
            out["polygon"] = [list(p) for p in self.polygon]
        return out


class MapInstance:
    """A named set of regions and the bridges between them."""

    __slots__ = ("name", "_regions", "_bridges")

    def __init__(
        self,
        name: str,
        regions: Mapping[VertexId, Region],
        bridges: Mapping[EdgeId, tuple[VertexId, VertexId]],
    ):
        for rid, region in regions.items():
            if rid != region.id:
                raise InvalidGraph(f"region key {rid!r} does not match id {region.id!r}")
        for bid, (a, b) in bridges.items():
            for end in (a, b):
                if end not in regions:
                    raise InvalidGraph(f"bridge {bid} endpoint {end!r} is not a region")
        self.name = name
        self._regions = dict(regions)
        self._bridges = {b: tuple(sorted(ends)) for b, ends in bridges.items()}
        # Let the graph constructor enforce the id grammar once.
        map_to_graph(self)

    @property
    def region_ids(self) -> tuple[VertexId, ...]:
        return tuple(sorted(self._regions))

    @property
    def bridge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(sorted(self._bridges))

    def region(self, rid: VertexId) -> Region:
        return self._regions[rid]

    def bridge_ends(self, bid: EdgeId) -> tuple[VertexId, VertexId]:
        return self._bridges[bid]

    def __repr__(self) -> str:
        return (
            f"MapInstance({self.name!r}, {len(self._regions)} regions, "
            f"{len(self._bridges)} bridges)"
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "regions": [self._regions[r].to_json() for r in self.region_ids],
            "bridges": [
                {"id": b, "ends": list(self._bridges[b])} for b in self.bridge_ids
            ],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "MapInstance":
        try:
            regions = {}
            for r in doc["regions"]:
                polygon = None
                if "polygon" in r:
                    polygon = tuple((float(x), float(y)) for x, y in r["polygon"])
                regions[r["id"]] = Region(r["id"], r.get("label", r["id"]), polygon)
            bridges = {b["id"]: (b["ends"][0], b["ends"][1]) for b in doc["bridges"]}
        except (KeyError, TypeError, IndexError, ValueError) as exc:
            raise InvalidGraph(f"bad map document: {exc}") from exc
        return cls(doc.get("name", "unnamed"), regions, bridges)


def map_to_graph(m: MapInstance) -> Multigraph:
    """Forget geography: regions become vertices, bridges become edges."""
    return Multigraph(
        {rid: m._regions[rid].label for rid in m._regions},
        {bid: ends for bid, ends in m._bridges.items()},
    )


def _rect(x: float, y: float, w: float = 1.0, h: float = 1.0) -> tuple[Point, ...]:
    return ((x, y), (x + w, y), (x + w, y + h), (x, y + h))


def _make_map(name, regions, bridges) -> MapInstance:
    return MapInstance(
        name,
        {rid: Region(rid, label, poly) for rid, (label, poly) in regions.items()},
        bridges,
    )


# The classic seven-bridges layout: island A, the two banks, and the east
# district D; no walk can cross each bridge exactly once.
_KOENIGSBERG = _make_map(
    "koenigsberg",
    {
        "A": ("island", _rect(2, 2, 2, 1)),
        "B": ("north bank", _rect(0, 4, 6, 1)),
        "C": ("south bank", _rect(0, 0, 6, 1)),
        "D": ("east district", _rect(5, 2, 1, 1)),
    },
    {1: ("A", "B"), 2: ("A", "B"), 3: ("A", "C"), 4: ("A", "C"),
     5: ("A", "D"), 6: ("B", "D"), 7: ("C", "D")},
)

# Mirror-symmetric two-island river: every crossing works, but only
# island-to-island. Swapping left and right banks fixes both islands,
# which is why the islands and nothing else can be the odd pair.
_MATHIGON2 = _make_map(
    "mathigon2",
    {
        "A": ("northwest bank", _rect(0, 3, 2, 1)),
        "B": ("southwest bank", _rect(0, 0, 2, 1)),
        "C": ("northeast bank", _rect(4, 3, 2, 1)),
        "D": ("southeast bank", _rect(4, 0, 2, 1)),
        "E": ("north island", _rect(2.5, 2.5, 1, 1)),
        "F": ("south island", _rect(2.5, 0.5, 1, 1)),
    },
    {1: ("A", "E"), 2: ("C", "E"), 3: ("B", "F"), 4: ("D", "F"),
     5: ("A", "B"), 6: ("C", "D"), 7: ("E", "F")},
)

# Four regions, six bridges, all even: a round trip exists from anywhere.
_FIG2_BOTTOM_LEFT = _make_map(
    "fig2_bottom_left",
    {
        "A": ("west isle", _rect(0, 1, 1.5, 1)),
        "B": ("mid isle", _rect(2, 1, 1.5, 1)),
        "C": ("east isle", _rect(4, 1, 1.5, 1)),
        "D": ("south shore", _rect(0, -0.5, 5.5, 1)),
    },
    {1: ("A", "D"), 2: ("A", "B"), 3: ("A", "B"),
     4: ("A", "B"), 5: ("B", "C"), 6: ("C", "D")},
)

# Pentagon of shores with a doubled channel crossing: again all even.
_FIG2_BOTTOM_RIGHT = _make_map(
    "fig2_bottom_right",
    {
        "A": ("north point", _rect(2, 4, 1, 1)),
        "B": ("east shore", _rect(4, 2.5, 1, 1)),
        "C": ("southeast shore", _rect(3.3, 0.5, 1, 1)),
        "D": ("southwest shore", _rect(0.7, 0.5, 1, 1)),
        "E": ("west shore", _rect(0, 2.5, 1, 1)),
    },
    {1: ("A", "B"), 2: ("B", "C"), 3: ("C", "D"), 4: ("D", "E"),
     5: ("E", "A"), 6: ("A", "C"), 7: ("A", "C")},
)

# Six districts around a canal ring, two extra cut-through bridges: four
# odd districts, so no single walk covers every bridge.
_LEIDEN = _make_map(
    "leiden",
    {
        "A": ("station quarter", _rect(0, 4, 1, 1)),
        "B": ("old town", _rect(2, 5, 1, 1)),
        "C": ("market side", _rect(4, 4, 1, 1)),
        "D": ("university side", _rect(4, 1, 1, 1)),
        "E": ("park quarter", _rect(2, 0, 1, 1)),
        "F": ("mill quarter", _rect(0, 1, 1, 1)),
    },
    {1: ("A", "B"), 2: ("B", "C"), 3: ("C", "D"), 4: ("D", "E"),
     5: ("E", "F"), 6: ("F", "A"), 7: ("A", "C"), 8: ("B", "D")},
)

_ATLAS: dict[str, MapInstance] = {
    m.name: m
    for m in (
        _KOENIGSBERG,
        _MATHIGON2,
        _FIG2_BOTTOM_LEFT,
        _FIG2_BOTTOM_RIGHT,
        _LEIDEN,
    )
}

BUILTIN_MAP_NAMES = tuple(sorted(_ATLAS))


def builtin_map(name: str) -> MapInstance:
    try:
        return _ATLAS[name]
    except KeyError:
        raise UnknownName(
            f"unknown map {name!r}; builtins: {', '.join(BUILTIN_MAP_NAMES)}"
        ) from None
