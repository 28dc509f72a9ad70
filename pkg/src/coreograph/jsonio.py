"""Document plumbing shared by the CLI and the HTTP API.

Three document kinds travel as JSON: bare graphs, bridge maps, and
schemas. This module sniffs which kind a payload is, loads documents
from files or from ``atlas:NAME`` references into the builtin
collection, and serializes with sorted keys and fixed indentation so
equal values always produce identical bytes.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping, Union

from .choreography import Schema, builtin_schema
from .errors import InvalidDocument, UnknownName
from .graph import Multigraph
from .maps import BUILTIN_MAP_NAMES, MapInstance, builtin_map, map_to_graph

Document = Union[Multigraph, MapInstance, Schema]

ATLAS_PREFIX = "atlas:"


def dumps_stable(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent."""
    return json.dumps(obj, sort_keys=True, indent=2)


def detect_kind(doc: Mapping) -> str:
    """Sniff a payload: ``map``, ``schema``, or ``graph``.

    Maps carry "regions"; schemas are graphs that also carry
    "positions" and "styles"; anything else with "vertices" is a bare
    graph.
    """
    if not isinstance(doc, Mapping):
        raise InvalidDocument(f"expected a JSON object, got {type(doc).__name__}")
    if "regions" in doc:
        return "map"
    if "positions" in doc or "styles" in doc:
        return "schema"
    if "vertices" in doc:
        return "graph"
    raise InvalidDocument(
        "document has none of the markers 'regions', 'positions'/'styles', 'vertices'"
    )


def parse_document(doc: Mapping) -> Document:
    kind = detect_kind(doc)
    if kind == "map":
        return MapInstance.from_json(doc)
    if kind == "schema":
        return Schema.from_json(doc)
    return Multigraph.from_json(doc)


def document_kind(obj: Document) -> str:
    if isinstance(obj, MapInstance):
        return "map"
    if isinstance(obj, Schema):
        return "schema"
    if isinstance(obj, Multigraph):
        return "graph"
    raise InvalidDocument(f"not a known document type: {type(obj).__name__}")


def document_to_json(obj: Document) -> dict:
    return obj.to_json()


def as_graph(obj: Document) -> Multigraph:
    """The multigraph behind any document kind."""
    if isinstance(obj, MapInstance):
        return map_to_graph(obj)
    if isinstance(obj, Schema):
        return obj.graph
    return obj


def atlas_lookup(name: str) -> Document:
    """Find a builtin by bare name, trying maps first, then schemas."""
    if name in BUILTIN_MAP_NAMES:
        return builtin_map(name)
    try:
        return builtin_schema(name)
    except UnknownName:
        raise UnknownName(f"no builtin map or schema named {name!r}") from None


def load_source(ref: str) -> Document:
    """Load a document from an ``atlas:NAME`` reference or a file path."""
    if ref.startswith(ATLAS_PREFIX):
        return atlas_lookup(ref[len(ATLAS_PREFIX):])
    path = Path(ref)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidDocument(f"cannot read {ref!r}: {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"{ref!r} is not valid JSON: {exc}") from exc
    return parse_document(payload)
