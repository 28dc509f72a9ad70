"""HTTP document API for the design studio.

Documents (schemas and bridge maps) live in an in-memory store guarded
by optimistic concurrency: every document carries a revision number,
mutations must quote the revision they saw, and a stale quote gets a 409
instead of a lost update. Bare graphs posted to the store are wrapped
into schemas (circular layout, default style) so the studio always has
something to draw.

All domain failures surface as ``{"code": ..., "reason": ...}`` bodies
with a status picked by error kind; the codes match the exceptions in
:mod:`coreograph.errors`, so CLI and API clients can share handling.
"""
from __future__ import annotations

import math
import threading
from pathlib import Path
from typing import Mapping

from fastapi import Body, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .choreography import BUILTIN_SCHEMA_NAMES, Schema, builtin_schema
from .errors import (
    Disconnects,
    EngineError,
    InfeasibleStart,
    InvalidDocument,
    NoTrail,
    ReadOnly,
    RevisionConflict,
    UnknownDocument,
    UnknownName,
    UnknownVertex,
)
from .graph import (
    DEFAULT_BUDGET,
    AddEdge,
    EdgeEdit,
    MoveEdge,
    Multigraph,
    RemoveEdge,
    apply_edit,
    classify,
    enumerate_trails,
    find_trail,
    next_edge_id,
)
from .inverse import EulerKind, edit_from_json, search_edits
from .jsonio import as_graph, atlas_lookup, detect_kind, dumps_stable
from .maps import BUILTIN_MAP_NAMES, MapInstance, builtin_map
from .notation import parse, render, validate_trail

DEFAULT_STYLE = "step"

_STATUS_BY_ERROR = {
    UnknownDocument: 404,
    UnknownName: 404,
    RevisionConflict: 409,
    ReadOnly: 403,
}


def _wrap_graph(g: Multigraph) -> Schema:
    """Dress a bare graph as a schema: vertices on a circle, one style."""
    ids = g.vertex_ids
    n = max(len(ids), 1)
    positions = {
        v: (
            round(math.cos(2 * math.pi * i / n), 6),
            round(math.sin(2 * math.pi * i / n), 6),
        )
        for i, v in enumerate(ids)
    }
    styles = {e: DEFAULT_STYLE for e in g.edge_ids}
    return Schema(g, positions, styles)


def _parse_payload(payload: Mapping):
    kind = detect_kind(payload)
    if kind == "map":
        return "map", MapInstance.from_json(payload)
    if kind == "schema":
        return "schema", Schema.from_json(payload)
    return "schema", _wrap_graph(Multigraph.from_json(payload))


def _edit_map(m: MapInstance, edit: EdgeEdit) -> MapInstance:
    regions = {r: m.region(r) for r in m.region_ids}
    bridges = {b: m.bridge_ends(b) for b in m.bridge_ids}
    edited = apply_edit(
        Multigraph({r: regions[r].label for r in regions}, bridges), edit
    )
    return MapInstance(
        m.name, regions, {e: edited.endpoints(e) for e in edited.edge_ids}
    )


def _edit_schema(s: Schema, edit: EdgeEdit, style: str | None) -> Schema:
    new_graph = apply_edit(s.graph, edit)
    styles = dict(s.step_styles)
    if isinstance(edit, AddEdge):
        eid = edit.edge_id if edit.edge_id is not None else next_edge_id(s.graph)
        styles[eid] = style or DEFAULT_STYLE
    elif isinstance(edit, RemoveEdge):
        del styles[edit.edge_id]
    elif isinstance(edit, MoveEdge) and style is not None:
        styles[edit.edge_id] = style
    return Schema(new_graph, s.floor_positions, styles, s.name)


class _StoredDoc:
    __slots__ = ("doc_id", "kind", "obj", "revision")

    def __init__(self, doc_id: str, kind: str, obj, revision: int = 1):
        self.doc_id = doc_id
        self.kind = kind
        self.obj = obj
        self.revision = revision


class DocumentStore:
    """Thread-safe in-memory document table with optional JSON snapshots.

    Ids are handed out sequentially (``doc-1``, ``doc-2``, ...) so runs
    are reproducible. When ``persist`` is set, every accepted change
    rewrites the snapshot file; the constructor reloads it if present.
    """

    def __init__(self, persist: str | Path | None = None):
        self._lock = threading.RLock()
        self._docs: dict[str, _StoredDoc] = {}
        self._next_id = 1
        self._persist = Path(persist) if persist else None
        if self._persist and self._persist.exists():
            self._load(self._persist)

    def create(self, payload: Mapping) -> _StoredDoc:
        kind, obj = _parse_payload(payload)
        with self._lock:
            doc_id = f"doc-{self._next_id}"
            self._next_id += 1
            doc = _StoredDoc(doc_id, kind, obj)
            self._docs[doc_id] = doc
            self._save()
            return doc

    def get(self, doc_id: str) -> _StoredDoc:
        with self._lock:
            try:
                return self._docs[doc_id]
            except KeyError:
                raise UnknownDocument(f"no document {doc_id!r}") from None

    def mutate(self, doc_id: str, revision: int, edit: EdgeEdit, style: str | None):
        with self._lock:
            doc = self.get(doc_id)
            if revision != doc.revision:
                raise RevisionConflict(
                    f"document {doc_id} is at revision {doc.revision}, "
                    f"request quoted {revision}"
                )
            was_connected = as_graph(doc.obj).is_edge_connected()
            if doc.kind == "map":
                new_obj = _edit_map(doc.obj, edit)
            else:
                new_obj = _edit_schema(doc.obj, edit, style)
            if was_connected and not as_graph(new_obj).is_edge_connected():
                raise Disconnects(
                    "edit would split the edges into separate components"
                )
            doc.obj = new_obj
            doc.revision += 1
            self._save()
            return doc

    def _save(self) -> None:
        if not self._persist:
            return
        snapshot = {
            "next_id": self._next_id,
            "docs": [
                {
                    "doc_id": d.doc_id,
                    "kind": d.kind,
                    "revision": d.revision,
                    "payload": d.obj.to_json(),
                }
                for d in self._docs.values()
            ],
        }
        tmp = self._persist.with_suffix(".tmp")
        tmp.write_text(dumps_stable(snapshot))
        tmp.replace(self._persist)

    def _load(self, path: Path) -> None:
        import json

        snapshot = json.loads(path.read_text())
        self._next_id = snapshot["next_id"]
        for entry in snapshot["docs"]:
            obj = (
                MapInstance.from_json(entry["payload"])
                if entry["kind"] == "map"
                else Schema.from_json(entry["payload"])
            )
            self._docs[entry["doc_id"]] = _StoredDoc(
                entry["doc_id"], entry["kind"], obj, entry["revision"]
            )


class MutateRequest(BaseModel):
    revision: int
    edit: dict
    style: str | None = None


class TrailsRequest(BaseModel):
    start: str | None = None
    all: bool = False
    limit: int | None = None
    beats_per_step: int = 1
    budget: int = DEFAULT_BUDGET


class ValidateRequest(BaseModel):
    trail: str
    doc_id: str


def _resolve_for_validate(store: DocumentStore, doc_id: str):
    if doc_id.startswith("atlas:"):
        return atlas_lookup(doc_id[len("atlas:"):])
    return store.get(doc_id).obj


def _trail_entry(trail, schema: Schema | None, beats_per_step: int) -> dict:
    entry = {
        "trail": render(trail),
        "start": trail.start,
        "end": trail.end,
        "is_circuit": trail.is_circuit,
    }
    if schema is not None:
        entry["styles"] = [schema.step_styles[e] for e in trail.edge_seq]
        entry["beats"] = [i * beats_per_step for i in range(len(trail.edge_seq))]
    return entry


def create_app(
    store: DocumentStore | None = None, atlas_readonly: bool = False
) -> FastAPI:
    store = store if store is not None else DocumentStore()
    app = FastAPI(title="coreograph", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(EngineError)
    async def _engine_error(request, exc: EngineError):
        status = _STATUS_BY_ERROR.get(type(exc), 422)
        return JSONResponse(
            status_code=status, content={"code": exc.code, "reason": str(exc)}
        )

    def _guard_mutation():
        if atlas_readonly:
            raise ReadOnly("server is in read-only mode")

    @app.post("/docs", status_code=201)
    def create_doc(payload: dict = Body(...)):
        _guard_mutation()
        doc = store.create(payload)
        return {"doc_id": doc.doc_id, "revision": doc.revision}

    @app.get("/docs/{doc_id}")
    def get_doc(doc_id: str):
        doc = store.get(doc_id)
        return {
            "doc_id": doc.doc_id,
            "revision": doc.revision,
            "kind": doc.kind,
            "payload": doc.obj.to_json(),
        }

    @app.patch("/docs/{doc_id}")
    def patch_doc(doc_id: str, req: MutateRequest):
        _guard_mutation()
        try:
            edit = edit_from_json(req.edit)
        except (ValueError, KeyError, TypeError) as exc:
            raise InvalidDocument(f"bad edit: {exc}") from None
        doc = store.mutate(doc_id, req.revision, edit, req.style)
        report = classify(as_graph(doc.obj))
        return {
            "doc_id": doc.doc_id,
            "revision": doc.revision,
            "classification": report.to_json(),
        }

    @app.get("/docs/{doc_id}/classification")
    def get_classification(doc_id: str):
        doc = store.get(doc_id)
        report = classify(as_graph(doc.obj))
        return {
            "doc_id": doc.doc_id,
            "revision": doc.revision,
            "classification": report.to_json(),
        }

    @app.post("/docs/{doc_id}/trails")
    def post_trails(doc_id: str, req: TrailsRequest):
        doc = store.get(doc_id)
        g = as_graph(doc.obj)
        schema = doc.obj if doc.kind == "schema" else None
        if req.start is not None and not g.has_vertex(req.start):
            raise UnknownVertex(f"unknown vertex {req.start!r}")
        if req.beats_per_step < 1:
            raise InvalidDocument("beats_per_step must be at least 1")
        report = classify(g)
        if req.all:
            trails = enumerate_trails(g, req.start, budget=req.budget)
        else:
            try:
                trails = [find_trail(g, req.start)]
            except NoTrail:
                trails = []
            # an infeasible start is a client input problem, not a "no"
        shown = trails if req.limit is None else trails[: req.limit]
        return {
            "doc_id": doc.doc_id,
            "revision": doc.revision,
            "count": len(trails),
            "trails": [_trail_entry(t, schema, req.beats_per_step) for t in shown],
            "classification": report.to_json(),
        }

    @app.post("/docs/{doc_id}/edits")
    def post_edits(doc_id: str, op: str, target: str):
        doc = store.get(doc_id)
        try:
            kind = EulerKind(target)
        except ValueError:
            raise InvalidDocument(
                f"target must be one of I, II, III, got {target!r}"
            ) from None
        try:
            search = search_edits(as_graph(doc.obj), op, kind)
        except ValueError as exc:
            raise InvalidDocument(str(exc)) from None
        out = search.to_json()
        out["doc_id"] = doc.doc_id
        out["revision"] = doc.revision
        out["count"] = len(search.proposals)
        return out

    @app.get("/atlas")
    def atlas_index():
        return {
            "maps": list(BUILTIN_MAP_NAMES),
            "schemas": list(BUILTIN_SCHEMA_NAMES),
        }

    @app.get("/atlas/{name}")
    def atlas_entry(name: str):
        if name in BUILTIN_MAP_NAMES:
            obj, kind = builtin_map(name), "map"
        else:
            obj, kind = builtin_schema(name), "schema"
        report = classify(as_graph(obj))
        return {
            "name": name,
            "kind": kind,
            "payload": obj.to_json(),
            "classification": report.to_json(),
        }

    @app.post("/validate")
    def validate(req: ValidateRequest):
        obj = _resolve_for_validate(store, req.doc_id)
        trail = parse(req.trail)
        verdict = validate_trail(trail, as_graph(obj))
        out = verdict.to_json()
        out["doc_id"] = req.doc_id
        return out

    return app


def serve(
    host: str = "127.0.0.1",
    port: int = 8000,
    persist: str | None = None,
    atlas_readonly: bool = False,
) -> None:  # pragma: no cover - exercised via subprocess in integration tests
    import uvicorn

    app = create_app(DocumentStore(persist), atlas_readonly=atlas_readonly)
    uvicorn.run(app, host=host, port=port, log_level="warning")
