"""Shared fixtures and the naive reference enumerator.

``brute_trails`` recomputes Eulerian trails straight from a graph's JSON
form with its own adjacency structure and recursion, so suites can check
the engine against an implementation that shares none of its code.
"""
from __future__ import annotations

import pytest

from coreograph import Multigraph, builtin_map, builtin_schema, map_to_graph


def brute_trails(doc: dict) -> set[tuple[tuple[str, ...], tuple[int, ...]]]:
    """Every Eulerian trail of a graph JSON document, found naively.

    Returns ``(vertex_seq, edge_seq)`` pairs as a set; order is not
    specified. A graph with no edges yields one trivial trail per vertex.
    """
    ends = {e["id"]: tuple(e["ends"]) for e in doc["edges"]}
    vertices = [v["id"] for v in doc["vertices"]]
    adj: dict[str, list[tuple[int, str]]] = {v: [] for v in vertices}
    for eid, (u, w) in ends.items():
        adj[u].append((eid, w))
        if w != u:
            adj[w].append((eid, u))
    total = len(ends)
    found: set[tuple[tuple[str, ...], tuple[int, ...]]] = set()

    def walk(v, used, vpath, epath):
        if len(epath) == total:
            found.add((tuple(vpath), tuple(epath)))
            return
        for eid, w in adj[v]:
            if eid not in used:
                walk(w, used | {eid}, vpath + [w], epath + [eid])

    for v in vertices:
        walk(v, frozenset(), [v], [])
    return found


@pytest.fixture
def koenigsberg() -> Multigraph:
    return map_to_graph(builtin_map("koenigsberg"))


@pytest.fixture
def bottom_left() -> Multigraph:
    return map_to_graph(builtin_map("fig2_bottom_left"))


@pytest.fixture
def gc1():
    return builtin_schema("GC1")
