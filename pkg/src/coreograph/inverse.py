"""Single-edit searches: which one-edge change reaches a target Euler type.

Rather than reasoning about parity flips symbolically, each candidate
edit is applied to a copy of the graph and the copy is re-classified, so
every returned proposal carries its own proof. Edits that leave the
edges disconnected are never proposed; they are returned separately as
rejections so callers can explain them.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .graph import (
    AddEdge,
    ClassificationReport,
    EdgeEdit,
    EulerKind,
    MoveEdge,
    Multigraph,
    RemoveEdge,
    VertexId,
    apply_edit,
    classify,
    next_edge_id,
)


@dataclass(frozen=True)
class EditProposal:
    """An edit together with the classification of the edited graph.

    ``degenerate`` marks technically valid but uninteresting edits: loop
    additions (a loop never changes parity) and moves that change
    nothing or merely curl an edge into a loop.
    """

    edit: EdgeEdit
    result: ClassificationReport
    degenerate: bool = False

    @property
    def resulting_type(self) -> EulerKind:
        return self.result.kind

    @property
    def resulting_feasible_starts(self) -> frozenset[VertexId]:
        return self.result.feasible_starts

    def to_json(self) -> dict:
        return {
            "edit": _edit_to_json(self.edit),
            "resulting_type": self.result.kind.value,
            "feasible_starts": sorted(self.result.feasible_starts),
            "degenerate": self.degenerate,
        }


@dataclass(frozen=True)
class RejectedEdit:
    """An edit excluded from proposals, with the reason."""

    edit: EdgeEdit
    reason: str = "disconnects"

    def to_json(self) -> dict:
        return {"edit": _edit_to_json(self.edit), "reason": self.reason}


@dataclass(frozen=True)
class EditSearch:
    """Outcome of scanning every candidate edit of one kind."""

    target: EulerKind
    proposals: tuple[EditProposal, ...]
    rejected: tuple[RejectedEdit, ...]

    def to_json(self) -> dict:
        return {
            "target": self.target.value,
            "proposals": [p.to_json() for p in self.proposals],
            "rejected": [r.to_json() for r in self.rejected],
        }


def _edit_to_json(edit: EdgeEdit) -> dict:
    if isinstance(edit, AddEdge):
        return {"kind": "add", "add": list(edit.ends)}
    if isinstance(edit, RemoveEdge):
        return {"kind": "remove", "remove": edit.edge_id}
    return {"kind": "move", "remove": edit.edge_id, "add": list(edit.ends)}


def edit_from_json(doc: dict) -> EdgeEdit:
    """Parse the wire form produced by :func:`EditProposal.to_json`."""
    kind = doc.get("kind")
    if kind == "add":
        a, b = doc["add"]
        return AddEdge((a, b))
    if kind == "remove":
        return RemoveEdge(int(doc["remove"]))
    if kind == "move":
        a, b = doc["add"]
        return MoveEdge(int(doc["remove"]), (a, b))
    raise ValueError(f"unknown edit kind {kind!r}")


def _vertex_pairs(g: Multigraph):
    """Unordered endpoint pairs over the vertices, loops included."""
    return combinations_with_replacement(g.vertex_ids, 2)


def _scan(g, target, candidates, degenerate=lambda edit: False) -> EditSearch:
    proposals = []
    rejected = []
    for edit in candidates:
        report = classify(apply_edit(g, edit))
        if report.reason == "disconnected":
            rejected.append(RejectedEdit(edit))
        elif report.kind is target:
            proposals.append(EditProposal(edit, report, degenerate(edit)))
    return EditSearch(target, tuple(proposals), tuple(rejected))


def single_additions(g: Multigraph, target: EulerKind) -> EditSearch:
    """Every one-edge addition whose result has the target type.

    Candidates are all unordered vertex pairs including loops; the new
    edge takes the next free id. Additions never disconnect anything,
    so the rejection list stays empty here.
    """
    eid = next_edge_id(g)
    candidates = [AddEdge((u, v), eid) for u, v in _vertex_pairs(g)]
    return _scan(g, target, candidates, degenerate=lambda e: e.ends[0] == e.ends[1])


def single_removals(g: Multigraph, target: EulerKind) -> EditSearch:
    """Every one-edge removal whose result has the target type.

    Removals that split the remaining edges into separate components
    are rejected rather than proposed, whatever the target.
    """
    candidates = [RemoveEdge(e) for e in g.edge_ids]
    return _scan(g, target, candidates)


def bridge_moves(g: Multigraph, target: EulerKind) -> EditSearch:
    """Every reattachment of one existing edge reaching the target type.

    Each edge is tried against every unordered vertex pair. Moves that
    recreate the original attachment or curl an edge into a loop are
    kept but flagged degenerate; disconnecting moves are rejected.
    """
    pairs = list(_vertex_pairs(g))
    candidates = [MoveEdge(e, (u, v)) for e in g.edge_ids for u, v in pairs]

    def is_degenerate(edit: MoveEdge) -> bool:
        return edit.ends[0] == edit.ends[1] or (
            tuple(sorted(edit.ends)) == g.endpoints(edit.edge_id)
        )

    return _scan(g, target, candidates, degenerate=is_degenerate)


_SEARCHES = {
    "add": single_additions,
    "remove": single_removals,
    "move": bridge_moves,
}


def search_edits(g: Multigraph, op: str, target: EulerKind) -> EditSearch:
    """Dispatch by operation name: ``add``, ``remove``, or ``move``."""
    try:
        fn = _SEARCHES[op]
    except KeyError:
        raise ValueError(
            f"unknown edit operation {op!r}; choose from {sorted(_SEARCHES)}"
        ) from None
    return fn(g, target)
