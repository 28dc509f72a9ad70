"""Domain exceptions shared by every engine module.

Each error carries a stable ``code`` string so the CLI and the HTTP API can
emit the same machine-readable identifiers.
"""
from __future__ import annotations


class EngineError(Exception):
    """Base class for all domain errors."""

    code = "engine_error"


class InvalidGraph(EngineError):
    """A graph (or map/schema) violates a construction invariant."""

    code = "invalid_graph"


class UnknownVertex(EngineError):
    code = "unknown_vertex"


class UnknownEdge(EngineError):
    code = "unknown_edge"


class DuplicateEdgeId(EngineError):
    code = "duplicate_edge_id"


class NoTrail(EngineError):
    """The graph admits no Eulerian trail at all."""

    code = "no_trail"


class InfeasibleStart(EngineError):
    """A trail exists, but not from the requested start vertex."""

    code = "infeasible_start"


class BudgetExceeded(EngineError):
    """Exhaustive enumeration hit its node-expansion limit."""

    code = "budget_exceeded"


class MalformedTrailString(EngineError):
    code = "malformed_trail_string"


class NotACircuit(EngineError):
    """Rotation is only defined on closed trails."""

    code = "not_a_circuit"


class UnknownName(EngineError):
    """No builtin map or schema under the requested atlas name."""

    code = "unknown_name"


class InvalidDocument(EngineError):
    """A JSON document does not match any supported format."""

    code = "invalid_document"


class UnknownDocument(EngineError):
    code = "unknown_document"


class RevisionConflict(EngineError):
    """Stale-revision write rejected by the document store."""

    code = "revision_conflict"


class Disconnects(EngineError):
    """The requested edit would split the edges into separate components."""

    code = "disconnects"


class ReadOnly(EngineError):
    """Mutation attempted against a read-only service."""

    code = "read_only"
