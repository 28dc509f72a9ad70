"""Eulerian-trail engine: classification, construction, notation, edits.

The usual imports:

    from coreograph import Multigraph, classify, find_trail
    from coreograph import parse, render, validate_trail
"""
from .choreography import (
    BUILTIN_SCHEMA_NAMES,
    Choreography,
    Schema,
    builtin_schema,
    choreograph,
    validate_choreography,
)
from .graph import (
    DEFAULT_BUDGET,
    AddEdge,
    ClassificationReport,
    EulerKind,
    MoveEdge,
    Multigraph,
    RemoveEdge,
    Trail,
    apply_edit,
    classify,
    enumerate_trails,
    feasible_starts,
    find_trail,
    next_edge_id,
)
from .inverse import (
    EditProposal,
    EditSearch,
    RejectedEdit,
    bridge_moves,
    search_edits,
    single_additions,
    single_removals,
)
from .maps import BUILTIN_MAP_NAMES, MapInstance, Region, builtin_map, map_to_graph
from .notation import (
    TrailAudit,
    TrailValidation,
    Violation,
    entry_exit_audit,
    parse,
    render,
    reverse_trail,
    rotate_circuit,
    validate_trail,
)

__version__ = "0.1.0"

__all__ = [
    "AddEdge",
    "BUILTIN_MAP_NAMES",
    "BUILTIN_SCHEMA_NAMES",
    "Choreography",
    "ClassificationReport",
    "DEFAULT_BUDGET",
    "EditProposal",
    "EditSearch",
    "EulerKind",
    "MapInstance",
    "MoveEdge",
    "Multigraph",
    "Region",
    "RejectedEdit",
    "RemoveEdge",
    "Schema",
    "Trail",
    "TrailAudit",
    "TrailValidation",
    "Violation",
    "apply_edit",
    "bridge_moves",
    "builtin_map",
    "builtin_schema",
    "choreograph",
    "classify",
    "entry_exit_audit",
    "enumerate_trails",
    "feasible_starts",
    "find_trail",
    "map_to_graph",
    "next_edge_id",
    "parse",
    "render",
    "reverse_trail",
    "rotate_circuit",
    "search_edits",
    "single_additions",
    "single_removals",
    "validate_choreography",
    "validate_trail",
]
