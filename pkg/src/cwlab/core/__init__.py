"""Graph values and the elementary transformations used throughout the package."""

from .graph import Graph, GraphError, GraphFormatError, edge_key
from .ops import (
    ISO_MAX_VERTICES,
    ContractionResult,
    canonical_iso_equal,
    contract_edges,
    delete_vertices,
    distance,
    erase_vertex,
    graphs_equal,
    is_stable,
    local_complement,
)

__all__ = [
    "Graph",
    "GraphError",
    "GraphFormatError",
    "edge_key",
    "ISO_MAX_VERTICES",
    "ContractionResult",
    "canonical_iso_equal",
    "contract_edges",
    "delete_vertices",
    "distance",
    "erase_vertex",
    "graphs_equal",
    "is_stable",
    "local_complement",
]
