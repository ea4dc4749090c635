"""Graph reconstruction from shortest-path distance queries."""

from ._core import (
    BudgetExceeded,
    Graph,
    InvariantViolation,
    ParseError,
    bfs_distances,
    generate,
    is_chordal,
    is_connected,
    layering_tree_dump,
    layers,
    max_degree,
    parts,
    read_edge_list,
    reconstruct,
    reconstruct_naive,
    run_experiment,
    tree_length,
    write_edge_list,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "InvariantViolation",
    "ParseError",
    "bfs_distances",
    "generate",
    "is_chordal",
    "is_connected",
    "layering_tree_dump",
    "layers",
    "max_degree",
    "parts",
    "read_edge_list",
    "reconstruct",
    "reconstruct_naive",
    "run_experiment",
    "tree_length",
    "write_edge_list",
]

__version__ = "0.1.0"
