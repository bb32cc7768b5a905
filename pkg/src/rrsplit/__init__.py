"""Exact maximum common induced subgraph search with redundancy-reducing pruning."""
from .graph import EquivalenceClasses, Graph, GraphError, bitset, build_graph, equivalence_classes, members
from .oracle import brute_force_mcs, verify_mapping
from .solver import SolveReport, SolverConfig, solve, solve_mcsplit, solve_rrsplit

__all__ = [
    "EquivalenceClasses",
    "Graph",
    "GraphError",
    "SolveReport",
    "SolverConfig",
    "bitset",
    "brute_force_mcs",
    "build_graph",
    "equivalence_classes",
    "members",
    "solve",
    "solve_mcsplit",
    "solve_rrsplit",
    "verify_mapping",
]

__version__ = "0.1.0"
