"""Exact divisor theory on the chain of loops.

Picard classes, lingering lattice paths, piecewise-linear certificates and
an exhaustive search showing that no positive-rank ``D`` has ``K - 2D``
effective, cross-checked against a finite-graph chip-firing oracle.
"""

from .chain_graph import (
    ChainGraph,
    Divisor,
    GraphPoint,
    LoopPoint,
    Vertex,
    canonical_divisor,
    is_generic,
    new_chain,
    remove_loops,
    subchain,
    uniform_chain,
)
from .lattice_path import LatticePath, chips_at_vertex, lingering_path, rank_at_least
from .picard import ClassData, ReducedRep, class_of, is_effective_class, realize, reduce_v0
from .pl_function import PLFunction, certificate, divisor_of, restriction_order, slope_balance_solutions
from .search import count_rho0, enumerate_rank1_classes, gp_verify, oracle_crosscheck

__version__ = "0.1.0"

__all__ = [
    "ChainGraph",
    "ClassData",
    "Divisor",
    "GraphPoint",
    "LatticePath",
    "LoopPoint",
    "PLFunction",
    "ReducedRep",
    "Vertex",
    "canonical_divisor",
    "certificate",
    "chips_at_vertex",
    "class_of",
    "count_rho0",
    "divisor_of",
    "enumerate_rank1_classes",
    "gp_verify",
    "is_effective_class",
    "is_generic",
    "lingering_path",
    "new_chain",
    "oracle_crosscheck",
    "rank_at_least",
    "realize",
    "reduce_v0",
    "remove_loops",
    "restriction_order",
    "slope_balance_solutions",
    "subchain",
    "uniform_chain",
]
