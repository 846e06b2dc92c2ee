"""Independent finite-graph oracle: Dhar reduction and brute-force rank."""

from ._backend import BACKEND, ENV_FLAG, load as load_kernels
from .graph import Discretization, FiniteGraph, cycle_graph, discretize
from .oracle import dhar_reduce, fin_equivalent, fin_is_effective, fin_rank, fin_rank_at_least

__all__ = [
    "BACKEND",
    "Discretization",
    "ENV_FLAG",
    "FiniteGraph",
    "cycle_graph",
    "dhar_reduce",
    "discretize",
    "fin_equivalent",
    "fin_is_effective",
    "fin_rank",
    "fin_rank_at_least",
    "load_kernels",
]
