"""Picard classes of the chain of loops: concrete and symbolic."""

from .concrete import (
    ClassData,
    ReducedRep,
    class_of,
    class_representative,
    is_effective_class,
    projection,
    realize,
    reduce_v0,
)
from .symbolic import (
    ZERO,
    Assumption,
    Free,
    Generic,
    MultM,
    SymAngle,
    SymClass,
    SymReducedRep,
    is_zero,
    sym_class_of_K,
    sym_is_effective,
    sym_reduce_v0,
    sym_reductions,
    sym_residual,
    symbolic_bound,
)

__all__ = [
    "Assumption",
    "ClassData",
    "Free",
    "Generic",
    "MultM",
    "ReducedRep",
    "SymAngle",
    "SymClass",
    "SymReducedRep",
    "ZERO",
    "class_of",
    "class_representative",
    "is_effective_class",
    "is_zero",
    "projection",
    "realize",
    "reduce_v0",
    "sym_class_of_K",
    "sym_is_effective",
    "sym_reduce_v0",
    "sym_reductions",
    "sym_residual",
    "symbolic_bound",
]
