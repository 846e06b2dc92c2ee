"""Chip-firing ground truth on finite graphs."""

from __future__ import annotations

import numpy as np

from ..errors import DegreeTooLarge
from . import _backend
from .graph import FiniteGraph

MAX_RANK_DEGREE = 12


def _as_chips(F: FiniteGraph, D) -> np.ndarray:
    chips = np.ascontiguousarray(D, dtype=np.int64)
    if chips.shape != (F.n,):
        raise ValueError(f"divisor has shape {chips.shape}, graph has {F.n} nodes")
    return chips


def dhar_reduce(F: FiniteGraph, D, q: int, kernels=None) -> np.ndarray:
    """The unique q-reduced divisor equivalent to ``D``."""
    k = kernels or _backend.kernels
    return k.reduce_any(F.indptr, F.indices, F.bfs_levels(q), _as_chips(F, D), q)


def fin_is_effective(F: FiniteGraph, D, q: int = 0) -> bool:
    return bool(dhar_reduce(F, D, q)[q] >= 0)


def fin_equivalent(F: FiniteGraph, D1, D2, q: int = 0) -> bool:
    return bool(np.array_equal(dhar_reduce(F, D1, q), dhar_reduce(F, D2, q)))


def fin_rank_at_least(F: FiniteGraph, D, r: int, q: int = 0, kernels=None) -> bool:
    k = kernels or _backend.kernels
    levels = F.bfs_levels(q)
    red = k.reduce_any(F.indptr, F.indices, levels, _as_chips(F, D), q)
    if red[q] < 0:
        return False
    return bool(k.all_subtractions_effective(F.indptr, F.indices, levels, red, q, r))


def fin_rank(F: FiniteGraph, D, q: int = 0, kernels=None) -> int:
    """Baker-Norine rank by brute force over all effective ``E``."""
    chips = _as_chips(F, D)
    deg = int(chips.sum())
    if deg > MAX_RANK_DEGREE:
        raise DegreeTooLarge(f"degree {deg} exceeds brute-force limit {MAX_RANK_DEGREE}")
    if deg < 0:
        return -1
    k = kernels or _backend.kernels
    levels = F.bfs_levels(q)
    red = k.reduce_any(F.indptr, F.indices, levels, chips, q)
    if red[q] < 0:
        return -1
    r = 0
    while r < deg and k.all_subtractions_effective(F.indptr, F.indices, levels, red, q, r + 1):
        r += 1
    return r
