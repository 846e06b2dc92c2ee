"""Pure-numpy versions of the chip-firing kernels.

Same signatures and results as the numba kernels; selected with
``CHAINLOOP_NO_JIT=1`` or when numba is unavailable.
"""

from itertools import combinations_with_replacement

import numpy as np


def _edge_arrays(indptr, indices):
    src = np.repeat(np.arange(len(indptr) - 1), np.diff(indptr))
    return src, indices


def make_effective_off(indptr, indices, levels, chips, q):
    c = np.array(chips, dtype=np.int64)
    src, dst = _edge_arrays(indptr, indices)
    for lev in range(int(levels.max()), 0, -1):
        at = levels == lev
        need = int(max(0, -c[at].min())) if at.any() else 0
        if need == 0:
            continue
        cross = (levels[src] == lev - 1) & (levels[dst] == lev)
        np.subtract.at(c, src[cross], need)
        np.add.at(c, dst[cross], need)
    return c


def dhar_reduce(indptr, indices, chips, q):
    c = np.array(chips, dtype=np.int64)
    n = len(c)
    src, dst = _edge_arrays(indptr, indices)
    while True:
        burnt = np.zeros(n, dtype=bool)
        burnt[q] = True
        while True:
            hits = np.bincount(dst[burnt[src]], minlength=n)
            fresh = ~burnt & (hits > c)
            if not fresh.any():
                break
            burnt |= fresh
        if burnt.all():
            return c
        unburnt = ~burnt
        firing = unburnt & (hits > 0)
        times = int((c[firing] // hits[firing]).min())
        c[unburnt] -= times * hits[unburnt]
        gain = np.bincount(dst[unburnt[src]], minlength=n)
        c[burnt] += times * gain[burnt]


def reduce_any(indptr, indices, levels, chips, q):
    return dhar_reduce(indptr, indices, make_effective_off(indptr, indices, levels, chips, q), q)


def all_subtractions_effective(indptr, indices, levels, chips, q, r):
    if r == 0:
        return bool(chips[q] >= 0)
    n = len(chips)
    for combo in combinations_with_replacement(range(n), r):
        work = np.array(chips, dtype=np.int64)
        np.subtract.at(work, list(combo), 1)
        if reduce_any(indptr, indices, levels, work, q)[q] < 0:
            return False
    return True
