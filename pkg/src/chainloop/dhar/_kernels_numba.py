"""Chip-firing kernels compiled with numba.

Graphs arrive in CSR form (``indptr``, ``indices``) with parallel edges
repeated; chip vectors are int64.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def make_effective_off(indptr, indices, levels, chips, q):
    """Equivalent divisor that is nonnegative away from ``q``.

    Works from the outermost BFS level inward: firing the ball of radius
    ``k-1`` around ``q`` pushes chips onto level ``k`` and only costs
    levels closer to ``q``.
    """
    c = chips.copy()
    n = c.shape[0]
    top = 0
    for v in range(n):
        if levels[v] > top:
            top = levels[v]
    for lev in range(top, 0, -1):
        need = 0
        for v in range(n):
            if levels[v] == lev and -c[v] > need:
                need = -c[v]
        if need == 0:
            continue
        for u in range(n):
            if levels[u] == lev - 1:
                for k in range(indptr[u], indptr[u + 1]):
                    w = indices[k]
                    if levels[w] == lev:
                        c[u] -= need
                        c[w] += need
    return c


@numba.njit(cache=True)
def dhar_reduce(indptr, indices, chips, q):
    """q-reduced divisor of a divisor that is effective away from ``q``."""
    c = chips.copy()
    n = c.shape[0]
    burnt = np.zeros(n, dtype=np.bool_)
    hits = np.zeros(n, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    while True:
        burnt[:] = False
        hits[:] = 0
        burnt[q] = True
        stack[0] = q
        top = 1
        nburnt = 1
        while top > 0:
            top -= 1
            u = stack[top]
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                if not burnt[w]:
                    hits[w] += 1
                    if hits[w] > c[w]:
                        burnt[w] = True
                        stack[top] = w
                        top += 1
                        nburnt += 1
        if nburnt == n:
            return c
        # fire the unburnt set as many times as it stays legal
        times = -1
        for v in range(n):
            if not burnt[v] and hits[v] > 0:
                t = c[v] // hits[v]
                if times < 0 or t < times:
                    times = t
        for v in range(n):
            if not burnt[v]:
                c[v] -= times * hits[v]
                for k in range(indptr[v], indptr[v + 1]):
                    w = indices[k]
                    if burnt[w]:
                        c[w] += times


@numba.njit(cache=True)
def reduce_any(indptr, indices, levels, chips, q):
    return dhar_reduce(indptr, indices, make_effective_off(indptr, indices, levels, chips, q), q)


@numba.njit(cache=True)
def all_subtractions_effective(indptr, indices, levels, chips, q, r):
    """True iff ``D - E`` is equivalent to an effective divisor for every
    effective ``E`` of degree ``r``; ``chips`` must already be q-reduced."""
    n = chips.shape[0]
    if r == 0:
        return chips[q] >= 0
    idx = np.zeros(r, dtype=np.int64)
    work = np.empty(n, dtype=np.int64)
    while True:
        work[:] = chips
        for k in range(r):
            work[idx[k]] -= 1
        red = dhar_reduce(indptr, indices, make_effective_off(indptr, indices, levels, work, q), q)
        if red[q] < 0:
            return False
        # next nondecreasing index tuple
        pos = r - 1
        while pos >= 0 and idx[pos] == n - 1:
            pos -= 1
        if pos < 0:
            return True
        idx[pos] += 1
        for k in range(pos + 1, r):
            idx[k] = idx[pos]
