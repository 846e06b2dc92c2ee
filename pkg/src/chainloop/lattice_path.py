"""Lingering lattice paths and the rank criterion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .chain_graph import ChainGraph, is_generic
from .errors import AmbiguousClass, BoundExceeded, IndexOutOfRange, NotGeneric
from .picard import (
    ZERO,
    ClassData,
    MultM,
    ReducedRep,
    SymClass,
    SymReducedRep,
    is_zero,
    reduce_v0,
    sym_reduce_v0,
    symbolic_bound,
)
from .picard.symbolic import sub

DOWN = "down"
LINGER = "linger"


def up(j: int = 0) -> str:
    return f"up:{j}"


@dataclass(frozen=True)
class LatticePath:
    r: int
    p: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    @property
    def g(self) -> int:
        return len(self.kinds)

    def scalar(self) -> tuple[int, ...]:
        """The path as integers; only meaningful for ``r == 1``."""
        return tuple(v[0] for v in self.p)

    def in_chamber(self) -> bool:
        return all(in_chamber(v) for v in self.p)


def in_chamber(y) -> bool:
    """Open Weyl chamber ``y_0 > y_1 > ... > y_{r-1} > 0``."""
    return all(a > b for a, b in zip(y, y[1:])) and y[-1] > 0


def _check_generic(G: ChainGraph) -> None:
    if not is_generic(G):
        raise NotGeneric("the lattice path step rule needs generic edge lengths")


def lingering_path(G: ChainGraph | None, R: Union[ReducedRep, SymReducedRep], r: int = 1) -> LatticePath:
    """Lingering lattice path of v_0-reduced data.

    Concrete data needs a generic ``G``; symbolic data is length-free and
    ``G`` may be None.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if R.d0 < 0:
        raise ValueError("lattice paths are defined for effective classes (d0 >= 0)")
    if isinstance(R, SymReducedRep):
        return _sym_path(R, r)
    _check_generic(G)
    if r == 1:
        return _scalar_path(G, R)
    return _vector_path(G, R, r)


def _scalar_path(G: ChainGraph, R: ReducedRep) -> LatticePath:
    p = R.d0
    pts = [(p,)]
    kinds = []
    for i, x in enumerate(R.x, start=1):
        if x == 0:
            p -= 1
            kinds.append(DOWN)
        elif p > 0 and x == ((p + 1) * G.m(i)) % G.L(i):
            p += 1
            kinds.append(up(0))
        else:
            kinds.append(LINGER)
        pts.append((p,))
    return LatticePath(1, tuple(pts), tuple(kinds))


def _vector_path(G: ChainGraph, R: ReducedRep, r: int) -> LatticePath:
    p = tuple(R.d0 - j for j in range(r))
    pts = [p]
    kinds = []
    for i, x in enumerate(R.x, start=1):
        if x == 0:
            p = tuple(v - 1 for v in p)
            kinds.append(DOWN)
        else:
            hits = []
            if in_chamber(p):
                for j in range(r):
                    q = p[:j] + (p[j] + 1,) + p[j + 1:]
                    if in_chamber(q) and x == ((p[j] + 1) * G.m(i)) % G.L(i):
                        hits.append((j, q))
            # distinct coordinates give distinct lattice points under genericity
            assert len(hits) <= 1, f"ambiguous up-step on loop {i}"
            if hits:
                j, p = hits[0]
                kinds.append(up(j))
            else:
                kinds.append(LINGER)
        pts.append(p)
    return LatticePath(r, tuple(pts), tuple(kinds))


def _sym_path(R: SymReducedRep, r: int) -> LatticePath:
    g = len(R.x)
    p = tuple(R.d0 - j for j in range(r))
    pts = [p]
    kinds = []
    for i, x in enumerate(R.x, start=1):
        if x == ZERO:
            p = tuple(v - 1 for v in p)
            kinds.append(DOWN)
            pts.append(p)
            continue
        hit = None
        if in_chamber(p):
            for j in range(r):
                q = p[:j] + (p[j] + 1,) + p[j + 1:]
                if not in_chamber(q):
                    continue
                same = is_zero(sub(x, MultM(p[j] + 1)), g)
                if same is None:
                    if isinstance(x, MultM):
                        raise BoundExceeded(i, x.c - p[j] - 1, symbolic_bound(g))
                    raise AmbiguousClass(f"loop {i}: up-step test on {x!r} is undetermined")
                if same:
                    hit = (j, q)
                    break
        if hit:
            j, p = hit
            kinds.append(up(j))
        else:
            kinds.append(LINGER)
        pts.append(p)
    return LatticePath(r, tuple(pts), tuple(kinds))


def rank_at_least(G: ChainGraph | None, c: Union[ClassData, SymClass], r: int = 1) -> bool:
    """Rank >= r iff the lingering lattice path stays in the open chamber."""
    if isinstance(c, SymClass):
        R = sym_reduce_v0(c)
    else:
        _check_generic(G)
        R = reduce_v0(G, c)
    if R.d0 < 0:
        return False
    return lingering_path(G, R, r).in_chamber()


def chips_at_vertex(path: LatticePath, n: int) -> int:
    """``p_n``: chips at ``v_n`` of the ``v_n``-reduced equivalent divisor.

    Valid while ``p_0, ..., p_{n-1}`` stay positive.
    """
    if path.r != 1:
        raise ValueError("chips_at_vertex is defined for r = 1 paths")
    if not 0 <= n <= path.g:
        raise IndexOutOfRange(f"n={n} outside 0..{path.g}")
    return path.p[n][0]


def truncate(path: LatticePath, k: int) -> LatticePath:
    return LatticePath(path.r, path.p[: k + 1], path.kinds[:k])


__all__ = [
    "DOWN",
    "LINGER",
    "LatticePath",
    "chips_at_vertex",
    "in_chamber",
    "lingering_path",
    "rank_at_least",
    "truncate",
    "up",
]
