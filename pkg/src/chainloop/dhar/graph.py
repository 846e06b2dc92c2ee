"""Finite multigraphs and the subdivision bridge from a chain of loops."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from ..chain_graph import ChainGraph, GraphPoint, Vertex
from ..errors import DiscretizationTooLarge, NonIntegralScale

MAX_NODES = 10_000


@dataclass(frozen=True, eq=False)
class FiniteGraph:
    """Connected loopless multigraph on nodes ``0..n-1``.

    The CSR arrays list each edge once from each endpoint, so parallel
    edges repeat.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    indptr: np.ndarray = field(init=False, repr=False)
    indices: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
        src = np.array([u for u, v in self.edges] + [v for u, v in self.edges], dtype=np.int64)
        dst = np.array([v for u, v in self.edges] + [u for u, v in self.edges], dtype=np.int64)
        order = np.argsort(src, kind="stable")
        counts = np.bincount(src, minlength=self.n)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", np.ascontiguousarray(dst[order]))
        if self.n and (self.bfs_levels(0) < 0).any():
            raise ValueError("graph is not connected")

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    @property
    def betti(self) -> int:
        return len(self.edges) - self.n + 1

    def bfs_levels(self, q: int) -> np.ndarray:
        level = np.full(self.n, -1, dtype=np.int64)
        level[q] = 0
        todo = deque([q])
        while todo:
            u = todo.popleft()
            for w in self.indices[self.indptr[u]:self.indptr[u + 1]]:
                if level[w] < 0:
                    level[w] = level[u] + 1
                    todo.append(w)
        return level

    def laplacian(self) -> np.ndarray:
        lap = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            lap[u, v] -= 1
            lap[v, u] -= 1
            lap[u, u] += 1
            lap[v, v] += 1
        return lap

    def canonical(self) -> np.ndarray:
        return self.degrees - 2

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> FiniteGraph:
        return cls(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))


def cycle_graph(n: int) -> FiniteGraph:
    return FiniteGraph(n, tuple((k, (k + 1) % n) for k in range(n)))


@dataclass(frozen=True, eq=False)
class Discretization:
    """A chain of loops subdivided into unit edges.

    One unit is ``1 / (scale * lcm of length denominators)``.  Nodes
    ``0..g`` are the vertices ``v_0..v_g``.
    """

    chain: ChainGraph
    graph: FiniteGraph
    unit: Fraction
    _nodes: dict = field(repr=False)

    def node(self, p: GraphPoint) -> int:
        if isinstance(p, Vertex):
            return p.i
        k = p.t / self.unit
        if k.denominator != 1:
            raise NonIntegralScale(f"{p!r} is not on the subdivision lattice (unit {self.unit})")
        return self._nodes[(p.i, int(k))]

    def lattice_positions(self, i: int) -> list[Fraction]:
        """All lattice coordinates ``t`` in ``[0, L_i)`` on loop ``i``."""
        steps = self.chain.L(i) / self.unit
        return [k * self.unit for k in range(int(steps))]

    def chips(self, D) -> np.ndarray:
        out = np.zeros(self.graph.n, dtype=np.int64)
        for p, c in D.items():
            out[self.node(p)] += c
        return out


def discretize(G: ChainGraph, scale: int = 1, max_nodes: int = MAX_NODES) -> Discretization:
    if not isinstance(scale, int) or scale < 1:
        raise NonIntegralScale(f"scale must be a positive integer, got {scale!r}")
    den = lcm(*(x.denominator for pair in G.loops for x in pair))
    unit = Fraction(1, den * scale)
    sizes = [(int(ell / unit), int(m / unit)) for ell, m in G.loops]
    n_nodes = G.g + 1 + sum(a + b - 2 for a, b in sizes)
    if n_nodes > max_nodes:
        raise DiscretizationTooLarge(f"{n_nodes} nodes exceeds limit {max_nodes}")

    nodes: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    nxt = G.g + 1
    for i, (a, b) in enumerate(sizes, start=1):
        L = a + b
        for k in range(L):
            if k == 0:
                nodes[(i, k)] = i - 1
            elif k == b:
                nodes[(i, k)] = i
            else:
                nodes[(i, k)] = nxt
                nxt += 1
        for k in range(L):
            edges.append((nodes[(i, k)], nodes[(i, (k + 1) % L)]))
    return Discretization(G, FiniteGraph(nxt, tuple(edges)), unit, nodes)
