"""The chain of loops, points on it, and divisors.

Loop ``i`` (1-based) joins ``v_{i-1}`` and ``v_i``.  A point on loop ``i``
is addressed by the counterclockwise coordinate ``t`` in ``[0, L_i)``
measured from ``v_{i-1}``; the vertex ``v_i`` sits at ``t = m_i``, so the
``m`` arc is ``[0, m_i]`` and the ``ell`` arc is ``[m_i, L_i]``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import EmptyRange, LengthCountMismatch, NonPositiveLength


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected: all lengths and coordinates must be exact.
    """
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float {value!r}; pass a Fraction or 'p/q'")
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Vertex:
    i: int

    def __repr__(self) -> str:
        return f"v{self.i}"


@dataclass(frozen=True, order=True)
class LoopPoint:
    i: int
    t: Fraction

    def __repr__(self) -> str:
        return f"({self.i}:{self.t})"


GraphPoint = Union[Vertex, LoopPoint]


@dataclass(frozen=True)
class ChainGraph:
    """Genus ``g`` chain of loops with exact rational arc lengths.

    ``loops[i-1] == (ell_i, m_i)``.  Use :func:`new_chain` to build a
    validated instance.
    """

    g: int
    loops: tuple[tuple[Fraction, Fraction], ...]

    def ell(self, i: int) -> Fraction:
        return self.loops[i - 1][0]

    def m(self, i: int) -> Fraction:
        return self.loops[i - 1][1]

    def L(self, i: int) -> Fraction:
        ell, m = self.loops[i - 1]
        return ell + m

    @property
    def vertices(self) -> list[Vertex]:
        return [Vertex(i) for i in range(self.g + 1)]

    def point(self, i: int, t) -> GraphPoint:
        """Canonical point at coordinate ``t`` (taken mod ``L_i``) on loop ``i``."""
        if not 1 <= i <= self.g:
            raise ValueError(f"loop index {i} outside 1..{self.g}")
        t = as_fraction(t) % self.L(i)
        if t == 0:
            return Vertex(i - 1)
        if t == self.m(i):
            return Vertex(i)
        return LoopPoint(i, t)

    def canonicalize(self, p: GraphPoint) -> GraphPoint:
        if isinstance(p, Vertex):
            if not 0 <= p.i <= self.g:
                raise ValueError(f"vertex index {p.i} outside 0..{self.g}")
            return p
        return self.point(p.i, p.t)

    def divisor(self, items: Mapping[GraphPoint, int] | Iterable[tuple[GraphPoint, int]]) -> Divisor:
        """Build a divisor, canonicalizing every point and summing duplicates."""
        pairs = items.items() if isinstance(items, Mapping) else items
        acc: dict[GraphPoint, int] = {}
        for p, c in pairs:
            q = self.canonicalize(p)
            acc[q] = acc.get(q, 0) + int(c)
        return Divisor(acc)


def new_chain(g: int, loops) -> ChainGraph:
    """Validate and build a chain of loops; genericity is not required."""
    if g < 1:
        raise NonPositiveLength(f"genus must be >= 1, got {g}")
    loops = list(loops)
    if len(loops) != g:
        raise LengthCountMismatch(f"expected {g} loops, got {len(loops)}")
    out = []
    for i, (ell, m) in enumerate(loops, start=1):
        ell, m = as_fraction(ell), as_fraction(m)
        if ell <= 0 or m <= 0:
            raise NonPositiveLength(f"loop {i}: lengths must be positive, got ({ell}, {m})")
        out.append((ell, m))
    return ChainGraph(g, tuple(out))


def uniform_chain(g: int, ell=None, m=1) -> ChainGraph:
    """All loops share ``(ell, m)``; ``ell`` defaults to ``2g+1``, which is generic."""
    if ell is None:
        ell = 2 * g + 1
    return new_chain(g, [(ell, m)] * g)


class Divisor(Mapping):
    """Immutable finite formal sum of points with nonzero integer coefficients.

    Points are assumed canonical; build through :meth:`ChainGraph.divisor`
    when in doubt.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[GraphPoint, int] | None = None):
        self._c = {p: int(c) for p, c in (coeffs or {}).items() if c != 0}
        self._hash = None

    def __getitem__(self, p: GraphPoint) -> int:
        return self._c.get(p, 0)

    def __iter__(self) -> Iterator[GraphPoint]:
        return iter(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __contains__(self, p) -> bool:
        return p in self._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, Divisor):
            return self._c == other._c
        return NotImplemented

    def __repr__(self) -> str:
        if not self._c:
            return "Divisor(0)"
        terms = " + ".join(f"{c}*{p!r}" for p, c in sorted(self._c.items(), key=_point_key))
        return f"Divisor({terms})"

    @property
    def degree(self) -> int:
        return sum(self._c.values())

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self._c.values())

    def __add__(self, other: Divisor) -> Divisor:
        acc = dict(self._c)
        for p, c in other.items():
            acc[p] = acc.get(p, 0) + c
        return Divisor(acc)

    def __neg__(self) -> Divisor:
        return Divisor({p: -c for p, c in self._c.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __mul__(self, k: int) -> Divisor:
        return Divisor({p: k * c for p, c in self._c.items()})

    __rmul__ = __mul__

    def restrict(self, keep: Callable[[GraphPoint], bool]) -> Divisor:
        return Divisor({p: c for p, c in self._c.items() if keep(p)})

    def sorted_items(self) -> list[tuple[GraphPoint, int]]:
        return sorted(self._c.items(), key=_point_key)


def _point_key(item):
    p = item[0] if isinstance(item, tuple) else item
    if isinstance(p, Vertex):
        return (p.i, 0, Fraction(0))
    return (p.i - 1, 1, p.t)


def is_generic(G: ChainGraph) -> bool:
    """No ``ell_i/m_i`` equals ``p/q`` with positive integers ``p + q <= 2g - 2``."""
    bound = 2 * G.g - 2
    for ell, m in G.loops:
        ratio = ell / m
        if ratio.numerator + ratio.denominator <= bound:
            return False
    return True


def canonical_divisor(G: ChainGraph) -> Divisor:
    # v_0 and v_g have valence 2, interior vertices valence 4
    return Divisor({Vertex(i): 2 for i in range(1, G.g)})


def on_loop_closure(p: GraphPoint, i: int) -> bool:
    """True if ``p`` lies on the closed loop ``i`` (vertices included)."""
    if isinstance(p, Vertex):
        return p.i in (i - 1, i)
    return p.i == i


def to_loop_coordinate(G: ChainGraph, p: GraphPoint, i: int) -> Fraction:
    """Coordinate of a point of the closed loop ``i``."""
    if isinstance(p, LoopPoint):
        if p.i != i:
            raise ValueError(f"{p!r} is not on loop {i}")
        return p.t
    if p.i == i - 1:
        return Fraction(0)
    if p.i == i:
        return G.m(i)
    raise ValueError(f"{p!r} is not on loop {i}")


def right_of(p: GraphPoint, k: int) -> bool:
    """Membership in ``{v_k}`` plus loops ``k+1..g``: the part kept after
    deleting the right-punctured loops ``1..k``."""
    if isinstance(p, Vertex):
        return p.i >= k
    return p.i > k


def remove_loops(G: ChainGraph, remove: Iterable[int]) -> tuple[ChainGraph, Callable[[GraphPoint], GraphPoint]]:
    """Delete the given loops, gluing the two vertices of each deleted loop.

    Returns the remaining chain and a relabeling function for points lying
    on kept loops (vertices between deleted loops collapse to one vertex).
    """
    remove = sorted(set(remove))
    if not remove:
        raise EmptyRange("nothing to remove")
    if remove[0] < 1 or remove[-1] > G.g:
        raise EmptyRange(f"loops {remove} outside 1..{G.g}")
    kept = [i for i in range(1, G.g + 1) if i not in remove]
    if not kept:
        raise EmptyRange("removing every loop leaves no chain")
    H = ChainGraph(len(kept), tuple(G.loops[i - 1] for i in kept))
    new_index = {old: new for new, old in enumerate(kept, start=1)}
    removed = set(remove)

    def relabel(p: GraphPoint) -> GraphPoint:
        if isinstance(p, LoopPoint):
            if p.i in removed:
                raise ValueError(f"{p!r} lies on a removed loop")
            return LoopPoint(new_index[p.i], p.t)
        # v_a is glued to the right end of the last kept loop at or before a
        return Vertex(sum(1 for i in kept if i <= p.i))

    return H, relabel


def subchain(G: ChainGraph, first: int, last: int) -> tuple[ChainGraph, Callable[[GraphPoint], GraphPoint]]:
    """Keep the contiguous block of loops ``first..last``."""
    if not 1 <= first <= last <= G.g:
        raise EmptyRange(f"invalid loop range {first}..{last} for genus {G.g}")
    drop = [i for i in range(1, G.g + 1) if not first <= i <= last]
    if not drop:
        return G, lambda p: p
    return remove_loops(G, drop)


def map_divisor(D: Divisor, relabel: Callable[[GraphPoint], GraphPoint]) -> Divisor:
    acc: dict[GraphPoint, int] = {}
    for p, c in D.items():
        q = relabel(p)
        acc[q] = acc.get(q, 0) + c
    return Divisor(acc)
