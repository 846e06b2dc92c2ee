"""Exact Picard classes on a concrete chain of loops."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..chain_graph import ChainGraph, Divisor, GraphPoint, LoopPoint, Vertex, as_fraction


@dataclass(frozen=True)
class ClassData:
    """Degree plus one angle per loop, ``theta[i-1]`` in ``[0, L_i)``."""

    d: int
    theta: tuple[Fraction, ...]

    @classmethod
    def make(cls, G: ChainGraph, d: int, theta) -> ClassData:
        theta = tuple(as_fraction(t) % G.L(i) for i, t in enumerate(theta, start=1))
        if len(theta) != G.g:
            raise ValueError(f"expected {G.g} angles, got {len(theta)}")
        return cls(int(d), theta)


@dataclass(frozen=True)
class ReducedRep:
    """``d0`` chips at ``v_0`` plus at most one chip per loop.

    ``x[i-1] == 0`` means no chip on the left-punctured loop ``i``.
    """

    d0: int
    x: tuple[Fraction, ...]

    @property
    def chips(self) -> int:
        return sum(1 for t in self.x if t != 0)

    @property
    def degree(self) -> int:
        return self.d0 + self.chips


def projection(G: ChainGraph, p: GraphPoint, i: int) -> Fraction:
    """Retract ``p`` onto loop ``i``: left part to 0, right part to ``m_i``."""
    if isinstance(p, LoopPoint):
        if p.i == i:
            return p.t
        return Fraction(0) if p.i < i else G.m(i)
    return Fraction(0) if p.i <= i - 1 else G.m(i)


def class_of(G: ChainGraph, D: Divisor) -> ClassData:
    theta = []
    for i in range(1, G.g + 1):
        s = sum((c * projection(G, p, i) for p, c in D.items()), Fraction(0))
        theta.append(s % G.L(i))
    return ClassData(D.degree, tuple(theta))


def reduce_v0(G: ChainGraph, c: ClassData) -> ReducedRep:
    """v_0-reduced data of a class, peeling loops from right to left.

    A chip strictly right of loop ``i`` retracts to ``m_i``, so once the
    chips on loops ``i+1..g`` are known the chip on loop ``i`` is forced.
    A negative ``d0`` means the class has no effective representative.
    """
    x = [Fraction(0)] * G.g
    right = 0
    for i in range(G.g, 0, -1):
        xi = (c.theta[i - 1] - right * G.m(i)) % G.L(i)
        x[i - 1] = xi
        if xi != 0:
            right += 1
    return ReducedRep(c.d - right, tuple(x))


def is_effective_class(G: ChainGraph, c: ClassData) -> bool:
    return reduce_v0(G, c).d0 >= 0


def realize(G: ChainGraph, R: ReducedRep) -> Divisor:
    coeffs: dict[GraphPoint, int] = {}
    if R.d0:
        coeffs[Vertex(0)] = R.d0
    for i, t in enumerate(R.x, start=1):
        if t != 0:
            p = G.point(i, t)
            coeffs[p] = coeffs.get(p, 0) + 1
    return Divisor(coeffs)


def class_representative(G: ChainGraph, c: ClassData) -> Divisor:
    """A divisor in class ``c`` built without the reduction recurrence.

    Uses ``d*v_0 + sum_i (P_i - v_{i-1})`` where ``P_i`` sits at angle
    ``theta_i`` on loop ``i``; each summand only moves loop ``i``'s angle.
    """
    coeffs: dict[GraphPoint, int] = {}

    def bump(p, k):
        coeffs[p] = coeffs.get(p, 0) + k

    bump(Vertex(0), c.d)
    for i, t in enumerate(c.theta, start=1):
        bump(G.point(i, t), 1)
        bump(Vertex(i - 1), -1)
    return Divisor(coeffs)
