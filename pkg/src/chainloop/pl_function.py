"""Piecewise-linear functions with integer slopes on the chain of loops.

A function is stored arc by arc.  On loop ``i`` the ``m`` arc carries
breakpoints with loop coordinate in ``[0, m_i]`` and the ``ell`` arc in
``[m_i, L_i]``; both lists include their endpoints, and coordinate
``L_i`` on the ``ell`` arc is ``v_{i-1}`` again.

Orders follow the incoming-slope convention, so a local maximum has
positive order.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .chain_graph import ChainGraph, Divisor, GraphPoint, Vertex, as_fraction, on_loop_closure, to_loop_coordinate
from .errors import DiscontinuousInput, IndexOutOfRange, NotEquivalent

Breakpoints = tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class PLFunction:
    """``arcs[i-1] == (m_arc, ell_arc)``, each a tuple of ``(position, value)``."""

    arcs: tuple[tuple[Breakpoints, Breakpoints], ...]

    @property
    def g(self) -> int:
        return len(self.arcs)

    def vertex_value(self, j: int) -> Fraction:
        if j == 0:
            return self.arcs[0][0][0][1]
        return self.arcs[j - 1][0][-1][1]

    def __call__(self, G: ChainGraph, p: GraphPoint) -> Fraction:
        if isinstance(p, Vertex):
            return self.vertex_value(p.i)
        m_arc, ell_arc = self.arcs[p.i - 1]
        pts = m_arc if p.t <= G.m(p.i) else ell_arc
        for (a, fa), (b, fb) in zip(pts, pts[1:]):
            if a <= p.t <= b:
                return fa + (fb - fa) * (p.t - a) / (b - a)
        raise ValueError(f"{p!r} outside the arcs of loop {p.i}")

    def __add__(self, other: PLFunction) -> PLFunction:
        # values on a common refinement
        arcs = []
        for (am, ae), (bm, be) in zip(self.arcs, other.arcs):
            arcs.append((_sum_arc(am, bm), _sum_arc(ae, be)))
        return PLFunction(tuple(arcs))

    def __neg__(self) -> PLFunction:
        return PLFunction(
            tuple(
                (tuple((t, -v) for t, v in m_arc), tuple((t, -v) for t, v in ell_arc))
                for m_arc, ell_arc in self.arcs
            )
        )

    def to_records(self) -> list[dict]:
        out = []
        for i, (m_arc, ell_arc) in enumerate(self.arcs, start=1):
            for name, pts in (("m", m_arc), ("ell", ell_arc)):
                out.append({"loop": i, "arc": name, "points": [[_fmt(t), _fmt(v)] for t, v in pts]})
        return out

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> PLFunction:
        arcs: dict[int, dict[str, Breakpoints]] = {}
        for rec in records:
            pts = tuple((as_fraction(t), as_fraction(v)) for t, v in rec["points"])
            arcs.setdefault(int(rec["loop"]), {})[rec["arc"]] = pts
        g = max(arcs)
        return cls(tuple((arcs[i]["m"], arcs[i]["ell"]) for i in range(1, g + 1)))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _interp(pts: Breakpoints, t: Fraction) -> Fraction:
    for (a, fa), (b, fb) in zip(pts, pts[1:]):
        if a <= t <= b:
            return fa + (fb - fa) * (t - a) / (b - a)
    raise ValueError(t)


def _sum_arc(a: Breakpoints, b: Breakpoints) -> Breakpoints:
    ts = sorted({t for t, _ in a} | {t for t, _ in b})
    return _merge(tuple((t, _interp(a, t) + _interp(b, t)) for t in ts))


def _merge(pts: Breakpoints) -> Breakpoints:
    """Drop interior breakpoints where the slope does not change."""
    out = [pts[0]]
    for k in range(1, len(pts) - 1):
        (a, fa), (b, fb), (c, fc) = out[-1], pts[k], pts[k + 1]
        if (fb - fa) / (b - a) != (fc - fb) / (c - b):
            out.append(pts[k])
    out.append(pts[-1])
    return tuple(out)


def slopes(pts: Breakpoints) -> list[Fraction]:
    return [(fb - fa) / (b - a) for (a, fa), (b, fb) in zip(pts, pts[1:])]


def make_pl_function(G: ChainGraph, arcs) -> PLFunction:
    """Build and validate a PL function from raw per-loop breakpoint lists."""
    clean = []
    for m_arc, ell_arc in arcs:
        clean.append(
            (
                _merge(tuple((as_fraction(t), as_fraction(v)) for t, v in m_arc)),
                _merge(tuple((as_fraction(t), as_fraction(v)) for t, v in ell_arc)),
            )
        )
    psi = PLFunction(tuple(clean))
    validate(G, psi)
    return psi


def validate(G: ChainGraph, psi: PLFunction) -> None:
    """Raise :class:`DiscontinuousInput` unless ``psi`` is a valid PL function on ``G``."""
    if psi.g != G.g:
        raise DiscontinuousInput(f"function has {psi.g} loops, graph has {G.g}")
    for i, (m_arc, ell_arc) in enumerate(psi.arcs, start=1):
        m, L = G.m(i), G.L(i)
        for name, pts, lo, hi in (("m", m_arc, 0, m), ("ell", ell_arc, m, L)):
            if len(pts) < 2 or pts[0][0] != lo or pts[-1][0] != hi:
                raise DiscontinuousInput(f"loop {i} {name} arc must span [{lo}, {hi}]")
            if any(a >= b for (a, _), (b, _) in zip(pts, pts[1:])):
                raise DiscontinuousInput(f"loop {i} {name} arc breakpoints not increasing")
            if any(s.denominator != 1 for s in slopes(pts)):
                raise DiscontinuousInput(f"loop {i} {name} arc has a non-integer slope")
        if m_arc[0][1] != ell_arc[-1][1]:
            raise DiscontinuousInput(f"loop {i}: arcs disagree at v_{i - 1}")
        if m_arc[-1][1] != ell_arc[0][1]:
            raise DiscontinuousInput(f"loop {i}: arcs disagree at v_{i}")
        if i > 1 and psi.arcs[i - 2][0][-1][1] != m_arc[0][1]:
            raise DiscontinuousInput(f"loops {i - 1} and {i} disagree at v_{i - 1}")


def constant(G: ChainGraph, value=0) -> PLFunction:
    value = as_fraction(value)
    return PLFunction(
        tuple(
            (((Fraction(0), value), (G.m(i), value)), ((G.m(i), value), (G.L(i), value)))
            for i in range(1, G.g + 1)
        )
    )


def _loop_orders(G: ChainGraph, psi: PLFunction, i: int) -> dict[GraphPoint, int]:
    """Incoming-slope sums of ``psi`` restricted to the closed loop ``i``."""
    m_arc, ell_arc = psi.arcs[i - 1]
    sm, se = slopes(m_arc), slopes(ell_arc)
    out: dict[GraphPoint, int] = {}
    # v_{i-1}: leaving along the m arc, arriving at the end of the ell arc
    out[Vertex(i - 1)] = int(se[-1] - sm[0])
    out[Vertex(i)] = int(sm[-1] - se[0])
    for pts, s in ((m_arc, sm), (ell_arc, se)):
        for k in range(1, len(pts) - 1):
            out[G.point(i, pts[k][0])] = int(s[k - 1] - s[k])
    return out


def divisor_of(G: ChainGraph, psi: PLFunction) -> Divisor:
    validate(G, psi)
    acc: dict[GraphPoint, int] = {}
    for i in range(1, G.g + 1):
        for p, c in _loop_orders(G, psi, i).items():
            acc[p] = acc.get(p, 0) + c
    return Divisor(acc)


def vertex_order_on_loop(G: ChainGraph, psi: PLFunction, vertex: int, loop: int) -> int:
    """Order at ``v_vertex`` counting only the two arcs of ``loop``."""
    if loop < 1 or loop > G.g or vertex not in (loop - 1, loop):
        raise IndexOutOfRange(f"v_{vertex} is not on loop {loop}")
    return _loop_orders(G, psi, loop)[Vertex(vertex)]


def restriction_order(G: ChainGraph, psi: PLFunction, k: int) -> int:
    """``ord_{v_k}`` of the restriction of ``psi`` to loop ``k``."""
    if not 1 <= k <= G.g:
        raise IndexOutOfRange(f"k={k} outside 1..{G.g}")
    return vertex_order_on_loop(G, psi, k, k)


def _circle_function(positions, coeffs, L, base):
    """Breakpoints ``(t, value)`` on ``[0, L]`` of a function on a circle with
    prescribed orders, or None when the orders are not principal."""
    # slope on the first segment makes the function close up
    moment = sum((a * t for t, a in zip(positions, coeffs)), Fraction(0))
    s = -coeffs[0] - moment / L
    if s.denominator != 1:
        return None
    pts = [(positions[0], base)]
    value = base
    for k in range(len(positions)):
        if k > 0:
            s -= coeffs[k]
        nxt = positions[k + 1] if k + 1 < len(positions) else L
        value += s * (nxt - positions[k])
        pts.append((nxt, value))
    assert pts[-1][1] == base
    return pts


def certificate(G: ChainGraph, D: Divisor, D2: Divisor) -> PLFunction:
    """A PL function with ``div(psi) == D - D2`` and ``psi(v_0) == 0``.

    Loop by loop, the vertex chips are split so each loop carries a
    degree-zero divisor; a loop whose divisor is not principal on its
    circle proves inequivalence and raises :class:`NotEquivalent`.
    """
    A = D - D2
    if A.degree != 0:
        raise NotEquivalent(f"degrees differ ({D.degree} vs {D2.degree})")
    carry = A[Vertex(0)]  # part of A at v_{i-1} owed to loop i
    base = Fraction(0)
    arcs = []
    for i in range(1, G.g + 1):
        m, L = G.m(i), G.L(i)
        local: dict[Fraction, int] = {Fraction(0): carry, m: 0}
        for p, c in A.items():
            if on_loop_closure(p, i) and p != Vertex(i - 1) and p != Vertex(i):
                t = to_loop_coordinate(G, p, i)
                local[t] = local.get(t, 0) + c
        # loop i absorbs just enough of A(v_i) to have degree zero
        local[m] = -sum(local.values())
        carry = A[Vertex(i)] - local[m]
        if i == G.g and carry != 0:
            raise NotEquivalent("leftover degree at the last vertex")
        ts = sorted(local)
        pts = _circle_function(ts, [local[t] for t in ts], L, base)
        if pts is None:
            raise NotEquivalent(f"loop {i}: residual divisor is not principal on the circle")
        m_arc = tuple((t, v) for t, v in pts if t <= m)
        ell_arc = tuple((t, v) for t, v in pts if t >= m)
        arcs.append((_merge(m_arc), _merge(ell_arc)))
        base = m_arc[-1][1]
    return PLFunction(tuple(arcs))


def slope_balance_solutions(ell, m, order_range, slope_bound: int) -> list[tuple[int, int]]:
    """Integer ``(x, o)`` with ``x*ell + (x + o)*m == 0``, ``o`` in the
    inclusive range, ``|x| <= slope_bound``."""
    ell, m = as_fraction(ell), as_fraction(m)
    lo, hi = order_range
    return [
        (x, o)
        for o in range(lo, hi + 1)
        for x in range(-slope_bound, slope_bound + 1)
        if x * ell + (x + o) * m == 0
    ]
