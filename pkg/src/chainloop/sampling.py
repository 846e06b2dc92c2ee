"""Random instances for property tests and the acceptance suite.

Every generator takes a :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .chain_graph import ChainGraph, Divisor, Vertex, canonical_divisor, is_generic, new_chain, on_loop_closure, to_loop_coordinate
from .picard import ClassData
from .pl_function import PLFunction, make_pl_function


def random_rational(rng: random.Random, lo, hi, max_den: int = 12) -> Fraction:
    """A rational strictly inside ``(lo, hi)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    while True:
        den = rng.randint(1, max_den)
        t = lo + (hi - lo) * Fraction(rng.randint(1, 4 * den - 1), 4 * den)
        if lo < t < hi:
            return t


def random_generic_chain(rng: random.Random, g: int) -> ChainGraph:
    while True:
        loops = []
        for _ in range(g):
            m = Fraction(rng.randint(1, 5), rng.randint(1, 3))
            # a ratio with large numerator + denominator keeps the chain generic
            ratio = Fraction(rng.randint(2 * g, 6 * g + 6), rng.randint(1, 4))
            loops.append((m * ratio, m))
        G = new_chain(g, loops)
        if is_generic(G):
            return G


def random_point(rng: random.Random, G: ChainGraph):
    if rng.random() < 0.2:
        return Vertex(rng.randint(0, G.g))
    i = rng.randint(1, G.g)
    return G.point(i, random_rational(rng, 0, G.L(i)))


def random_divisor(rng: random.Random, G: ChainGraph, n_points: int = 5, coeff: int = 3) -> Divisor:
    return G.divisor([(random_point(rng, G), rng.randint(-coeff, coeff)) for _ in range(n_points)])


def random_effective_divisor(rng: random.Random, G: ChainGraph, degree: int) -> Divisor:
    return G.divisor([(random_point(rng, G), 1) for _ in range(degree)])


def _random_arc(rng, lo, hi, start, target, max_slope, n_inner):
    """Breakpoints on ``[lo, hi]`` from ``(lo, start)`` to ``(hi, target)`` with
    integer slopes, or free end when ``target`` is None."""
    cuts = sorted({random_rational(rng, lo, hi) for _ in range(n_inner)})
    pts = [(lo, start)]
    value = start
    if target is None:
        for a, b in zip([lo] + cuts, cuts + [hi]):
            value += rng.randint(-max_slope, max_slope) * (b - a)
            pts.append((b, value))
        return pts
    # free segments first, then two segments bracketing the needed mean slope
    edges = [lo] + cuts
    for a, b in zip(edges[:-1], edges[1:]):
        value += rng.randint(-max_slope, max_slope) * (b - a)
        pts.append((b, value))
    a = edges[-1]
    span = hi - a
    mean = (target - value) / span
    s_lo = _floor(mean) - 1 - rng.randint(0, 1)
    s_hi = _floor(mean) + 1 + rng.randint(0, 1)
    # s_lo * u + s_hi * (span - u) == target - value
    u = (s_hi * span - (target - value)) / (s_hi - s_lo)
    pts.append((a + u, value + s_lo * u))
    pts.append((hi, target))
    return pts


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def random_pl_function(rng: random.Random, G: ChainGraph, max_slope: int = 3, max_inner: int = 3) -> PLFunction:
    arcs = []
    base = Fraction(rng.randint(-3, 3))
    for i in range(1, G.g + 1):
        m, L = G.m(i), G.L(i)
        m_arc = _random_arc(rng, Fraction(0), m, base, None, max_slope, rng.randint(0, max_inner))
        top = m_arc[-1][1]
        ell_arc = _random_arc(rng, m, L, top, base, max_slope, rng.randint(0, max_inner))
        arcs.append((m_arc, ell_arc))
        base = top
    return make_pl_function(G, arcs)


def random_effective_canonical(rng: random.Random, G: ChainGraph, moves: int = 12) -> Divisor:
    """Random effective divisor equivalent to ``K`` via chip moves on loops.

    Shifting chips on one closed loop by amounts summing to zero keeps
    the class: other loops see those chips at a fixed retraction point.
    """
    D = canonical_divisor(G)
    for _ in range(moves):
        i = rng.randint(1, G.g)
        chips = [p for p, c in D.items() for _ in range(c) if on_loop_closure(p, i)]
        if len(chips) < 2:
            continue
        a, b = rng.sample(range(len(chips)), 2)
        s = random_rational(rng, 0, G.L(i))
        pa, pb = chips[a], chips[b]
        ta, tb = to_loop_coordinate(G, pa, i), to_loop_coordinate(G, pb, i)
        D = D - G.divisor([(pa, 1), (pb, 1)]) + G.divisor([(G.point(i, ta + s), 1), (G.point(i, tb - s), 1)])
    return D


def random_lattice_class(rng: random.Random, G: ChainGraph, disc, d_range) -> ClassData:
    theta = tuple(rng.choice(disc.lattice_positions(i)) for i in range(1, G.g + 1))
    return ClassData(rng.randint(*d_range), theta)
