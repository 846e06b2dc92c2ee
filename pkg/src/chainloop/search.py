"""Exhaustive verification over symbolic strata of rank-one classes."""

from __future__ import annotations

import logging
import os
import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

from .chain_graph import ChainGraph, Divisor, Vertex, canonical_divisor, is_generic, new_chain, uniform_chain
from .dhar import discretize, fin_is_effective, fin_rank_at_least
from .errors import NotGeneric, OddGenus
from .lattice_path import DOWN, LINGER, lingering_path, rank_at_least, up
from .picard import (
    ZERO,
    ClassData,
    Generic,
    MultM,
    SymClass,
    SymReducedRep,
    class_of,
    class_representative,
    is_effective_class,
    reduce_v0,
    sym_class_of_K,
    sym_reductions,
    sym_residual,
)
from .picard.symbolic import add

log = logging.getLogger(__name__)

WORKERS_ENV = "CHAINLOOP_WORKERS"
UP = up(0)


@dataclass(frozen=True, order=True)
class Stratum:
    """A family of rank-one classes sharing one lattice path.

    Lingering chips range over an open set; every other chip is pinned to
    a multiple of ``m_i``.
    """

    g: int
    d: int
    d0: int
    kinds: tuple[str, ...]

    @property
    def path(self) -> tuple[int, ...]:
        p = [self.d0]
        for k in self.kinds:
            p.append(p[-1] + (1 if k == UP else -1 if k == DOWN else 0))
        return tuple(p)

    def chip_angles(self) -> list:
        """Position of the chip on each loop, ``ZERO`` for none."""
        out = []
        for i, (k, p) in enumerate(zip(self.kinds, self.path), start=1):
            if k == DOWN:
                out.append(ZERO)
            elif k == UP:
                out.append(MultM(p + 1))
            else:
                out.append(Generic(f"y{i}"))
        return out

    def sym_class(self) -> SymClass:
        xs = self.chip_angles()
        theta = []
        for i in range(self.g):
            right = sum(1 for a in xs[i + 1:] if a != ZERO)
            theta.append(add(xs[i], MultM(right)))
        return SymClass(self.d, tuple(theta))

    def reduced(self) -> SymReducedRep:
        return SymReducedRep(self.d0, tuple(self.chip_angles()))

    def to_dict(self) -> dict:
        return {"g": self.g, "d": self.d, "d0": self.d0, "kinds": list(self.kinds), "path": list(self.path)}


def enumerate_rank1_classes(g: int, d: int) -> Iterator[Stratum]:
    """All strata of degree ``d`` whose lattice path stays positive.

    Order is lexicographic in ``(d0, kinds)``; prefixes that reach zero
    are cut immediately.
    """
    order = sorted([DOWN, UP, LINGER])

    def extend(p: int, kinds: list, chips_left: int) -> Iterator[tuple]:
        loops_left = g - len(kinds)
        if loops_left == 0:
            if chips_left == 0:
                yield tuple(kinds)
            return
        if chips_left < 0 or chips_left > loops_left:
            return
        for k in order:
            if k == DOWN:
                if p - 1 > 0:
                    yield from extend(p - 1, kinds + [k], chips_left)
            elif k == UP:
                yield from extend(p + 1, kinds + [k], chips_left - 1)
            else:
                yield from extend(p, kinds + [k], chips_left - 1)

    for d0 in range(1, d + 1):
        for kinds in extend(d0, [], d - d0):
            yield Stratum(g, d, d0, kinds)


def catalan_lambda(g: int, r: int, d: int) -> Fraction:
    """``g! * prod_{k=0}^{r} k! / (g-d+r+k)!``."""
    out = Fraction(factorial(g))
    for k in range(r + 1):
        out *= Fraction(factorial(k), factorial(g - d + r + k))
    return out


def count_rho0(g: int) -> int:
    """Number of rank-one strata in degree ``g/2 + 1``, where rho = 0."""
    if g % 2 or g < 2:
        raise OddGenus(f"rho = 0 with r = 1 needs an even genus >= 2, got {g}")
    return sum(1 for _ in enumerate_rank1_classes(g, g // 2 + 1))


def check_stratum(s: Stratum) -> dict:
    """Decide whether ``K - 2D`` can be effective for some ``D`` in ``s`` on
    some generic chain.  Returns a summary record."""
    D = s.sym_class()
    # the stratum's own lattice path must reproduce itself
    path = lingering_path(None, s.reduced(), 1)
    assert path.scalar() == s.path and all(v > 0 for v in s.path), s
    F = sym_residual(sym_class_of_K(s.g), D)
    rec = {"stratum": s, "branches": 0, "undetermined": False, "counterexamples": []}
    if F.d < 0:
        return rec
    for red in sym_reductions(F):
        rec["branches"] += 1
        if any(isinstance(a.angle, MultM) for a in red.assumptions):
            rec["undetermined"] = True
        if red.d0 >= 0:
            rec["counterexamples"].append(
                {
                    "stratum": s.to_dict(),
                    "residual": repr(F),
                    "reduction": repr(red),
                    "recipe": {"ell": 2 * s.g + 1, "m": 1},
                }
            )
    return rec


def concrete_counterexamples(G: ChainGraph, s: Stratum) -> list[Divisor]:
    """Divisors ``D`` in stratum ``s`` on the concrete chain ``G`` with
    ``K - 2D`` effective, searching every lingering placement that matters.

    On a linger loop only whether ``K - 2D`` keeps a chip there matters, so
    each lingering chip is either placed to cancel that chip or kept
    generic.  Each candidate is rechecked with the concrete engine.
    """
    if G.g != s.g:
        raise ValueError("stratum genus differs from graph genus")
    if not is_generic(G):
        raise NotGeneric("concrete fallback needs a generic chain")
    g = G.g
    path = s.path
    right_D = [sum(1 for k in s.kinds[i:] if k != DOWN) for i in range(1, g + 1)]
    K = canonical_divisor(G)
    found: list[Divisor] = []

    def special(i: int) -> set:
        L = G.L(i)
        return {Fraction(0), ((path[i - 1] + 1) * G.m(i)) % L}

    def generic_point(i: int, avoid) -> Fraction:
        L = G.L(i)
        for den in range(7, 200, 2):
            for num in range(1, den):
                y = L * Fraction(num, den)
                if y not in avoid:
                    return y
        raise RuntimeError("no generic point found")

    def walk(i: int, right_F: int, xs: dict[int, Fraction]) -> None:
        if i == 0:
            D = G.divisor([(Vertex(0), s.d0)] + [(G.point(j, t), 1) for j, t in xs.items() if t != 0])
            R = reduce_v0(G, class_of(G, D))
            assert lingering_path(G, R, 1).scalar() == path, (s, D)
            if is_effective_class(G, class_of(G, K - 2 * D)):
                found.append(D)
            return
        m, L = G.m(i), G.L(i)
        kind = s.kinds[i - 1]
        theta_K = (2 * (g - i) * m) % L

        def x_F(y):
            return (theta_K - 2 * (y + right_D[i - 1] * m) - right_F * m) % L

        if kind == LINGER:
            target = (theta_K - 2 * right_D[i - 1] * m - right_F * m) % L
            for y in (target / 2, target / 2 + L / 2):
                y %= L
                if y not in special(i):
                    assert x_F(y) == 0
                    walk(i - 1, right_F, {**xs, i: y})
                    break
            avoid = special(i) | {(target / 2) % L, (target / 2 + L / 2) % L}
            y = generic_point(i, avoid)
            walk(i - 1, right_F + 1, {**xs, i: y})
        else:
            y = Fraction(0) if kind == DOWN else ((path[i - 1] + 1) * m) % L
            walk(i - 1, right_F + (x_F(y) != 0), {**xs, i: y})

    walk(g, 0, {})
    return found


@dataclass
class Report:
    genus: int
    degrees: list[int]
    strata: int = 0
    branches: int = 0
    undetermined_strata: int = 0
    counterexamples: list = field(default_factory=list)
    fallback: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    workers: int = 1

    @property
    def status(self) -> str:
        concrete_bad = any(f["concrete_counterexamples"] for f in self.fallback)
        return "counterexample" if self.counterexamples or concrete_bad else "verified"

    def to_dict(self) -> dict:
        out = {"status": self.status}
        out.update(asdict(self))
        return out

    def canonical(self) -> dict:
        out = self.to_dict()
        out.pop("elapsed_ms")
        out.pop("workers")
        return out


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _check_chunk(chunk: list[Stratum]) -> list[dict]:
    return [check_stratum(s) for s in chunk]


def gp_verify(g: int, degree: int | None = None, workers: int | None = None,
              concrete_all: bool = False, chunk_size: int = 64) -> Report:
    """Search every rank-one stratum for ``K - 2D`` effective.

    Degrees ``1..g-1`` are scanned unless ``degree`` is given.  Strata
    whose symbolic check needed an over-bound zero test are also run on
    the concrete chain ``ell = 2g+1, m = 1``.
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    t0 = time.perf_counter()
    workers = workers or default_workers()
    degrees = [degree] if degree is not None else list(range(1, g))
    strata = [s for d in degrees for s in enumerate_rank1_classes(g, d)]
    chunks = [strata[k:k + chunk_size] for k in range(0, len(strata), chunk_size)]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_check_chunk, chunks) for r in part]
    else:
        results = [r for c in chunks for r in _check_chunk(c)]

    rep = Report(genus=g, degrees=degrees, strata=len(strata), workers=workers)
    G = uniform_chain(g)
    for rec in sorted(results, key=lambda r: r["stratum"]):
        rep.branches += rec["branches"]
        rep.counterexamples.extend(rec["counterexamples"])
        if rec["undetermined"] or concrete_all:
            rep.undetermined_strata += rec["undetermined"]
            bad = concrete_counterexamples(G, rec["stratum"])
            rep.fallback.append(
                {"stratum": rec["stratum"].to_dict(), "concrete_counterexamples": [repr(D) for D in bad]}
            )
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    log.info("genus %d: %d strata, status %s", g, rep.strata, rep.status)
    return rep


@dataclass
class CrosscheckReport:
    genus: int
    lengths: tuple[str, str]
    scale: int
    nodes: int
    classes: int = 0
    effective_disagreements: list = field(default_factory=list)
    rank_disagreements: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def status(self) -> str:
        return "agree" if not (self.effective_disagreements or self.rank_disagreements) else "disagree"

    def to_dict(self) -> dict:
        out = {"status": self.status}
        out.update(asdict(self))
        return out


def lattice_classes(G: ChainGraph, disc, degrees) -> Iterator[ClassData]:
    grids = [disc.lattice_positions(i) for i in range(1, G.g + 1)]
    for d in degrees:
        for theta in product(*grids):
            yield ClassData(d, tuple(theta))


def oracle_crosscheck(g: int, max_degree: int, lengths=None, scale: int = 1,
                      min_degree: int = -1) -> CrosscheckReport:
    """Compare effectivity and rank >= 1 between the metric engine and the
    Dhar oracle on every lattice class of degree ``min_degree..max_degree``."""
    t0 = time.perf_counter()
    if lengths is None:
        G = uniform_chain(g)
    else:
        G = new_chain(g, [lengths] * g)
    if not is_generic(G):
        raise NotGeneric(f"oracle-check needs generic lengths, got {G.loops[0]}")
    disc = discretize(G, scale)
    F = disc.graph
    ell, m = G.loops[0]
    rep = CrosscheckReport(g, (str(ell), str(m)), scale, F.n)
    for c in lattice_classes(G, disc, range(min_degree, max_degree + 1)):
        rep.classes += 1
        chips = disc.chips(class_representative(G, c))
        eff_metric = is_effective_class(G, c)
        eff_oracle = fin_is_effective(F, chips, 0)
        if eff_metric != eff_oracle:
            rep.effective_disagreements.append({"d": c.d, "theta": [str(t) for t in c.theta]})
        rk_metric = rank_at_least(G, c, 1)
        rk_oracle = fin_rank_at_least(F, chips, 1, 0)
        if rk_metric != rk_oracle:
            rep.rank_disagreements.append({"d": c.d, "theta": [str(t) for t in c.theta]})
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000
    return rep
