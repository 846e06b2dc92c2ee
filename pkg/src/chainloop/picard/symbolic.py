"""Symbolic Picard classes valid simultaneously for every generic chain.

An angle on loop ``i`` is one of

* ``MultM(c)``: exactly ``c * m_i`` mod ``L_i``;
* ``Generic(tag)``: a chip position off the bounded ``m_i``-lattice;
* ``Free(tag)``: an unconstrained angle.  Doubling a generic position
  gives ``Free``: a point such as ``m_i/2 + L_i/2`` is off the lattice
  while its double is not.

Write ``L_i/m_i = N/q`` in lowest terms.  Then ``c*m_i == 0 (mod L_i)``
exactly when ``N | c``, and genericity gives ``N > 2g-2``, so the test
is decided without knowing the lengths whenever ``|c|`` is within the
bound.  Tests outside it, and tests on ``Free`` angles, are undetermined.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import Optional, Union

from ..errors import AmbiguousClass, BoundExceeded


@dataclass(frozen=True)
class MultM:
    c: int

    def __repr__(self) -> str:
        return f"{self.c}m"


@dataclass(frozen=True)
class Generic:
    tag: str

    def __repr__(self) -> str:
        return f"gen<{self.tag}>"


@dataclass(frozen=True)
class Free:
    tag: str

    def __repr__(self) -> str:
        return f"free<{self.tag}>"


SymAngle = Union[MultM, Generic, Free]
ZERO = MultM(0)


def symbolic_bound(g: int) -> int:
    # N >= 2 holds for every chain, so |c| = 1 is decided even at g = 1
    return max(2 * g - 2, 1)


def add(a: SymAngle, b: SymAngle) -> SymAngle:
    if isinstance(a, MultM) and isinstance(b, MultM):
        return MultM(a.c + b.c)
    if isinstance(a, Free) or isinstance(b, Free):
        return Free(_tag(a) + "+" + _tag(b))
    if isinstance(a, Generic) and isinstance(b, Generic):
        return Free(_tag(a) + "+" + _tag(b))
    # generic shifted by a lattice vector is still off the lattice
    gen, lat = (a, b) if isinstance(a, Generic) else (b, a)
    return gen if lat.c == 0 else Generic(f"{gen.tag}{lat.c:+d}m")


def neg(a: SymAngle) -> SymAngle:
    if isinstance(a, MultM):
        return MultM(-a.c)
    if isinstance(a, Generic):
        return Generic(a.tag[1:] if a.tag.startswith("-") else "-" + a.tag)
    return a


def scale(k: int, a: SymAngle) -> SymAngle:
    if k == 0:
        return ZERO
    if isinstance(a, MultM):
        return MultM(k * a.c)
    if k == 1:
        return a
    if k == -1:
        return neg(a)
    return Free(f"{k}*{_tag(a)}")


def sub(a: SymAngle, b: SymAngle) -> SymAngle:
    return add(a, neg(b))


def _tag(a: SymAngle) -> str:
    return repr(a.c) + "m" if isinstance(a, MultM) else a.tag


def is_zero(a: SymAngle, g: int) -> Optional[bool]:
    """Decide ``a == 0`` on every generic chain of genus ``g``; ``None`` if it varies."""
    if isinstance(a, MultM):
        if a.c == 0:
            return True
        return False if abs(a.c) <= symbolic_bound(g) else None
    if isinstance(a, Generic):
        return False
    return None


@dataclass(frozen=True)
class SymClass:
    d: int
    angles: tuple[SymAngle, ...]

    @property
    def g(self) -> int:
        return len(self.angles)

    def __add__(self, other: SymClass) -> SymClass:
        return SymClass(self.d + other.d, tuple(add(a, b) for a, b in zip(self.angles, other.angles)))

    def __sub__(self, other: SymClass) -> SymClass:
        return SymClass(self.d - other.d, tuple(sub(a, b) for a, b in zip(self.angles, other.angles)))

    def __rmul__(self, k: int) -> SymClass:
        return SymClass(k * self.d, tuple(scale(k, a) for a in self.angles))


@dataclass(frozen=True)
class Assumption:
    """An undetermined zero test resolved one way on one branch."""

    loop: int
    angle: SymAngle
    zero: bool

    def __repr__(self) -> str:
        return f"loop {self.loop}: {self.angle!r} {'==' if self.zero else '!='} 0"


@dataclass(frozen=True)
class SymReducedRep:
    """Symbolic v_0-reduced data; ``x[i-1] == MultM(0)`` means no chip on loop i."""

    d0: int
    x: tuple[SymAngle, ...]
    assumptions: tuple[Assumption, ...] = field(default=())

    @property
    def chips(self) -> int:
        return sum(1 for a in self.x if a != ZERO)


def sym_class_of_K(g: int) -> SymClass:
    # each interior vertex v_j, j >= i, retracts to m_i on loop i
    return SymClass(2 * g - 2, tuple(MultM(2 * (g - i)) for i in range(1, g + 1)))


def sym_residual(K: SymClass, D: SymClass) -> SymClass:
    """Class of ``K - 2D``."""
    return K - 2 * D


def sym_reductions(c: SymClass, strict: bool = False) -> Iterator[SymReducedRep]:
    """Every possible v_0-reduction of ``c`` as the generic lengths vary.

    Follows the concrete right-to-left peeling; an undetermined zero test
    forks into both outcomes, each recorded as an :class:`Assumption`.
    With ``strict=True`` no forking is allowed: over-bound multipliers
    raise :class:`BoundExceeded` and free angles :class:`AmbiguousClass`.
    """
    g = c.g

    def walk(i: int, right: int, xs: list, assumed: tuple) -> Iterator[SymReducedRep]:
        if i == 0:
            yield SymReducedRep(c.d - right, tuple(reversed(xs)), assumed)
            return
        xi = sub(c.angles[i - 1], MultM(right))
        z = is_zero(xi, g)
        if z is None:
            if strict:
                if isinstance(xi, MultM):
                    raise BoundExceeded(i, xi.c, symbolic_bound(g))
                raise AmbiguousClass(f"loop {i}: angle {xi!r} may or may not vanish")
            yield from walk(i - 1, right, xs + [ZERO], assumed + (Assumption(i, xi, True),))
            yield from walk(i - 1, right + 1, xs + [xi], assumed + (Assumption(i, xi, False),))
        elif z:
            yield from walk(i - 1, right, xs + [ZERO], assumed)
        else:
            yield from walk(i - 1, right + 1, xs + [xi], assumed)

    yield from walk(g, 0, [], ())


def sym_reduce_v0(c: SymClass) -> SymReducedRep:
    """The reduction of ``c``, which must not depend on the lengths."""
    return next(sym_reductions(c, strict=True))


def sym_is_effective(c: SymClass) -> Optional[bool]:
    """True/False if effectivity is the same on every generic chain, else None."""
    if c.d < 0:
        return False
    outcomes = {r.d0 >= 0 for r in sym_reductions(c)}
    return outcomes.pop() if len(outcomes) == 1 else None
