import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chainloop import Vertex, canonical_divisor, new_chain, uniform_chain
from chainloop.dhar import discretize, fin_equivalent, fin_is_effective
from chainloop.picard import (
    ZERO,
    ClassData,
    Free,
    Generic,
    MultM,
    ReducedRep,
    SymClass,
    class_of,
    class_representative,
    is_effective_class,
    is_zero,
    realize,
    reduce_v0,
    sym_class_of_K,
    sym_is_effective,
    sym_reduce_v0,
    sym_reductions,
    sym_residual,
)
from chainloop.picard.symbolic import add, neg, scale, sub, symbolic_bound
from chainloop.errors import AmbiguousClass, BoundExceeded
from chainloop.pl_function import divisor_of
from chainloop.sampling import random_divisor, random_generic_chain, random_pl_function
from chainloop.search import enumerate_rank1_classes

G2 = new_chain(2, [(7, 1), (7, 1)])
G4 = new_chain(4, [(9, 1)] * 4)


class TestClassOf:
    def test_base_point(self):
        assert class_of(G2, G2.divisor([(Vertex(0), 1)])) == ClassData(1, (0, 0))

    def test_interior_vertex(self):
        assert class_of(G2, G2.divisor([(Vertex(1), 1)])) == ClassData(1, (1, 0))

    def test_v1_has_no_other_lattice_representative(self):
        disc = discretize(G2)
        v1 = disc.chips(G2.divisor([(Vertex(1), 1)]))
        matches = [
            (a, b)
            for a in disc.lattice_positions(1)
            for b in disc.lattice_positions(2)
            if fin_equivalent(disc.graph, disc.chips(class_representative(G2, ClassData(1, (a, b)))), v1)
        ]
        assert matches == [(1, 0)]

    def test_antipodal_pair_on_one_loop(self):
        G = new_chain(1, [(5, 3)])
        D = G.divisor([(G.point(1, 3), 1), (G.point(1, 5), 1)])
        assert class_of(G, D) == ClassData(2, (0,))
        disc = discretize(G)
        assert fin_equivalent(disc.graph, disc.chips(D), disc.chips(G.divisor([(Vertex(0), 2)])))

    def test_firing_invariance(self):
        rng = random.Random(11)
        for _ in range(100):
            G = random_generic_chain(rng, rng.randint(1, 5))
            D = random_divisor(rng, G)
            assert class_of(G, D) == class_of(G, D + divisor_of(G, random_pl_function(rng, G)))

    def test_make_reduces_angles(self):
        assert ClassData.make(G2, 1, [9, -1]) == ClassData(1, (1, 7))
        with pytest.raises(ValueError):
            ClassData.make(G2, 1, [0])


class TestReduce:
    def test_vertex_is_reduced(self):
        assert reduce_v0(G2, ClassData(1, (Fraction(1), Fraction(0)))) == ReducedRep(0, (1, 0))

    def test_base_chips(self):
        assert reduce_v0(G2, ClassData(2, (Fraction(0), Fraction(0)))) == ReducedRep(2, (0, 0))

    def test_canonical_class(self):
        c = class_of(G4, canonical_divisor(G4))
        assert c.theta == (6, 4, 2, 0)
        R = reduce_v0(G4, c)
        assert R == ReducedRep(3, (4, 3, 2, 0))
        disc = discretize(G4)
        assert fin_equivalent(disc.graph, disc.chips(realize(G4, R)), disc.chips(canonical_divisor(G4)))

    def test_negative_degree(self):
        assert not is_effective_class(G2, ClassData(-1, (Fraction(0), Fraction(0))))
        R = ReducedRep(-2, (Fraction(0), Fraction(0)))
        assert realize(G2, R)[Vertex(0)] == -2

    def test_single_generic_chip_effective(self):
        c = ClassData(1, (Fraction(5, 2), Fraction(0)))
        assert is_effective_class(G2, c)
        disc = discretize(G2, 2)
        assert fin_is_effective(disc.graph, disc.chips(class_representative(G2, c)), 0)

    def test_round_trip(self):
        rng = random.Random(3)
        for _ in range(500):
            G = random_generic_chain(rng, rng.randint(1, 6))
            theta = [Fraction(rng.randint(0, 1000), rng.randint(1, 9)) for _ in range(G.g)]
            c = ClassData.make(G, rng.randint(-8, 8), theta)
            R = reduce_v0(G, c)
            assert R.degree == c.d
            assert class_of(G, realize(G, R)) == c
            assert class_of(G, class_representative(G, c)) == c

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 3), st.integers(-1, 4), st.randoms(use_true_random=False))
    def test_effectivity_matches_oracle(self, g, d, rng):
        G = uniform_chain(g)
        disc = discretize(G)
        theta = [rng.choice(disc.lattice_positions(i)) for i in range(1, g + 1)]
        c = ClassData(d, tuple(theta))
        assert is_effective_class(G, c) == fin_is_effective(disc.graph, disc.chips(class_representative(G, c)), 0)


class TestSymbolicArithmetic:
    def test_bound(self):
        assert symbolic_bound(1) == 1 and symbolic_bound(4) == 6

    def test_zero_tests(self):
        assert is_zero(ZERO, 3) is True
        assert is_zero(MultM(4), 3) is False
        assert is_zero(MultM(-4), 3) is False
        assert is_zero(MultM(5), 3) is None
        assert is_zero(Generic("y"), 3) is False
        assert is_zero(Free("y"), 3) is None

    def test_generic_propagation(self):
        y = Generic("y")
        assert isinstance(add(y, MultM(3)), Generic)
        assert add(y, ZERO) == y
        assert neg(neg(y)) == y
        assert isinstance(add(y, Generic("z")), Free)
        assert isinstance(scale(2, y), Free)
        assert scale(0, y) == ZERO
        assert sub(MultM(2), MultM(5)) == MultM(-3)

    def test_half_lattice_point_doubles_onto_lattice(self):
        # why doubling cannot stay Generic: y = m/2 + L/2 is off the lattice, 2y = m is not
        G = uniform_chain(3)
        y = (G.m(1) / 2 + G.L(1) / 2) % G.L(1)
        assert all((y - c * G.m(1)) % G.L(1) != 0 for c in range(-4, 5))
        assert (2 * y - G.m(1)) % G.L(1) == 0

    def test_class_algebra(self):
        a = SymClass(2, (MultM(1), Generic("y")))
        b = SymClass(1, (MultM(2), ZERO))
        assert (a + b).d == 3 and (a + b).angles[0] == MultM(3)
        assert (a - b).angles[1] == Generic("y")
        assert (2 * b) == SymClass(2, (MultM(4), ZERO))


class TestSymbolicReduction:
    def test_canonical_classes(self):
        assert sym_class_of_K(4) == SymClass(6, (MultM(6), MultM(4), MultM(2), ZERO))
        assert sym_class_of_K(1) == SymClass(0, (ZERO,))
        assert sym_class_of_K(2) == SymClass(2, (MultM(2), ZERO))
        for g in range(1, 7):
            G = uniform_chain(g)
            theta = class_of(G, canonical_divisor(G)).theta
            assert theta == tuple(Fraction(a.c) % G.L(i) for i, a in enumerate(sym_class_of_K(g).angles, 1))

    def test_negative_residual(self):
        D = SymClass(2, (ZERO, ZERO))
        F = sym_residual(sym_class_of_K(2), D)
        assert F == SymClass(-2, (MultM(2), ZERO))
        assert sym_is_effective(F) is False

    def test_genus_four_residual(self):
        D = SymClass(3, (MultM(2), ZERO, ZERO, ZERO))
        F = sym_residual(sym_class_of_K(4), D)
        assert F == SymClass(0, (MultM(2), MultM(4), MultM(2), ZERO))
        R = sym_reduce_v0(F)
        concrete = reduce_v0(G4, ClassData(0, (Fraction(2), Fraction(4), Fraction(2), Fraction(0))))
        assert R.d0 == concrete.d0 == -2
        assert tuple(a.c for a in R.x) == tuple(concrete.x)
        disc = discretize(G4)
        assert not fin_is_effective(disc.graph, disc.chips(class_representative(G4, ClassData(0, (2, 4, 2, 0)))), 0)

    def test_generic_angle_forces_chip(self):
        F = SymClass(2, (ZERO, Generic("y"), ZERO))
        R = sym_reduce_v0(F)
        assert R.x[1] != ZERO
        # the chip on loop 2 shifts loop 1 off zero
        assert R.x[0] == MultM(-1) and R.d0 == 0

    def test_strict_errors(self):
        with pytest.raises(BoundExceeded):
            sym_reduce_v0(SymClass(1, (MultM(5), ZERO)))
        with pytest.raises(AmbiguousClass):
            sym_reduce_v0(SymClass(1, (Free("y"), ZERO)))

    def test_branching(self):
        reps = list(sym_reductions(SymClass(1, (Free("y"), ZERO))))
        assert sorted(r.d0 for r in reps) == [0, 1]
        assert all(len(r.assumptions) == 1 for r in reps)
        assert sym_is_effective(SymClass(1, (Free("y"), ZERO))) is True
        assert sym_is_effective(SymClass(0, (Free("y"), ZERO))) is None


def _instantiate(G, angle, i, salt):
    """A concrete angle on loop ``i`` realizing ``angle`` on ``G``."""
    if isinstance(angle, MultM):
        return angle.c * G.m(i) % G.L(i)
    # odd denominators larger than 2g keep the point off the bounded lattice
    return G.L(i) * Fraction(2 * salt + 1, 4 * G.g + 7 + 2 * salt)


@pytest.mark.parametrize("g", range(1, 6))
def test_symbolic_matches_concrete(g):
    """Reduction of every stratum's class and of its residual agrees with the
    concrete engine on ``ell = 2g+1, m = 1``."""
    G = uniform_chain(g)
    K = sym_class_of_K(g)
    for d in range(1, g + 1):
        for s in enumerate_rank1_classes(g, d):
            chips = s.chip_angles()
            xs = [_instantiate(G, a, i, i) if a != ZERO else Fraction(0) for i, a in enumerate(chips, 1)]
            D = G.divisor([(Vertex(0), s.d0)] + [(G.point(i, t), 1) for i, t in enumerate(xs, 1) if t])
            c = class_of(G, D)
            R = reduce_v0(G, c)
            assert R.d0 == s.d0 and tuple(R.x) == tuple(xs)
            F = sym_residual(K, s.sym_class())
            outcomes = {r.d0 for r in sym_reductions(F)} if F.d >= 0 else {F.d}
            concrete = reduce_v0(G, class_of(G, canonical_divisor(G) - 2 * D)).d0
            assert concrete in outcomes or (F.d < 0 and concrete < 0)


@pytest.mark.parametrize("g", range(1, 5))
def test_all_symbolic_classes_land_in_a_stratum(g):
    from itertools import product

    from chainloop.lattice_path import lingering_path
    from chainloop.search import Stratum

    for d in range(1, g + 1):
        strata = set(enumerate_rank1_classes(g, d))
        hit = set()
        for angles in product([MultM(c) for c in range(2 * g + 1)] + [Generic("z")], repeat=g):
            try:
                R = sym_reduce_v0(SymClass(d, angles))
                path = lingering_path(None, R) if R.d0 >= 0 else None
            except (BoundExceeded, AmbiguousClass):
                continue
            if path is not None and path.in_chamber():
                s = Stratum(g, d, R.d0, path.kinds)
                assert s in strata
                hit.add(s)
        assert hit == strata
