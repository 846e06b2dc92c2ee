import random
from fractions import Fraction

import pytest

from chainloop import ClassData, ReducedRep, Vertex, chips_at_vertex, lingering_path, new_chain, rank_at_least, subchain, uniform_chain
from chainloop.dhar import dhar_reduce, discretize, fin_rank, fin_rank_at_least
from chainloop.errors import IndexOutOfRange, NotGeneric
from chainloop.lattice_path import DOWN, LINGER, LatticePath, _scalar_path, _vector_path, in_chamber, truncate, up
from chainloop.picard import class_of, class_representative, realize, reduce_v0
from chainloop.sampling import random_generic_chain
from chainloop.search import lattice_classes, oracle_crosscheck

G2 = new_chain(2, [(7, 1), (7, 1)])
G4 = new_chain(4, [(9, 1)] * 4)


def fr(*xs):
    return tuple(Fraction(x) for x in xs)


class TestPathExamples:
    def test_two_down_steps(self):
        P = lingering_path(G2, ReducedRep(2, fr(0, 0)))
        assert P.scalar() == (2, 1, 0) and P.kinds == (DOWN, DOWN)

    def test_up_then_down(self):
        R = ReducedRep(1, fr(2, 0))
        P = lingering_path(G2, R)
        assert P.scalar() == (1, 2, 1) and P.kinds == (up(0), DOWN)
        disc = discretize(G2)
        assert fin_rank(disc.graph, disc.chips(realize(G2, R))) == 1

    def test_leaves_chamber(self):
        P = lingering_path(G4, ReducedRep(1, fr(2, 0, 0, 0)))
        assert P.scalar() == (1, 2, 1, 0, -1)
        assert not P.in_chamber()

    def test_linger(self):
        P = lingering_path(G2, ReducedRep(1, fr("1/2", 0)))
        assert P.kinds == (LINGER, DOWN) and P.scalar() == (1, 1, 0)

    def test_no_up_step_from_zero(self):
        # x = (0+1)m would be the up position, but p_0 = 0 is outside the chamber
        P = lingering_path(G2, ReducedRep(0, fr(1, 0)))
        assert P.kinds[0] == LINGER

    def test_non_generic_refused(self):
        with pytest.raises(NotGeneric):
            lingering_path(new_chain(3, [(2, 1)] * 3), ReducedRep(1, fr(0, 0, 0)))

    def test_negative_d0_refused(self):
        with pytest.raises(ValueError):
            lingering_path(G2, ReducedRep(-1, fr(0, 0)))

    def test_vector_start(self):
        P = lingering_path(G2, ReducedRep(3, fr(0, 0)), r=2)
        assert P.p[0] == (3, 2)
        assert P.p[-1] == (1, 0)


class TestRank:
    def test_base_point_pair(self):
        c = ClassData(2, fr(0, 0))
        assert not rank_at_least(G2, c)
        disc = discretize(G2)
        assert fin_rank(disc.graph, disc.chips(class_representative(G2, c))) == 0

    def test_unique_degree_two_pencil(self):
        assert rank_at_least(G2, ClassData(2, fr(2, 0)))
        disc = discretize(G2)
        pencils = [c for c in lattice_classes(G2, disc, [2]) if rank_at_least(G2, c)]
        assert pencils == [ClassData(2, fr(2, 0))]

    def test_negative_degree(self):
        assert not rank_at_least(G2, ClassData(-1, fr(0, 0)))

    def test_rank_two_matches_oracle(self):
        for G in (uniform_chain(1), G2):
            disc = discretize(G)
            for c in lattice_classes(G, disc, range(0, 5)):
                chips = disc.chips(class_representative(G, c))
                assert rank_at_least(G, c, 2) == fin_rank_at_least(disc.graph, chips, 2), c

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_rank_one_matches_oracle_degree_five(self, g):
        rep = oracle_crosscheck(g, 5, min_degree=5)
        assert rep.status == "agree" and rep.classes > 0


class TestChipsAtVertex:
    def test_examples(self):
        P = lingering_path(G2, ReducedRep(1, fr(2, 0)))
        assert chips_at_vertex(P, 1) == 2
        assert chips_at_vertex(P, 0) == 1

    def test_against_oracle(self):
        P = lingering_path(G2, ReducedRep(2, fr(0, 0)))
        disc = discretize(G2)
        q = disc.node(Vertex(2))
        red = dhar_reduce(disc.graph, disc.chips(G2.divisor([(Vertex(0), 2)])), q)
        assert chips_at_vertex(P, 2) == red[q] == 0

    def test_errors(self):
        P = lingering_path(G2, ReducedRep(1, fr(2, 0)))
        with pytest.raises(IndexOutOfRange):
            chips_at_vertex(P, 3)
        with pytest.raises(IndexOutOfRange):
            chips_at_vertex(P, -1)
        with pytest.raises(ValueError):
            chips_at_vertex(lingering_path(G2, ReducedRep(3, fr(0, 0)), r=2), 1)


def _random_reduced(rng, G):
    xs = []
    for i in range(1, G.g + 1):
        roll = rng.random()
        if roll < 0.3:
            xs.append(Fraction(0))
        elif roll < 0.6:
            xs.append((rng.randint(1, 2 * G.g) * G.m(i)) % G.L(i))
        else:
            xs.append(G.L(i) * Fraction(rng.randint(1, 96), 97))
    return ReducedRep(rng.randint(0, G.g + 1), tuple(xs))


def test_structural_properties():
    rng = random.Random(8)
    for _ in range(300):
        G = random_generic_chain(rng, rng.randint(1, 6))
        R = _random_reduced(rng, G)
        for r in (1, 2):
            P = lingering_path(G, R, r)
            assert P.p[0] == tuple(R.d0 - j for j in range(r))
            for a, b, kind in zip(P.p, P.p[1:], P.kinds):
                diff = tuple(y - x for x, y in zip(a, b))
                if kind == DOWN:
                    assert diff == (-1,) * r
                elif kind == LINGER:
                    assert diff == (0,) * r
                else:
                    j = int(kind.split(":")[1])
                    assert diff == tuple(int(k == j) for k in range(r))
                    assert in_chamber(a) and in_chamber(b)
        assert _vector_path(G, R, 1) == _scalar_path(G, R)


def test_truncation_is_prefix():
    rng = random.Random(9)
    for _ in range(200):
        G = random_generic_chain(rng, rng.randint(2, 6))
        R = _random_reduced(rng, G)
        P = lingering_path(G, R)
        for k in range(1, G.g + 1):
            H, _ = subchain(G, 1, k)
            assert lingering_path(H, ReducedRep(R.d0, R.x[:k])) == truncate(P, k)


def test_path_of_class_matches_reduced_data():
    c = class_of(G2, G2.divisor([(Vertex(0), 1), (G2.point(1, 2), 1)]))
    assert lingering_path(G2, reduce_v0(G2, c)).scalar() == (1, 2, 1)
    assert isinstance(lingering_path(G2, reduce_v0(G2, c)), LatticePath)
