import random

import pytest

from ringchroma import (
    CapacityError,
    Graph,
    brute_alpha,
    brute_chi,
    brute_max_hyperhole,
    brute_omega,
    complement,
    enumerate_holes,
    gen_random_ring,
    max_matching_general,
    recognize_ring,
)

from conftest import complete_graph, cycle_graph, random_graph


class TestBruteChi:
    def test_c5(self, c5):
        assert brute_chi(c5) == 3

    def test_k6(self):
        assert brute_chi(complete_graph(6)) == 6

    def test_seven_antihole_double_checked(self):
        A = complement(cycle_graph(7))
        nu = len(max_matching_general(cycle_graph(7)))
        assert brute_chi(A) == A.n - nu == 4

    def test_cap(self):
        with pytest.raises(CapacityError):
            brute_chi(Graph(25), cap=20)

    def test_cap_override(self):
        assert brute_chi(Graph(25), cap=30) == 1


class TestBruteOmegaAlpha:
    def test_c5(self, c5):
        assert brute_omega(c5) == 2 and brute_alpha(c5) == 2

    def test_k33(self):
        G = Graph(6, [(u, 3 + v) for u in range(3) for v in range(3)])
        assert brute_omega(G) == 2 and brute_alpha(G) == 3

    def test_h47(self):
        from ringchroma import gen_extremal_hyperhole

        G, _ = gen_extremal_hyperhole(7, 4)
        assert brute_omega(G) == 4

    @pytest.mark.parametrize("seed", range(20))
    def test_consistency(self, seed):
        rng = random.Random(seed)
        G = random_graph(rng.randint(1, 12), rng.random(), seed)
        omega, alpha, chi = brute_omega(G), brute_alpha(G), brute_chi(G)
        assert omega <= chi <= G.n
        assert -(-G.n // alpha) <= chi

    @pytest.mark.parametrize("seed", range(20))
    def test_omega_vs_enumeration(self, seed):
        import itertools

        rng = random.Random(seed)
        G = random_graph(rng.randint(1, 9), rng.random(), 100 + seed)
        best = 0
        for r in range(1, G.n + 1):
            for combo in itertools.combinations(G.vertices, r):
                if all(G.has_edge(a, b) for a, b in itertools.combinations(combo, 2)):
                    best = max(best, r)
        assert brute_omega(G) == best


class TestEnumerateHoles:
    def test_c6_single_hole(self):
        holes = enumerate_holes(cycle_graph(6))
        assert len(holes) == 1 and len(holes[0]) == 6

    def test_k4_none(self, k4):
        assert enumerate_holes(k4) == []

    def test_chordal_none(self):
        G = Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
        assert enumerate_holes(G) == []

    def test_holes_are_chordless(self):
        for seed in range(10):
            G = random_graph(9, 0.4, seed)
            for hole in enumerate_holes(G):
                m = len(hole)
                assert m >= 4
                for i in range(m):
                    for j in range(i + 1, m):
                        expected = (j - i) % m in (1, m - 1)
                        assert G.has_edge(hole[i], hole[j]) == expected

    def test_five_ring_holes(self):
        G, P = gen_random_ring(5, 2, seed=21)
        part_of = P.part_of()
        holes = enumerate_holes(G)
        assert holes
        for hole in holes:
            assert len(hole) == 5
            assert sorted(part_of[v] for v in hole) == [0, 1, 2, 3, 4]

    def test_cap(self):
        with pytest.raises(CapacityError):
            enumerate_holes(Graph(30))


class TestBruteMaxHyperhole:
    def test_hyperhole_input(self):
        from ringchroma import gen_hyperhole

        G, P = gen_hyperhole(5, [2, 1, 2, 1, 1])
        assert brute_max_hyperhole(G, P) == G.n

    def test_plain_cycles(self):
        for k in (4, 5, 6, 7):
            G = cycle_graph(k)
            P = recognize_ring(G)
            assert brute_max_hyperhole(G, P) == k

    def test_cap(self):
        G, P = gen_random_ring(6, 3, seed=1)
        with pytest.raises(CapacityError):
            brute_max_hyperhole(G, P, cap=1)


class TestEnvCap(object):
    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("RINGCHROMA_CAP", "3")
        with pytest.raises(CapacityError):
            brute_chi(complete_graph(4))
        monkeypatch.delenv("RINGCHROMA_CAP")
        assert brute_chi(complete_graph(4)) == 4
