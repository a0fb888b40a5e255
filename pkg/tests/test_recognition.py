import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringchroma import (
    Graph,
    InputError,
    RingPartition,
    enumerate_holes,
    gen_random_ring,
    induced_subgraph,
    is_chordal,
    recognize_ring,
    simplicial_elimination_sequence,
    verify_ring_partition,
)
from ringchroma.graph import closed_neighborhood

from conftest import complete_graph, cycle_graph, petersen_graph


def random_tree(n, seed):
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph(n, edges)


class TestSimplicialSequence:
    @pytest.mark.parametrize("seed", range(5))
    def test_trees_fully_eliminate(self, seed):
        tree = random_tree(9, seed)
        seq = simplicial_elimination_sequence(tree)
        assert len(seq.order) == tree.n and not seq.residual

    def test_hole_has_no_simplicial_vertex(self, c5):
        seq = simplicial_elimination_sequence(c5)
        assert seq.order == () and seq.residual == frozenset(range(5))

    def test_pendant_then_hole(self, c5):
        G = Graph(6, list(c5.edges) + [(0, 5)])
        seq = simplicial_elimination_sequence(G)
        assert seq.order == (5,)
        assert seq.residual == frozenset(range(5))

    def test_prefix_property(self):
        # every prefix removal leaves the next vertex simplicial
        G, _ = gen_random_ring(5, 3, seed=11)
        rng = random.Random(0)
        for _ in range(3):
            G = Graph(
                G.n + 1,
                list(G.edges) + [(u, G.n) for u in _greedy_clique(G, rng)],
            )
        seq = simplicial_elimination_sequence(G)
        removed = set()
        for v in seq.order:
            live = [u for u in G.neighbors(v) if u not in removed]
            for i, a in enumerate(live):
                for b in live[i + 1 :]:
                    assert G.has_edge(a, b)
            removed.add(v)


def _greedy_clique(G, rng):
    v = rng.randrange(G.n)
    clique = [v]
    rest = [u for u in G.vertices if u != v]
    rng.shuffle(rest)
    for u in rest:
        if all(G.has_edge(u, w) for w in clique):
            clique.append(u)
    return clique


class TestChordal:
    def test_complete(self):
        assert is_chordal(complete_graph(6))

    def test_four_hole(self):
        assert not is_chordal(cycle_graph(4))

    @pytest.mark.parametrize("seed", range(8))
    def test_ring_minus_part_is_chordal(self, seed):
        G, P = gen_random_ring(4 + seed % 4, 3, seed=seed)
        for i in range(P.k):
            keep = [v for v in G.vertices if v not in set(P.parts[i])]
            sub, _ = induced_subgraph(G, keep)
            assert is_chordal(sub)


class TestRecognizeRing:
    def test_c5(self, c5):
        P = recognize_ring(c5)
        assert P is not None and P.k == 5
        assert all(len(part) == 1 for part in P.parts)

    def test_k4(self, k4):
        assert recognize_ring(k4) is None

    def test_petersen(self):
        assert recognize_ring(petersen_graph()) is None

    def test_small_graphs(self):
        assert recognize_ring(Graph(1)) is None
        assert recognize_ring(cycle_graph(3)) is None

    def test_c4(self):
        P = recognize_ring(cycle_graph(4))
        assert P is not None and P.k == 4

    @pytest.mark.parametrize("seed", range(30))
    def test_generator_round_trip(self, seed):
        k = 4 + seed % 5
        G, P = gen_random_ring(k, 3, seed=seed)
        Q = recognize_ring(G)
        assert Q is not None and Q.k == P.k
        # partitions agree up to rotation/reflection and equal-neighborhood ties
        assert _same_partition_modulo_ties(G, P, Q)

    @pytest.mark.parametrize("seed", range(12))
    def test_relabeling_invariance(self, seed):
        G, _ = gen_random_ring(5 + seed % 3, 3, seed=seed)
        rng = random.Random(seed)
        perm = list(G.vertices)
        rng.shuffle(perm)
        H = Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges])
        P, Q = recognize_ring(G), recognize_ring(H)
        assert P is not None and Q is not None and P.k == Q.k

    @pytest.mark.parametrize("seed", range(12))
    def test_all_holes_have_ring_length(self, seed):
        G, P = gen_random_ring(4 + seed % 4, 2, seed=seed)
        if G.n > 20:
            pytest.skip("over the hole-enumeration cap")
        for hole in enumerate_holes(G):
            assert len(hole) == P.k

    @pytest.mark.parametrize("seed", range(10))
    def test_rings_have_no_simplicial_vertices(self, seed):
        G, _ = gen_random_ring(4 + seed % 5, 3, seed=seed)
        assert recognize_ring(G) is not None
        assert simplicial_elimination_sequence(G).order == ()

    @pytest.mark.parametrize("seed", range(10))
    def test_recognized_ordering_is_nested(self, seed):
        G, _ = gen_random_ring(4 + seed % 5, 4, seed=100 + seed)
        P = recognize_ring(G)
        for i, part in enumerate(P.parts):
            hoods = [closed_neighborhood(G, v) for v in part]
            for low, high in zip(hoods, hoods[1:]):
                assert high <= low
            around = set(P.parts[(i - 1) % P.k]) | set(part) | set(
                P.parts[(i + 1) % P.k]
            )
            assert hoods[0] == around


def _same_partition_modulo_ties(G, P, Q):
    """Compare partitions as part-sets up to rotation and reflection; inside
    a part, vertices with identical closed neighborhoods may swap."""
    def signature(part):
        return tuple(sorted(frozenset(closed_neighborhood(G, v)) for v in part))

    base = [signature(p) for p in P.parts]
    other = [signature(p) for p in Q.parts]
    k = len(base)
    if len(other) != k:
        return False
    for flip in (other, other[::-1]):
        for shift in range(k):
            if base == flip[shift:] + flip[:shift]:
                return True
    return False


class TestVerifyRingPartition:
    def test_c5_cyclic_ok(self, c5):
        P = RingPartition(5, ((0,), (1,), (2,), (3,), (4,)))
        assert verify_ring_partition(c5, P)

    def test_c5_shuffled_fails(self, c5):
        P = RingPartition(5, ((0,), (2,), (4,), (1,), (3,)))
        assert not verify_ring_partition(c5, P)

    def test_c6_singletons_ok(self):
        G = cycle_graph(6)
        P = RingPartition(6, tuple((i,) for i in range(6)))
        assert verify_ring_partition(G, P)

    def test_merged_parts_rejected_by_type(self):
        with pytest.raises(InputError):
            RingPartition(3, ((0, 1), (2, 3), (4, 5)))

    def test_non_partition_rejected(self, c5):
        P = RingPartition(4, ((0,), (1,), (2,), (3,)))
        with pytest.raises(InputError):
            verify_ring_partition(c5, P)

    @pytest.mark.parametrize("seed", range(20))
    def test_generated_rings_verify(self, seed):
        G, P = gen_random_ring(4 + seed % 6, 4, seed=seed)
        assert verify_ring_partition(G, P)

    def test_self_consistency_with_recognition(self):
        for seed in range(15):
            G, _ = gen_random_ring(4 + seed % 5, 3, seed=seed)
            Q = recognize_ring(G)
            assert Q is not None and verify_ring_partition(G, Q)


class TestPartitionSerialization:
    def test_json_round_trip(self):
        _, P = gen_random_ring(6, 3, seed=2)
        assert RingPartition.from_json(P.to_json()) == P

    def test_json_shape(self):
        _, P = gen_random_ring(5, 2, seed=4)
        data = P.to_json()
        assert set(data) == {"k", "parts"}
        assert data["k"] == 5 and len(data["parts"]) == 5


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_recognition_never_crashes_on_random_rings(seed):
    rng = random.Random(seed)
    G, P = gen_random_ring(rng.randint(4, 9), rng.randint(1, 4), seed=seed)
    Q = recognize_ring(G)
    assert Q is not None and Q.k == P.k
