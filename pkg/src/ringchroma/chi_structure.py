"""Chromatic-number computations that never build a coloring.

The chromatic number of a ring equals the best value over its hyperholes:
max(clique number, ceil(size / floor(k/2))) where the maximizing hyperhole
is found by a shortest-path search over a layered digraph of cut heights.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import Graph, induced_subgraph
from .matching import max_matching_bipartite
from .recognition import RingPartition, recognize_ring, simplicial_elimination_sequence


@dataclass(frozen=True)
class HyperholeSelection:
    """Per-part cut heights: the selected hyperhole keeps, in part i, the
    bottom cuts[i] vertices.  Heights are 1-based."""

    cuts: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.cuts)

    def vertex_set(self, P: RingPartition) -> frozenset[int]:
        return frozenset(v for part, c in zip(P.parts, self.cuts) for v in part[:c])

    def to_json(self) -> dict:
        return {"cuts": list(self.cuts)}


def is_hyperhole(G: Graph, P: RingPartition) -> bool:
    """True iff every part is complete to both its cyclic neighbors."""
    adj = G.adjacency_matrix
    for i in range(P.k):
        a = list(P.parts[i])
        b = list(P.parts[(i + 1) % P.k])
        if not adj[np.ix_(a, b)].all():
            return False
    return True


def hyperhole_chi(G: Graph, P: RingPartition) -> int:
    """Chromatic number of a hyperhole: max(omega, ceil(n / floor(k/2)))."""
    if not is_hyperhole(G, P):
        raise InputError("partition is not a hyperhole partition")
    omega = max(
        len(P.parts[i]) + len(P.parts[(i + 1) % P.k]) for i in range(P.k)
    )
    alpha = P.k // 2
    return max(omega, -(-G.n // alpha))


def omega_ring(G: Graph, P: RingPartition) -> int:
    """Clique number of a ring.

    Every clique lies inside two consecutive parts; each such union is
    cobipartite, and its clique number is the union size minus a maximum
    matching of the bipartite complement between the two parts.
    """
    if len({v for part in P.parts for v in part}) != G.n:
        raise InputError("partition does not cover the graph")
    best = 0
    for i in range(P.k):
        a = list(P.parts[i])
        b = list(P.parts[(i + 1) % P.k])
        comp_edges = [
            (u, v) for u in a for v in b if not G.has_edge(u, v)
        ]
        # the bipartite complement lives on fresh labels
        relabel = {v: idx for idx, v in enumerate(a + b)}
        H = Graph(
            len(a) + len(b),
            [(relabel[u], relabel[v]) for u, v in comp_edges],
        )
        nu = len(
            max_matching_bipartite(
                H, [relabel[u] for u in a], [relabel[v] for v in b]
            )
        )
        best = max(best, len(a) + len(b) - nu)
    return best


def arc_weight(size_i: int, p: int, size_j: int, q: int) -> int:
    """Weight of the arc from height p in a part of size_i to height q in
    the next part: the number of vertices discarded above both cuts."""
    return (size_i - p) + (size_j - q)


def max_hyperhole(G: Graph, P: RingPartition) -> HyperholeSelection:
    """Maximum-size hyperhole inside a ring.

    Layer the parts X_1..X_k plus a copy of X_1; arcs follow ring edges
    between consecutive layers with weight arc_weight, so a path from
    height j of X_1 back to height j of the copy discards exactly half
    its weight in vertices.  One nonnegative shortest-path pass per
    starting height j yields the best normal hyperhole through j; the
    overall best is returned.  Ties prefer the smaller predecessor vertex
    identifier and then the smaller j.
    """
    parts = [list(p) for p in P.parts]
    k = P.k
    sizes = [len(p) for p in parts]
    best_cuts: tuple[int, ...] | None = None
    best_size = -1
    INF = float("inf")
    for j in range(1, sizes[0] + 1):
        # dist[layer][height-1]; layer k is the copy of part 0
        dist = [[INF] * sizes[t % k] for t in range(k + 1)]
        pred: list[list[int | None]] = [[None] * sizes[t % k] for t in range(k + 1)]
        dist[0][j - 1] = 0.0
        for t in range(k):
            cur = parts[t % k]
            nxt = parts[(t + 1) % k]
            for p in range(1, sizes[t % k] + 1):
                d = dist[t][p - 1]
                if d == INF:
                    continue
                u = cur[p - 1]
                for q in range(1, sizes[(t + 1) % k] + 1):
                    if not G.has_edge(u, nxt[q - 1]):
                        continue
                    w = d + arc_weight(sizes[t % k], p, sizes[(t + 1) % k], q)
                    old = dist[t + 1][q - 1]
                    if w < old or (
                        w == old and u < parts[t % k][pred[t + 1][q - 1] - 1]
                    ):
                        dist[t + 1][q - 1] = w
                        pred[t + 1][q - 1] = p
        total = dist[k][j - 1]
        if total == INF:
            raise InputError("partition admits no closing hole; not a ring order")
        cuts = [0] * k
        h = j
        for t in range(k, 0, -1):
            if t < k:
                cuts[t] = h
            h = pred[t][h - 1]
        cuts[0] = j
        size = sum(cuts)
        # discarded vertices are counted twice along the path
        assert size == G.n - int(total) // 2 and int(total) % 2 == 0
        if size > best_size:
            best_size = size
            best_cuts = tuple(cuts)
    assert best_cuts is not None
    return HyperholeSelection(best_cuts)


def chi_from_selection(G: Graph, P: RingPartition, sel: HyperholeSelection) -> int:
    """Chromatic number of a ring from its maximum hyperhole."""
    return max(omega_ring(G, P), -(-sel.size // (P.k // 2)))


def chi_ring_class(G: Graph) -> int | None:
    """Chromatic number of a graph that peels down to a ring.

    Strips a maximal simplicial sequence; if it exhausts the graph, the
    answer is the largest closed residual neighborhood along the order.
    Otherwise the residual must be a ring (else None) and contributes
    max(omega, ceil(max-hyperhole-size / floor(k/2))).
    """
    if G.n == 0:
        return 0
    seq = simplicial_elimination_sequence(G)
    removed: set[int] = set()
    contributions = []
    for v in seq.order:
        live_closed = 1 + sum(1 for w in G.neighbors(v) if w not in removed)
        contributions.append(live_closed)
        removed.add(v)
    if not seq.residual:
        return max(contributions)
    sub, mapping = induced_subgraph(G, seq.residual)
    P = recognize_ring(sub)
    if P is None:
        return None
    r = chi_from_selection(sub, P, max_hyperhole(sub, P))
    return max(contributions + [r])
