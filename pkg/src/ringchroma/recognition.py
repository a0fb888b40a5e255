"""Simplicial elimination, chordality, and ring recognition.

A ring of length k is a graph partitioned into k >= 4 nonempty cliques
X_1..X_k arranged cyclically, each orderable so that closed neighborhoods
are nested and the bottom vertex of X_i sees exactly X_{i-1} u X_i u
X_{i+1}.  Recognition rebuilds that partition from the domination
relation alone and then verifies it against the four defining conditions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import Graph

# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class SimplicialSequence:
    """Maximal sequence of successively simplicial vertices.

    order[i] is simplicial in the graph with order[:i] removed; the
    residual set (possibly empty) has no simplicial vertex.
    """

    order: tuple[int, ...]
    residual: frozenset[int]


@dataclass(frozen=True)
class RingPartition:
    """Ordered ring partition: parts[i] lists X_{i+1} bottom-to-top.

    Within a part the order realizes the nested closed neighborhoods,
    so parts[i][0] is the dominating bottom vertex and parts[i][-1] the
    dominated top vertex.
    """

    k: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 4:
            raise InputError(f"ring length must be at least 4, got {self.k}")
        if len(self.parts) != self.k:
            raise InputError("number of parts disagrees with k")
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise InputError("empty part in ring partition")
            if seen.intersection(part):
                raise InputError("parts are not disjoint")
            seen.update(part)

    def part_of(self) -> dict[int, int]:
        """Vertex -> 0-based part index."""
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def height_of(self) -> dict[int, int]:
        """Vertex -> 0-based position within its part (0 = bottom)."""
        return {v: h for part in self.parts for h, v in enumerate(part)}

    def bottom(self, i: int) -> int:
        return self.parts[i % self.k][0]

    def top(self, i: int) -> int:
        return self.parts[i % self.k][-1]

    def to_json(self) -> dict:
        return {"k": self.k, "parts": [list(p) for p in self.parts]}

    @classmethod
    def from_json(cls, data: dict) -> "RingPartition":
        return cls(int(data["k"]), tuple(tuple(p) for p in data["parts"]))


# ---------------------------------------------------------------------------
# simplicial elimination

def _closed_matrix(G: Graph) -> np.ndarray:
    closed = G.adjacency_matrix.copy()
    np.fill_diagonal(closed, True)
    return closed


def _diff_matrix(G: Graph) -> np.ndarray:
    """diff[x, y] = |N[x] \\ N[y]| on edges xy, 0 on non-edges.

    Computed as one matrix product; entries stay below 2**24 so float32
    arithmetic is exact.
    """
    closed = _closed_matrix(G).astype(np.float32)
    counts = closed @ (1.0 - closed).T
    diff = np.rint(counts).astype(np.int64)
    diff[~G.adjacency_matrix] = 0
    return diff


def simplicial_elimination_sequence(G: Graph) -> SimplicialSequence:
    """Greedily peel simplicial vertices until none remain.

    A vertex x is simplicial exactly when diff(x, y) = 0 for every other
    live vertex y; the counters are decremented as vertices disappear, so
    no neighborhood is ever rescanned.  Ties are broken toward the
    smallest vertex identifier.
    """
    n = G.n
    if n == 0:
        return SimplicialSequence((), frozenset())
    adj = G.adjacency_matrix
    closed = _closed_matrix(G)
    diff = _diff_matrix(G)
    alive = np.ones(n, dtype=bool)
    order: list[int] = []
    while True:
        blocked = ((diff > 0) & alive[None, :]).any(axis=1)
        candidates = np.flatnonzero(alive & ~blocked)
        if candidates.size == 0:
            break
        x = int(candidates[0])
        order.append(x)
        alive[x] = False
        col = closed[:, x]
        dec = np.outer(col, ~col) & adj
        dec &= alive[:, None] & alive[None, :]
        diff[dec] -= 1
    residual = frozenset(int(v) for v in np.flatnonzero(alive))
    return SimplicialSequence(tuple(order), residual)


def is_chordal(G: Graph) -> bool:
    return not simplicial_elimination_sequence(G).residual


# ---------------------------------------------------------------------------
# ring recognition


def verify_ring_partition(G: Graph, P: RingPartition) -> bool:
    """Check the four conditions characterizing a ring partition.

    (a) every part is a clique; (b) parts are anticomplete outside their
    two cyclic neighbors; (c) each part has a vertex complete to both
    neighbors; (d) any two vertices of one part are domination-comparable.
    Raises InputError when the parts do not partition V(G).
    """
    flat = [v for part in P.parts for v in part]
    if len(flat) != G.n or set(flat) != set(G.vertices):
        raise InputError("parts do not partition the vertex set")
    adj = G.adjacency_matrix
    k = P.k
    parts = [list(p) for p in P.parts]
    for i in range(k):
        block = adj[np.ix_(parts[i], parts[i])]
        if not (block | np.eye(len(parts[i]), dtype=bool)).all():
            return False  # (a)
    for i in range(k):
        allowed = np.zeros(G.n, dtype=bool)
        for j in (i - 1, i, i + 1):
            allowed[parts[j % k]] = True
        if (adj[parts[i]] & ~allowed[None, :]).any():
            return False  # (b)
    for i in range(k):
        targets = parts[(i - 1) % k] + parts[(i + 1) % k]
        if not adj[np.ix_(parts[i], targets)].all(axis=1).any():
            return False  # (c)
    closed = [frozenset(G.neighbors(v)) | {v} for v in range(G.n)]
    for i in range(k):
        # Comparability of all pairs is equivalent to the nesting chain
        # holding once the part is sorted by nonincreasing degree.
        chain = sorted(parts[i], key=lambda v: (-G.degree(v), v))
        for lo, hi in zip(chain, chain[1:]):
            if not closed[hi] <= closed[lo]:
                return False  # (d)
    return True


def _comparability_components(G: Graph) -> list[list[int]]:
    closed = _closed_matrix(G).astype(np.float32)
    counts = np.rint(closed @ (1.0 - closed).T).astype(np.int64)
    subset = counts == 0  # subset[u, v] iff N[u] <= N[v]
    comparable = subset | subset.T
    np.fill_diagonal(comparable, False)
    seen = np.zeros(G.n, dtype=bool)
    components = []
    for v in range(G.n):
        if seen[v]:
            continue
        stack = [v]
        seen[v] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in np.flatnonzero(comparable[u] & ~seen):
                seen[w] = True
                stack.append(int(w))
        comp.sort()
        # reject unless the component is pairwise comparable and a clique
        block = comparable[np.ix_(comp, comp)] | np.eye(len(comp), dtype=bool)
        adj_block = G.adjacency_matrix[np.ix_(comp, comp)] | np.eye(
            len(comp), dtype=bool
        )
        if not (block.all() and adj_block.all()):
            return []
        components.append(comp)
    return components


def _cycle_order(G: Graph, components: list[list[int]]) -> list[int] | None:
    """Order candidate parts along the quotient cycle, or None."""
    k = len(components)
    adj = G.adjacency_matrix
    nbr: list[list[int]] = [[] for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            if adj[np.ix_(components[a], components[b])].any():
                nbr[a].append(b)
                nbr[b].append(a)
    if any(len(ns) != 2 for ns in nbr):
        return None
    order = [0, min(nbr[0])]
    while len(order) < k:
        prev, cur = order[-2], order[-1]
        nxt = nbr[cur][0] if nbr[cur][0] != prev else nbr[cur][1]
        if nxt in order:
            return None  # closed too early: quotient is not one cycle
        order.append(nxt)
    if order[0] not in nbr[order[-1]]:
        return None
    return order


def _canonicalize(parts: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    k = len(parts)
    minima = [min(p) for p in parts]
    start = minima.index(min(minima))
    rotated = parts[start:] + parts[:start]
    if min(rotated[-1]) < min(rotated[1]):
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def recognize_ring(G: Graph) -> RingPartition | None:
    """Recover a ring partition, or None when G is not a ring.

    Parts are recovered as the connected components of the domination-
    comparability relation: inside a ring part every pair is comparable,
    while comparability never crosses parts because each closed
    neighborhood contains bottom vertices of both neighboring parts.
    The candidate partition is then ordered by nonincreasing degree
    (vertex id breaking ties), arranged along the quotient cycle, and
    accepted only if the full characterization holds.

    The result is canonical: part 1 holds the smallest vertex among part
    minima and part 2's minimum is smaller than part k's.
    """
    if G.n < 4:
        return None
    components = _comparability_components(G)
    if len(components) < 4:
        return None
    order = _cycle_order(G, components)
    if order is None:
        return None
    parts = [
        tuple(sorted(components[i], key=lambda v: (-G.degree(v), v))) for i in order
    ]
    candidate = RingPartition(len(parts), _canonicalize(parts))
    if not verify_ring_partition(G, candidate):
        return None
    return candidate
