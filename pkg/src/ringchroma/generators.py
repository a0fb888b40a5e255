"""Chi-bounding functions, instance generators, and clique-minor witnesses.

The bounding functions come in two equivalent forms (a residue-based
piecewise definition and a closed form); both are evaluated on every call
and must agree.  Generators are deterministic given a seed.  The minor
constructions emit branch sets witnessing a complete minor of order equal
to the chromatic number for hyperholes, rings, and hyperantiholes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .chi_structure import (
    HyperholeSelection,
    is_hyperhole,
    max_hyperhole,
    omega_ring,
)
from .errors import InputError
from .graph import Graph
from .matching import cobipartite_max_clique
from .recognition import RingPartition

# ---------------------------------------------------------------------------
# bounding functions


def _check_odd_k(k: int) -> None:
    if k < 5 or k % 2 == 0:
        raise InputError(f"length parameter must be an odd integer >= 5, got {k}")


def _check_n(n: int) -> None:
    if n < 1:
        raise InputError(f"clique-number argument must be positive, got {n}")


def chi_bound_gt(n: int) -> int:
    """Best possible chromatic bound in terms of clique number for the
    whole clique-cutset closure: floor(5n/4) when n = 0,1 (mod 4), else
    ceil(5n/4)."""
    _check_n(n)
    return (5 * n) // 4 if n % 4 in (0, 1) else -((-5 * n) // 4)


def chi_bound_hyperhole(k: int, n: int) -> int:
    """Best chromatic bound for hyperholes of odd length k at clique
    number n.  The residue form floor/ceil(kn/(k-1)) must agree with the
    closed form n + ceil(2*floor(n/2)/(k-1))."""
    _check_odd_k(k)
    _check_n(n)
    piecewise = (
        (k * n) // (k - 1) if n % (k - 1) in (0, 1) else -((-k * n) // (k - 1))
    )
    closed = n + -(-(2 * (n // 2)) // (k - 1))
    assert piecewise == closed
    return closed


def chi_bound_hyperantihole(k: int, n: int) -> int:
    """Best chromatic bound for hyperantiholes of odd length k at clique
    number n.  Residue form: floor(kn/(k-1)) for n mod (k-1) up to
    (k-3)/2, else ceil; closed form: n + ceil(floor(2n/(k-1))/2)."""
    _check_odd_k(k)
    _check_n(n)
    piecewise = (
        (k * n) // (k - 1)
        if n % (k - 1) <= (k - 3) // 2
        else -((-k * n) // (k - 1))
    )
    closed = n + -(-((2 * n) // (k - 1)) // 2)
    assert piecewise == closed
    return closed


# ---------------------------------------------------------------------------
# generators


def consecutive_parts(sizes: Sequence[int]) -> list[list[int]]:
    """Vertex lists 0..s1-1, s1..s1+s2-1, ... matching generator labeling."""
    parts = []
    offset = 0
    for s in sizes:
        parts.append(list(range(offset, offset + s)))
        offset += s
    return parts


def _check_sizes(k: int, sizes: Sequence[int]) -> None:
    if k < 4:
        raise InputError(f"length must be at least 4, got {k}")
    if len(sizes) != k:
        raise InputError("one size per part is required")
    if any(s < 1 for s in sizes):
        raise InputError("part sizes must be positive")


def gen_hyperhole(k: int, sizes: Sequence[int]) -> tuple[Graph, RingPartition]:
    """Hyperhole with the given part sizes: consecutive parts complete."""
    _check_sizes(k, sizes)
    parts = consecutive_parts(sizes)
    edges = []
    for part in parts:
        edges.extend((u, v) for i, u in enumerate(part) for v in part[i + 1 :])
    for i in range(k):
        edges.extend((u, v) for u in parts[i] for v in parts[(i + 1) % k])
    n = sum(sizes)
    return Graph(n, edges), RingPartition(k, tuple(tuple(p) for p in parts))


def gen_extremal_hyperhole(k: int, n: int) -> tuple[Graph, RingPartition]:
    """Hyperhole attaining clique number n and chromatic number
    chi_bound_hyperhole(k, n): odd-position parts of size floor(n/2),
    even-position parts of size ceil(n/2)."""
    _check_odd_k(k)
    if n < 2:
        raise InputError(f"clique number must be at least 2, got {n}")
    sizes = [n // 2 if i % 2 == 0 else (n + 1) // 2 for i in range(k)]
    return gen_hyperhole(k, sizes)


def gen_hyperantihole(k: int, sizes: Sequence[int]) -> Graph:
    """Cyclic clique arrangement, each part anticomplete to its two
    neighbors and complete to everything else."""
    _check_sizes(k, sizes)
    parts = consecutive_parts(sizes)
    edges = []
    for part in parts:
        edges.extend((u, v) for i, u in enumerate(part) for v in part[i + 1 :])
    for i in range(k):
        for j in range(i + 1, k):
            if (j - i) % k in (1, k - 1):
                continue
            edges.extend((u, v) for u in parts[i] for v in parts[j])
    return Graph(sum(sizes), edges)


def extremal_hyperantihole_sizes(k: int, n: int) -> list[int]:
    m, l = divmod(n, k - 1)
    if l <= (k - 3) // 2:
        return [2 * m + 1] * (2 * l) + [2 * m] * (k - 2 * l)
    return [2 * m + 2] * (2 * l - k + 1) + [2 * m + 1] * (2 * k - 2 * l - 1)


def gen_extremal_hyperantihole(k: int, n: int) -> Graph:
    """Hyperantihole attaining clique number n and chromatic number
    chi_bound_hyperantihole(k, n)."""
    _check_odd_k(k)
    if n < (k - 1) // 2:
        raise InputError(f"clique number must be at least {(k - 1) // 2} for k={k}")
    return gen_hyperantihole(k, extremal_hyperantihole_sizes(k, n))


@dataclass(frozen=True)
class StaircaseSpec:
    """Adjacency recipe between consecutive ring parts.

    thresholds[i][p-1] is the number of bottom vertices of part i+1 seen
    by the vertex at height p of part i.  Rows are nonincreasing, start
    at the full next part, and end at a positive value, which is exactly
    the family of interfaces compatible with nested closed neighborhoods.
    """

    k: int
    part_sizes: tuple[int, ...]
    thresholds: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_sizes(self.k, self.part_sizes)
        if len(self.thresholds) != self.k:
            raise InputError("one threshold row per part is required")
        for i, row in enumerate(self.thresholds):
            nxt = self.part_sizes[(i + 1) % self.k]
            if len(row) != self.part_sizes[i]:
                raise InputError("threshold row length must match the part size")
            if row[0] != nxt:
                raise InputError("each threshold row must start at the full next part")
            if row[-1] < 1:
                raise InputError("thresholds must stay positive")
            if any(a < b for a, b in zip(row, row[1:])):
                raise InputError("threshold rows must be nonincreasing")


def ring_from_staircase(spec: StaircaseSpec) -> tuple[Graph, RingPartition]:
    parts = consecutive_parts(spec.part_sizes)
    edges = []
    for part in parts:
        edges.extend((u, v) for i, u in enumerate(part) for v in part[i + 1 :])
    for i in range(spec.k):
        nxt = parts[(i + 1) % spec.k]
        for p, u in enumerate(parts[i]):
            edges.extend((u, nxt[q]) for q in range(spec.thresholds[i][p]))
    P = RingPartition(spec.k, tuple(tuple(p) for p in parts))
    return Graph(sum(spec.part_sizes), edges), P


def gen_random_ring(
    spec_or_k: StaircaseSpec | int,
    max_size: int | None = None,
    seed: int | None = None,
) -> tuple[Graph, RingPartition]:
    """Random ring, either from an explicit staircase or from
    (k, max part size, seed)."""
    if isinstance(spec_or_k, StaircaseSpec):
        return ring_from_staircase(spec_or_k)
    k = spec_or_k
    if max_size is None or seed is None:
        raise InputError("random generation needs k, max_size, and seed")
    if k < 4 or max_size < 1:
        raise InputError("need k >= 4 and max_size >= 1")
    rng = random.Random(seed)
    sizes = tuple(rng.randint(1, max_size) for _ in range(k))
    return ring_from_staircase(random_staircase(sizes, rng))


def random_staircase(sizes: Sequence[int], rng: random.Random) -> StaircaseSpec:
    """Random valid staircase over the given part sizes."""
    k = len(sizes)
    rows = []
    for i in range(k):
        nxt = sizes[(i + 1) % k]
        row = [nxt]
        for _ in range(sizes[i] - 1):
            row.append(rng.randint(1, row[-1]))
        rows.append(tuple(row))
    return StaircaseSpec(k, tuple(sizes), tuple(rows))


def random_clique(G: Graph, rng: random.Random) -> list[int]:
    """Greedy random clique: extend a random vertex along a shuffled order."""
    if G.n == 0:
        return []
    v = rng.randrange(G.n)
    clique = [v]
    others = [u for u in G.vertices if u != v]
    rng.shuffle(others)
    for u in others:
        if all(G.has_edge(u, w) for w in clique):
            clique.append(u)
    return sorted(clique)


def add_simplicial(G: Graph, rng: random.Random) -> Graph:
    """Add one vertex adjacent to a randomly grown clique of G."""
    clique = random_clique(G, rng)
    edges = list(G.edges) + [(u, G.n) for u in clique]
    return Graph(G.n + 1, edges)


def compose_clique_cutset(
    G1: Graph, G2: Graph, K1: Sequence[int], K2: Sequence[int]
) -> Graph:
    """Disjoint union of G1 and G2 with the clique K1 identified to the
    clique K2, matched in ascending vertex order."""
    K1 = sorted(set(K1))
    K2 = sorted(set(K2))
    if len(K1) != len(K2):
        raise InputError("glued cliques must have equal size")
    for G, K in ((G1, K1), (G2, K2)):
        for i, u in enumerate(K):
            if not 0 <= u < G.n:
                raise InputError("clique vertex out of range")
            for v in K[i + 1 :]:
                if not G.has_edge(u, v):
                    raise InputError("glued vertex sets must be cliques")
    relabel2: dict[int, int] = {}
    for old, new in zip(K2, K1):
        relabel2[old] = new
    nxt = G1.n
    for v in G2.vertices:
        if v not in relabel2:
            relabel2[v] = nxt
            nxt += 1
    edges = set(G1.edges)
    for u, v in G2.edges:
        a, b = relabel2[u], relabel2[v]
        edges.add((min(a, b), max(a, b)))
    return Graph(nxt, sorted(edges))


# ---------------------------------------------------------------------------
# clique-minor witnesses


@dataclass(frozen=True)
class BranchSets:
    """Disjoint connected vertex sets, pairwise joined by an edge."""

    sets: tuple[frozenset[int], ...]

    def to_json(self) -> dict:
        return {"sets": [sorted(s) for s in self.sets]}


def verify_minor(G: Graph, B: BranchSets, target: int) -> bool:
    """True iff B witnesses a complete minor of order at least target."""
    if len(B.sets) < target:
        return False
    seen: set[int] = set()
    for s in B.sets:
        if not s or not seen.isdisjoint(s):
            return False
        seen.update(s)
        if any(not 0 <= v < G.n for v in s):
            return False
        stack = [next(iter(s))]
        reached = {stack[0]}
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w in s and w not in reached:
                    reached.add(w)
                    stack.append(w)
        if reached != set(s):
            return False
    for i, s in enumerate(B.sets):
        for t in B.sets[i + 1 :]:
            if not any(G.has_edge(u, v) for u in s for v in t):
                return False
    return True


def hadwiger_minor_hyperhole(G: Graph, P: RingPartition) -> BranchSets:
    """Branch sets of a complete minor of order >= chi for a hyperhole.

    With a minimum part rotated first, pick the heaviest consecutive part
    pair avoiding it; its vertices become singleton branch sets, and the
    remaining parts are threaded by height-paired disjoint paths, one per
    vertex of the minimum part.
    """
    if not is_hyperhole(G, P):
        raise InputError("partition is not a hyperhole partition")
    k = P.k
    start = min(range(k), key=lambda i: (len(P.parts[i]), i))
    parts = [list(P.parts[(start + t) % k]) for t in range(k)]
    j = max(range(1, k - 1), key=lambda t: len(parts[t]) + len(parts[t + 1]))
    span = [(j + 2 + t) % k for t in range(k - 2)]  # wraps through part 0
    width = len(parts[0])
    sets = [
        frozenset(parts[idx][-h] for idx in span) for h in range(1, width + 1)
    ]
    sets.extend(frozenset([v]) for v in parts[j] + parts[j + 1])
    return BranchSets(tuple(sets))


def hadwiger_minor_hyperantihole(A: Graph, parts: Sequence[Sequence[int]]) -> BranchSets:
    """Branch sets of a complete minor of order >= chi for a hyperantihole.

    Either a maximum clique of the graph minus a minimum part extends by
    that part directly, or each of its vertices anchors a connected
    three-vertex set through the two parts the clique avoids.
    """
    parts = [list(p) for p in parts]
    k = len(parts)
    _validate_hyperantihole(A, parts)
    if k == 4:
        big = max(parts[0] + parts[2], parts[1] + parts[3], key=len)
        return BranchSets(tuple(frozenset([v]) for v in big))
    start = min(range(k), key=lambda i: (len(parts[i]), i))
    parts = [parts[(start + t) % k] for t in range(k)]
    rest_a = [v for i in range(1, k, 2) for v in parts[i]]
    rest_b = [v for i in range(2, k, 2) for v in parts[i]]
    K = cobipartite_max_clique(A, rest_a, rest_b)
    if not K & set(parts[1] + parts[k - 1]):
        sets = [frozenset([v]) for v in sorted(K | set(parts[0]))]
        return BranchSets(tuple(sets))
    if not K & set(parts[1]):
        parts = [parts[0]] + parts[:0:-1]  # mirror so K meets the new part 1
    assert not K & set(parts[2])
    third = [v for v in parts[k - 2] + parts[k - 1] if v not in K]
    width = len(parts[0])
    assert len(third) >= width and len(parts[2]) >= width
    sets = [
        frozenset([parts[0][h], parts[2][h], third[h]]) for h in range(width)
    ]
    sets.extend(frozenset([v]) for v in sorted(K))
    return BranchSets(tuple(sets))


def _validate_hyperantihole(A: Graph, parts: list[list[int]]) -> None:
    k = len(parts)
    if k < 4 or any(not p for p in parts):
        raise InputError("need at least four nonempty parts")
    if sorted(v for p in parts for v in p) != list(A.vertices):
        raise InputError("parts must partition the vertex set")
    for i in range(k):
        part = parts[i]
        for a_i, u in enumerate(part):
            for v in part[a_i + 1 :]:
                if not A.has_edge(u, v):
                    raise InputError("parts must be cliques")
        for j in range(i + 1, k):
            want = (j - i) % k not in (1, k - 1)
            for u in part:
                for v in parts[j]:
                    if A.has_edge(u, v) != want:
                        raise InputError("adjacency pattern is not a hyperantihole")


def hadwiger_minor_ring(G: Graph, P: RingPartition) -> BranchSets:
    """Branch sets of a complete minor of order >= chi for a ring.

    Locates a hyperhole of the same chromatic number: the maximum one when
    the size bound dominates, otherwise a maximum clique of a consecutive
    part pair extended by the bottom vertices of all other parts.
    """
    if is_hyperhole(G, P):
        return hadwiger_minor_hyperhole(G, P)
    omega = omega_ring(G, P)
    sel = max_hyperhole(G, P)
    ceil_value = -(-sel.size // (P.k // 2))
    if ceil_value > omega:
        keep = sel.vertex_set(P)
        sub_parts = tuple(
            tuple(v for v in part if v in keep) for part in P.parts
        )
        return _minor_via_subhyperhole(G, sub_parts)
    best_i = max(
        range(P.k),
        key=lambda i: len(
            cobipartite_max_clique(
                G, list(P.parts[i]), list(P.parts[(i + 1) % P.k])
            )
        ),
    )
    Q = cobipartite_max_clique(
        G, list(P.parts[best_i]), list(P.parts[(best_i + 1) % P.k])
    )
    assert len(Q) == omega
    sub_parts = []
    for t in range(P.k):
        i = (best_i + t) % P.k
        if t == 0 or t == 1:
            sub_parts.append(tuple(v for v in P.parts[i] if v in Q))
        else:
            sub_parts.append((P.parts[i][0],))
    return _minor_via_subhyperhole(G, tuple(sub_parts))


def _minor_via_subhyperhole(
    G: Graph, sub_parts: tuple[tuple[int, ...], ...]
) -> BranchSets:
    from .graph import induced_subgraph

    keep = [v for part in sub_parts for v in part]
    sub, mapping = induced_subgraph(G, keep)
    inverse = {new: old for old, new in mapping.items()}
    P_sub = RingPartition(
        len(sub_parts), tuple(tuple(mapping[v] for v in part) for part in sub_parts)
    )
    B = hadwiger_minor_hyperhole(sub, P_sub)
    return BranchSets(
        tuple(frozenset(inverse[v] for v in s) for s in B.sets)
    )
