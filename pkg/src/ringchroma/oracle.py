"""Brute-force ground truth for small instances.

Everything here is deliberately simple and shares no code with the main
algorithms: exact chromatic number by branch and bound, clique and
stability numbers by bitmask search, hole enumeration, and exhaustive
hyperhole maximization.  Sizes are guarded by caps (overridable per call
or through the RINGCHROMA_CAP environment variable).
"""

from __future__ import annotations

import itertools
import os

from .errors import CapacityError
from .graph import Graph, complement, is_proper
from .recognition import RingPartition

CHI_CAP = 20
CLIQUE_CAP = 40
HOLE_CAP = 20
HYPERHOLE_CAP = 10**6


def _cap(value: int | None, default: int) -> int:
    if value is not None:
        return value
    env = os.environ.get("RINGCHROMA_CAP")
    return int(env) if env else default


def brute_chi(G: Graph, cap: int | None = None) -> int:
    """Exact chromatic number by iterative-deepening backtracking.

    Colors are tried up to one beyond the count used so far, so each
    failed round is a proof that one fewer color is infeasible; the
    greedy clique supplies the starting lower bound.
    """
    limit = _cap(cap, CHI_CAP)
    if G.n > limit:
        raise CapacityError(f"brute_chi limited to {limit} vertices, got {G.n}")
    if G.n == 0:
        return 0
    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    earlier = []
    placed: set[int] = set()
    for v in order:
        earlier.append([u for u in G.neighbors(v) if u in placed])
        placed.add(v)

    lower = len(_greedy_clique(G))
    assignment = [0] * G.n

    def feasible(colors: int) -> bool:
        def backtrack(idx: int, used: int) -> bool:
            if idx == G.n:
                return True
            v = order[idx]
            banned = {assignment[u] for u in earlier[idx]}
            for col in range(1, min(used + 1, colors) + 1):
                if col in banned:
                    continue
                assignment[v] = col
                if backtrack(idx + 1, max(used, col)):
                    return True
            assignment[v] = 0
            return False

        return backtrack(0, 0)

    for colors in range(lower, G.n + 1):
        if feasible(colors):
            witness = {v: assignment[v] for v in G.vertices}
            assert is_proper(G, witness) and len(set(witness.values())) <= colors
            return colors
    raise AssertionError("unreachable")


def _greedy_clique(G: Graph) -> list[int]:
    clique: list[int] = []
    for v in sorted(G.vertices, key=lambda v: (-G.degree(v), v)):
        if all(G.has_edge(v, u) for u in clique):
            clique.append(v)
    return clique


def brute_omega(G: Graph, cap: int | None = None) -> int:
    """Exact clique number: bitmask branch and bound with a greedy
    coloring bound on the candidate set."""
    limit = _cap(cap, CLIQUE_CAP)
    if G.n > limit:
        raise CapacityError(f"brute_omega limited to {limit} vertices, got {G.n}")
    if G.n == 0:
        return 0
    masks = [0] * G.n
    for u, v in G.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if candidates == 0:
            best = max(best, size)
            return
        # greedy coloring of the candidate set gives per-vertex bounds
        order: list[int] = []
        bounds: list[int] = []
        rest = candidates
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(masks[v] | (1 << v))
                rest &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        pool = candidates
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            expand(size + 1, pool & masks[v])
            pool &= ~(1 << v)

    expand(0, (1 << G.n) - 1)
    return best


def brute_alpha(G: Graph, cap: int | None = None) -> int:
    """Exact stability number (clique number of the complement)."""
    return brute_omega(complement(G), cap=cap)


def enumerate_holes(G: Graph, cap: int | None = None) -> list[tuple[int, ...]]:
    """All chordless cycles of length at least four.

    Each hole is reported once, as the vertex sequence starting at its
    smallest vertex and oriented toward the smaller second vertex.
    """
    limit = _cap(cap, HOLE_CAP)
    if G.n > limit:
        raise CapacityError(f"enumerate_holes limited to {limit} vertices, got {G.n}")
    neighbor_sets = [set(G.neighbors(v)) for v in G.vertices]
    holes: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        anchor = path[0]
        last = path[-1]
        on_path = set(path)
        for w in sorted(neighbor_sets[last]):
            if w <= anchor or w in on_path:
                continue
            if any(u in neighbor_sets[w] for u in path[1:-1]):
                continue  # chord to the middle of the path
            if anchor in neighbor_sets[w]:
                if len(path) >= 3 and path[1] < w:
                    holes.append(tuple(path) + (w,))
                continue  # closing edge forbids any extension
            extend(path + [w])

    for v in G.vertices:
        extend([v])
    return holes


def brute_max_hyperhole(G: Graph, P: RingPartition, cap: int | None = None) -> int:
    """Largest hyperhole size over all per-part cut heights whose top
    vertices close into a hole."""
    limit = _cap(cap, HYPERHOLE_CAP)
    combos = 1
    for part in P.parts:
        combos *= len(part)
    if combos > limit:
        raise CapacityError(f"{combos} cut combinations exceed the cap {limit}")
    k = P.k
    best = -1
    ranges = [range(1, len(part) + 1) for part in P.parts]
    for cuts in itertools.product(*ranges):
        tops = [P.parts[i][cuts[i] - 1] for i in range(k)]
        if all(G.has_edge(tops[i], tops[(i + 1) % k]) for i in range(k)):
            best = max(best, sum(cuts))
    return best
