"""Maximum matching: blossom contraction for general graphs, augmenting
paths for bipartite ones, and the vertex-cover construction that turns a
bipartite matching into a maximum clique of a cobipartite graph.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import InputError
from .graph import Graph

Matching = tuple[tuple[int, int], ...]


def _collect(match: list[int]) -> Matching:
    pairs = {(min(v, m), max(v, m)) for v, m in enumerate(match) if m != -1}
    return tuple(sorted(pairs))


def max_matching_general(G: Graph) -> Matching:
    """Maximum-cardinality matching via alternating trees with blossom
    contraction.  Free vertices are tried lowest-first and neighbors are
    scanned in sorted order, so the result is deterministic.
    """
    n = G.n
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lowest_common_base(a: int, b: int) -> int:
        flagged = [False] * n
        while True:
            a = base[a]
            flagged[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if flagged[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> bool:
        nonlocal parent, base
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in G.neighbors(v):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # odd cycle found: contract the blossom
                    b = lowest_common_base(v, to)
                    in_blossom = [False] * n
                    mark_path(v, b, to, in_blossom)
                    mark_path(to, b, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augment along the alternating path back to root
                        u = to
                        while u != -1:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)
    return _collect(match)


def _check_sides(G: Graph, side_a: Iterable[int], side_b: Iterable[int]):
    a = sorted(set(side_a))
    b = sorted(set(side_b))
    if set(a) & set(b) or set(a) | set(b) != set(G.vertices):
        raise InputError("sides must partition the vertex set")
    for side in (a, b):
        for i, u in enumerate(side):
            for v in side[i + 1 :]:
                if G.has_edge(u, v):
                    raise InputError("sides must be independent sets")
    return a, b


def max_matching_bipartite(G: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> Matching:
    """Maximum matching of a bipartite graph by repeated augmentation."""
    a, b = _check_sides(G, side_a, side_b)
    adjacency = {u: [v for v in G.neighbors(u)] for u in a}
    match_of = _kuhn(adjacency, a)
    pairs = sorted((min(u, v), max(u, v)) for v, u in match_of.items())
    return tuple(pairs)


def _kuhn(adjacency: dict[int, list[int]], left: list[int]) -> dict[int, int]:
    """Kuhn's algorithm; returns right-vertex -> left-vertex matching."""
    match_of: dict[int, int] = {}

    def try_augment(u: int, visited: set[int]) -> bool:
        for v in adjacency[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_of or try_augment(match_of[v], visited):
                match_of[v] = u
                return True
        return False

    for u in left:
        try_augment(u, set())
    return match_of


def cobipartite_max_clique(G: Graph, side_a: Iterable[int], side_b: Iterable[int]) -> frozenset[int]:
    """Maximum clique of a graph whose vertex set splits into two cliques.

    A clique of G[A u B] is an independent set of the bipartite graph of
    non-adjacent cross pairs; the maximum one is the complement of a
    minimum vertex cover, recovered from a maximum matching by the
    alternating-reachability construction.
    """
    a = sorted(set(side_a))
    b = sorted(set(side_b))
    if set(a) & set(b):
        raise InputError("sides must be disjoint")
    for side in (a, b):
        for i, u in enumerate(side):
            for v in side[i + 1 :]:
                if not G.has_edge(u, v):
                    raise InputError("each side must be a clique")
    # bipartite graph of cross non-edges
    adjacency = {u: [v for v in b if not G.has_edge(u, v)] for u in a}
    match_of = _kuhn(adjacency, a)  # right -> left
    matched_left = set(match_of.values())
    left_match = {u: v for v, u in match_of.items()}
    # alternating reachability from unmatched left vertices
    reach_left = {u for u in a if u not in matched_left}
    reach_right: set[int] = set()
    queue = deque(reach_left)
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if v in reach_right:
                continue
            if left_match.get(u) == v:
                continue
            reach_right.add(v)
            owner = match_of.get(v)
            if owner is not None and owner not in reach_left:
                reach_left.add(owner)
                queue.append(owner)
    cover = (set(a) - reach_left) | reach_right
    return frozenset((set(a) | set(b)) - cover)
