"""Clique-cutset decomposition and the solvers for the clique-cutset
closure of complete graphs, rings, and 7-hyperantiholes (the `gt` class
of the command line).

Both solvers walk the same decomposition chain: split off an atom along a
clique cutset, recurse on the remainder, and combine.  Atoms are handled
by the ring machinery when possible and by the stability-two matching
argument otherwise; a cutset-free, peel-free atom that is neither a ring
nor of stability at most two is a truthful certificate that the input
lies outside the class.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .chi_structure import chi_ring_class
from .errors import InputError
from .graph import Graph, complement, induced_subgraph
from .matching import max_matching_general
from .ring_coloring import Coloring, _normalize_colors, color_ring_or_simplicial


@dataclass(frozen=True)
class CliqueCutPartition:
    """Partition (A, B, C): A and B nonempty and anticomplete, C a clique,
    with the side G[A u C] guaranteed free of further clique cutsets."""

    A: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]

    def to_json(self) -> dict:
        return {"A": sorted(self.A), "B": sorted(self.B), "C": sorted(self.C)}


# ---------------------------------------------------------------------------
# minimal elimination ordering and the cutset scan


def _minimal_elimination(G: Graph) -> tuple[list[int], list[set[int]]]:
    """Minimal elimination ordering plus per-vertex filled neighborhoods.

    Maximum-cardinality search with fill tracking: at each step the next
    vertex maximizes its weight, and every unnumbered vertex reachable
    through strictly lower-weighted vertices gains weight and a fill edge.
    Returns the elimination order (eliminated-first) and, for each vertex,
    its neighborhood in the filled graph.
    """
    n = G.n
    weight = [0] * n
    numbered = [False] * n
    filled: list[set[int]] = [set(G.neighbors(v)) for v in range(n)]
    selection: list[int] = []
    for _ in range(n):
        v = max(
            (u for u in range(n) if not numbered[u]),
            key=lambda u: (weight[u], -u),
        )
        # bottleneck[u]: smallest possible maximum weight of an inner
        # vertex on an unnumbered path v -> u (direct edges give -inf)
        bottleneck = {v: float("-inf")}
        heap = [(float("-inf"), v)]
        reached: set[int] = set()
        while heap:
            d, u = heapq.heappop(heap)
            if d > bottleneck.get(u, float("inf")):
                continue
            for w in G.neighbors(u):
                if numbered[w]:
                    continue
                through = d if u == v else max(d, weight[u])
                if through < bottleneck.get(w, float("inf")):
                    bottleneck[w] = through
                    heapq.heappush(heap, (through, w))
        for u, d in bottleneck.items():
            if u != v and d < weight[u]:
                reached.add(u)
        for u in reached:
            weight[u] += 1
            filled[u].add(v)
            filled[v].add(u)
        numbered[v] = True
        selection.append(v)
    order = list(reversed(selection))
    return order, filled


def _components(G: Graph, banned: set[int]) -> list[list[int]]:
    seen = set(banned)
    out = []
    for v in range(G.n):
        if v in seen:
            continue
        stack = [v]
        seen.add(v)
        comp = [v]
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        out.append(sorted(comp))
    return out


def _is_clique(G: Graph, vs: list[int]) -> bool:
    if len(vs) <= 1:
        return True
    block = G.adjacency_matrix[np.ix_(vs, vs)]
    return bool((block | np.eye(len(vs), dtype=bool)).all())


def _find_clique_cut(G: Graph) -> tuple[set[int], set[int], set[int]] | None:
    """Any clique-cut-partition of G, or None when G is an atom.

    Scans a minimal elimination ordering: the first vertex whose later
    filled neighborhood is a clique of G that separates yields the split.
    A graph with no such vertex has no clique cutset at all.
    """
    if G.n <= 1:
        return None
    comps = _components(G, set())
    if len(comps) > 1:
        a = set(comps[0])
        return a, set(G.vertices) - a, set()
    order, filled = _minimal_elimination(G)
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in filled[v] if position[u] > position[v]]
        if not _is_clique(G, later):
            continue
        cset = set(later)
        pieces = _components(G, cset)
        if len(pieces) <= 1:
            continue
        side = next(p for p in pieces if v in p)
        a = set(side)
        return a, set(G.vertices) - a - cset, cset
    return None


def clique_cutset_decompose(G: Graph) -> CliqueCutPartition | None:
    """Clique-cut-partition whose A-side together with C is an atom.

    Repeatedly re-splits the A-side; when a nested cutset C' is found,
    the new A-side is chosen as a component of the old side minus C'
    avoiding the old C, which keeps A anticomplete to everything else.
    """
    split = _find_clique_cut(G)
    if split is None:
        return None
    a, b, c = split
    while True:
        region = sorted(a | c)
        sub, mapping = induced_subgraph(G, region)
        inverse = {new: old for old, new in mapping.items()}
        inner = _find_clique_cut(sub)
        if inner is None:
            return CliqueCutPartition(frozenset(a), frozenset(b), frozenset(c))
        _, _, c_new_sub = inner
        c_new = {inverse[v] for v in c_new_sub}
        pieces = _components(sub, c_new_sub)
        old_c_positions = {mapping[v] for v in c - c_new}
        eligible = [p for p in pieces if not old_c_positions.intersection(p)]
        chosen = min(eligible, key=lambda p: inverse[p[0]])
        a = {inverse[v] for v in chosen}
        c = c_new
        b = set(G.vertices) - a - c


# ---------------------------------------------------------------------------
# stability two


def stability_le2(G: Graph) -> bool:
    """True iff G has no stable set of three vertices."""
    adj = G.adjacency_matrix
    non = ~adj.copy()
    np.fill_diagonal(non, False)
    for v in range(G.n):
        others = np.flatnonzero(non[v])
        others = others[others > v]
        if others.size >= 2:
            block = non[np.ix_(others, others)]
            if block.any():
                return False
    return True


def color_alpha_le2(G: Graph) -> Coloring:
    """Optimal coloring of a graph with no three pairwise-nonadjacent
    vertices: matched pairs of the complement share a color, the rest are
    singleton classes, for |V| - |M| colors in total."""
    if not stability_le2(G):
        raise InputError("graph has a stable set of size three")
    pairs = max_matching_general(complement(G))
    coloring: Coloring = {}
    color = 0
    for u, v in pairs:
        color += 1
        coloring[u] = color
        coloring[v] = color
    for v in G.vertices:
        if v not in coloring:
            color += 1
            coloring[v] = color
    return coloring


# ---------------------------------------------------------------------------
# class solvers


def _decomposition_chain(G: Graph):
    """Split G into atom pieces: yields (vertex set, shared clique) pairs
    processed head-first, then the final cutset-free region."""
    pieces: list[tuple[frozenset[int], frozenset[int]]] = []
    current = frozenset(G.vertices)
    while True:
        sub, mapping = induced_subgraph(G, current)
        inverse = {new: old for old, new in mapping.items()}
        part = clique_cutset_decompose(sub)
        if part is None:
            return pieces, current
        ac = frozenset(inverse[v] for v in part.A | part.C)
        cc = frozenset(inverse[v] for v in part.C)
        bc = frozenset(inverse[v] for v in part.B | part.C)
        pieces.append((ac, cc))
        current = bc


def _atom_coloring(H: Graph) -> Coloring | None:
    c = color_ring_or_simplicial(H)
    if c is not None:
        return _normalize_colors(c)[0]
    if stability_le2(H):
        return _normalize_colors(color_alpha_le2(H))[0]
    return None


def _atom_chi(H: Graph) -> int | None:
    value = chi_ring_class(H)
    if value is not None:
        return value
    if stability_le2(H):
        pairs = max_matching_general(complement(H))
        return H.n - len(pairs)
    return None


def _merge_on_clique(
    c_atom: Coloring, c_rest: Coloring, shared: frozenset[int]
) -> Coloring:
    """Permute the colors of c_rest so the two colorings agree on the
    shared clique, then take the union.  Both inputs use palettes 1..r."""
    r_atom = max(c_atom.values(), default=0)
    r_rest = max(c_rest.values(), default=0)
    rename: dict[int, int] = {}
    for v in shared:
        rename[c_rest[v]] = c_atom[v]
    taken = set(rename.values())
    nxt = 1
    for col in range(1, r_rest + 1):
        if col in rename:
            continue
        while nxt in taken:
            nxt += 1
        rename[col] = nxt
        taken.add(nxt)
    merged = dict(c_atom)
    for v, col in c_rest.items():
        merged[v] = rename[col]
    assert max(merged.values(), default=0) <= max(r_atom, r_rest)
    return merged


def color_gt(G: Graph) -> Coloring | None:
    """Optimal coloring for the clique-cutset closure of complete graphs,
    rings, and 7-hyperantiholes; None certifies the input is outside the
    class (the converse may not hold: some outside graphs still color)."""
    if G.n == 0:
        return {}
    pieces, final = _decomposition_chain(G)
    sub, mapping = induced_subgraph(G, final)
    inverse = {new: old for old, new in mapping.items()}
    colored = _atom_coloring(sub)
    if colored is None:
        return None
    coloring = {inverse[v]: col for v, col in colored.items()}
    for region, shared in reversed(pieces):
        sub, mapping = induced_subgraph(G, region)
        inverse = {new: old for old, new in mapping.items()}
        piece_colored = _atom_coloring(sub)
        if piece_colored is None:
            return None
        c_atom = {inverse[v]: col for v, col in piece_colored.items()}
        coloring = _normalize_colors(_merge_on_clique(c_atom, coloring, shared))[0]
    return coloring


def chi_gt(G: Graph) -> int | None:
    """Chromatic number for the same class; None certifies non-membership."""
    if G.n == 0:
        return 0
    pieces, final = _decomposition_chain(G)
    best = 0
    for region, _ in pieces:
        sub, _m = induced_subgraph(G, region)
        value = _atom_chi(sub)
        if value is None:
            return None
        best = max(best, value)
    sub, _m = induced_subgraph(G, final)
    value = _atom_chi(sub)
    if value is None:
        return None
    return max(best, value)
