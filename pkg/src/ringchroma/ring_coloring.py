"""Optimal coloring of rings and of graphs that peel down to rings.

Even rings are colored directly from the part orders.  Odd rings go
through the swap machinery: a partial coloring of the ring minus the top
of part 2 is massaged until no two-color chain orders the anchor color
badly, after which either the anchor class comes out as a spare color or
the chromatic number is pinned one above the partial coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .chi_structure import omega_ring
from .errors import InputError, StructureError
from .graph import Graph, induced_subgraph, is_proper
from .recognition import (
    RingPartition,
    recognize_ring,
    simplicial_elimination_sequence,
)

Coloring = dict[int, int]


# ---------------------------------------------------------------------------
# small shared helpers


def _normalize_colors(c: Mapping[int, int]) -> tuple[Coloring, int]:
    """Rename colors onto 1..r, preserving their sorted order."""
    palette = sorted(set(c.values()))
    rename = {old: i + 1 for i, old in enumerate(palette)}
    return {v: rename[col] for v, col in c.items()}, len(palette)


def _greedy_extend(G: Graph, coloring: Coloring, order: list[int]) -> None:
    """Color `order` greedily with the smallest available color."""
    for v in order:
        used = {coloring[u] for u in G.neighbors(v) if u in coloring}
        col = 1
        while col in used:
            col += 1
        coloring[v] = col


def _swap_color_names(c: Coloring, a: int, b: int) -> Coloring:
    if a == b:
        return dict(c)
    return {v: (b if col == a else a if col == b else col) for v, col in c.items()}


# ---------------------------------------------------------------------------
# even rings


def color_even_ring(G: Graph, P: RingPartition) -> Coloring:
    """Optimal coloring of an even ring with exactly omega colors.

    Odd-position parts are colored upward (height j gets color j), even
    ones downward (height j gets omega - j + 1); adjacent cross pairs
    would need j + l = omega + 1 to collide, which no clique allows.
    """
    if P.k % 2 != 0:
        raise InputError("even-ring coloring needs an even ring length")
    w = omega_ring(G, P)
    coloring: Coloring = {}
    for i, part in enumerate(P.parts):
        for h, v in enumerate(part, start=1):
            coloring[v] = h if i % 2 == 0 else w - h + 1
    return coloring


# ---------------------------------------------------------------------------
# two-color components


@dataclass(frozen=True)
class TwoColorComponent:
    """One connected piece of the subgraph induced by two color classes:
    a path with one vertex per consecutive part, plus an optional pendant
    per position sitting strictly higher in the same part."""

    start_part: int
    path: tuple[int, ...]
    pendants: tuple[int | None, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.path) | {p for p in self.pendants if p is not None}


def _color_components(G: Graph, vertices: list[int]) -> list[list[int]]:
    vertex_set = set(vertices)
    seen: set[int] = set()
    components = []
    for v in sorted(vertices):
        if v in seen:
            continue
        stack = [v]
        seen.add(v)
        comp = [v]
        while stack:
            u = stack.pop()
            for w in G.neighbors(u):
                if w in vertex_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
                    comp.append(w)
        components.append(sorted(comp))
    return components


def two_color_components(
    G: Graph, P: RingPartition, c: Mapping[int, int], a: int, b: int
) -> list[TwoColorComponent]:
    """Decompose the subgraph induced by colors a and b into path-plus-
    pendant components.  Raises StructureError when a component does not
    fit that shape (which cannot happen for a proper partial coloring of
    a graph induced in an odd ring consistent with P)."""
    if a == b:
        raise InputError("two distinct colors are required")
    if not is_proper(G, c):
        raise InputError("coloring is not proper on its domain")
    part_of = P.part_of()
    height_of = P.height_of()
    k = P.k
    chosen = [v for v, col in c.items() if col == a or col == b]
    out = []
    for comp in _color_components(G, chosen):
        by_part: dict[int, list[int]] = {}
        for v in comp:
            by_part.setdefault(part_of[v], []).append(v)
        for i, vs in by_part.items():
            if len(vs) > 2:
                raise StructureError(f"three component vertices share part {i}")
            vs.sort(key=height_of.get)
        occupied = sorted(by_part)
        if len(occupied) < k:
            # occupied parts must form one cyclic interval
            breaks = [i for i in occupied if (i + 1) % k not in by_part]
            if len(breaks) != 1:
                raise StructureError("component occupies a non-consecutive part set")
            end = breaks[0]
            start = (end - len(occupied) + 1) % k
        else:
            # every part holds a component vertex; the path break is the
            # unique consecutive pair of low vertices with no edge
            lows = {i: by_part[i][0] for i in occupied}
            breaks = [
                i for i in range(k) if not G.has_edge(lows[i], lows[(i + 1) % k])
            ]
            if not breaks:
                raise StructureError("component wraps the whole ring as a cycle")
            if len(breaks) > 1:
                raise StructureError("component is not a single path")
            end = breaks[0]
            start = (end + 1) % k
        span = [(start + t) % k for t in range(len(occupied))]
        if set(span) != set(occupied):
            raise StructureError("component occupies a non-consecutive part set")
        path = [by_part[i][0] for i in span]
        pendants = [by_part[i][1] if len(by_part[i]) == 2 else None for i in span]
        for u, v in zip(path, path[1:]):
            if not G.has_edge(u, v):
                raise StructureError("path vertices in consecutive parts not adjacent")
        if len(span) == k and G.has_edge(path[0], path[-1]):
            raise StructureError("component closes into a cycle")
        for pos, pend in enumerate(pendants):
            if pend is None:
                continue
            inside = [w for w in comp if w != pend and G.has_edge(pend, w)]
            if inside != [path[pos]]:
                raise StructureError("pendant touches more than its path vertex")
        out.append(TwoColorComponent(start, tuple(path), tuple(pendants)))
    return out


# ---------------------------------------------------------------------------
# the swap machinery


@dataclass(frozen=True)
class UnimprovabilityCertificate:
    verdict: bool
    # on failure: (offending color, component vertex set, 1-based part index)
    witness: tuple[int, frozenset[int], int] | None = None


def _check_partial_domain(G: Graph, P: RingPartition, c: Mapping[int, int]) -> int:
    """Validate the standing preconditions; returns the missing top vertex."""
    if P.k % 2 == 0:
        raise InputError("the swap machinery applies to odd rings only")
    t2 = P.top(1)
    expected = set(G.vertices) - {t2}
    if set(c) != expected:
        raise InputError("coloring must cover exactly the ring minus the top of part 2")
    if not is_proper(G, c):
        raise InputError("coloring is not proper")
    return t2


def _is_lower_in_part(
    P: RingPartition, c: Mapping[int, int], i1: int, a: int, b: int, t2: int
) -> bool:
    """Is color a lower than color b in part i1 (1-based), ignoring t2?"""
    pos_a = pos_b = None
    for h, v in enumerate(P.parts[i1 - 1]):
        if v == t2:
            continue
        col = c.get(v)
        if col == a:
            pos_a = h
        elif col == b:
            pos_b = h
    if pos_a is None:
        return False
    return pos_b is None or pos_a < pos_b


def _find_violation(
    G: Graph, P: RingPartition, c: Mapping[int, int], t2: int
) -> tuple[int, list[int], int] | None:
    """First (color, component, part) where the anchor color sits on the
    wrong side: the anchor must be lower in odd parts >= 3 met by the
    component and higher in even ones, for components avoiding the bottom
    of part 1."""
    s1 = P.bottom(0)
    c1 = c[s1]
    part_of = P.part_of()
    by_color: dict[int, list[int]] = {}
    for v, col in c.items():
        by_color.setdefault(col, []).append(v)
    for a in sorted(by_color):
        if a == c1:
            continue
        chosen = by_color[c1] + by_color[a]
        for comp in _color_components(G, chosen):
            if s1 in comp:
                continue
            for i1 in sorted({part_of[v] + 1 for v in comp}):
                if i1 < 3:
                    continue
                if i1 % 2 == 1:
                    ok = _is_lower_in_part(P, c, i1, c1, a, t2)
                else:
                    ok = _is_lower_in_part(P, c, i1, a, c1, t2)
                if not ok:
                    return a, comp, i1
    return None


def is_unimprovable(
    G: Graph, P: RingPartition, c: Mapping[int, int]
) -> UnimprovabilityCertificate:
    """Certificate for the no-bad-chain property of a partial coloring."""
    t2 = _check_partial_domain(G, P, c)
    found = _find_violation(G, P, c, t2)
    if found is None:
        return UnimprovabilityCertificate(True)
    a, comp, i1 = found
    return UnimprovabilityCertificate(False, (a, frozenset(comp), i1))


def _rank(P: RingPartition, c: Mapping[int, int], c1: int) -> int:
    """Swap potential: position of the anchor color in parts 3..k, counted
    upward in odd parts and downward in even ones."""
    total = 0
    for i1 in range(3, P.k + 1):
        part = P.parts[i1 - 1]
        pos = None
        for h, v in enumerate(part, start=1):
            if c.get(v) == c1:
                pos = h
                break
        if i1 % 2 == 1:
            total += pos if pos is not None else len(part) + 1
        else:
            total += len(part) - pos + 2 if pos is not None else 1
    return total


def make_unimprovable(
    G: Graph, P: RingPartition, c: Mapping[int, int], trace: list[int] | None = None
) -> Coloring:
    """Swap the anchor color along offending components until none remain.

    Each swap strictly decreases the rank, so the loop performs at most
    1 + sum of part sizes beyond part 2 swaps.  The anchor color of the
    bottom of part 1 is never touched, the domain and properness are
    preserved, and no new color is introduced.
    """
    t2 = _check_partial_domain(G, P, c)
    out = dict(c)
    s1 = P.bottom(0)
    c1 = out[s1]
    bound = 1 + sum(len(p) for p in P.parts[2:])
    swaps = 0
    last_rank = _rank(P, out, c1)
    if trace is not None:
        trace.append(last_rank)
    while True:
        found = _find_violation(G, P, out, t2)
        if found is None:
            return out
        a, comp, _ = found
        for v in comp:
            out[v] = a if out[v] == c1 else c1
        swaps += 1
        new_rank = _rank(P, out, c1)
        assert new_rank < last_rank, "swap failed to decrease the rank"
        assert swaps <= bound, "swap budget exceeded"
        last_rank = new_rank
        if trace is not None:
            trace.append(new_rank)


# ---------------------------------------------------------------------------
# extension and the full solver


def extend_optimal_coloring(G: Graph, P: RingPartition, c: Mapping[int, int]) -> Coloring:
    """Complete a partial coloring of an odd ring to the whole ring.

    Given a proper coloring of the ring minus the top of part 2 using r
    colors, the result is proper on all of G and uses at most
    max(chi(G), r) colors: either the anchor class can be re-used as one
    spare color after re-coloring the rest, or chi(G) = r + 1 and the
    missing vertex takes the fresh color.
    """
    _check_partial_domain(G, P, c)
    frames: list[tuple[Graph, Coloring, int, set[int], int, list[int], dict[int, int]]] = []
    cur_G, cur_P, cur_c = G, P, dict(c)
    result: Coloring
    while True:
        cur_c, r = _normalize_colors(cur_c)
        cur_c = make_unimprovable(cur_G, cur_P, cur_c)
        s1 = cur_P.bottom(0)
        t2 = cur_P.top(1)
        cur_c = _swap_color_names(cur_c, cur_c[s1], r)
        S = {v for v, col in cur_c.items() if col == r}
        rest = sorted(set(cur_G.vertices) - S)
        sub, mapping = induced_subgraph(cur_G, rest)
        inverse = {new: old for old, new in mapping.items()}
        seq = simplicial_elimination_sequence(sub)
        peel = [inverse[v] for v in seq.order]
        if not seq.residual:
            partial: Coloring = {}
            result = _finish_level(cur_G, cur_c, partial, peel, r, S, t2)
            break
        residual = sorted(inverse[v] for v in seq.residual)
        res_parts = tuple(
            tuple(v for v in part if v in set(residual)) for part in cur_P.parts
        )
        assert all(res_parts), "residual ring lost a whole part"
        if t2 not in residual:
            partial = {v: cur_c[v] for v in residual}
            result = _finish_level(cur_G, cur_c, partial, peel, r, S, t2)
            break
        # descend into the residual ring
        sub_r, map_r = induced_subgraph(cur_G, residual)
        inv_r = {new: old for old, new in map_r.items()}
        child_P = RingPartition(
            cur_P.k, tuple(tuple(map_r[v] for v in part) for part in res_parts)
        )
        child_c = {map_r[v]: cur_c[v] for v in residual if v != t2}
        frames.append((cur_G, cur_c, r, S, t2, peel, inv_r))
        cur_G, cur_P, cur_c = sub_r, child_P, child_c
    while frames:
        parent_G, parent_c, r, S, t2, peel, inv_r = frames.pop()
        partial = {inv_r[v]: col for v, col in result.items()}
        result = _finish_level(parent_G, parent_c, partial, peel, r, S, t2)
    return result


def _finish_level(
    G: Graph,
    unimprovable: Coloring,
    partial: Coloring,
    peel: list[int],
    r: int,
    S: set[int],
    t2: int,
) -> Coloring:
    """Re-add the peeled vertices greedily, then close out one level."""
    _greedy_extend(G, partial, list(reversed(peel)))
    partial, used = _normalize_colors(partial) if partial else ({}, 0)
    if used <= r - 1:
        fresh = used + 1
        out = dict(partial)
        for v in S:
            out[v] = fresh
        return out
    # the partial coloring needs at least r colors, so chi(G) = r + 1
    out = dict(unimprovable)
    out[t2] = r + 1
    return out


def color_ring_or_simplicial(G: Graph) -> Coloring | None:
    """Optimal coloring of a graph every induced subgraph of which is a
    ring or has a simplicial vertex; None when G is not such a graph.

    Simplicial vertices are peeled and later re-added greedily in reverse;
    a peel-free graph must be a ring, colored directly when even and via
    the extension machinery (after recursing on the ring minus the top of
    part 2) when odd.
    """
    if G.n == 0:
        return {}
    frames: list[tuple[str, object]] = []
    cur = frozenset(G.vertices)
    base: Coloring | None = None
    while True:
        sub, mapping = induced_subgraph(G, cur)
        inverse = {new: old for old, new in mapping.items()}
        seq = simplicial_elimination_sequence(sub)
        if seq.order:
            frames.append(("greedy", [inverse[v] for v in seq.order]))
            if not seq.residual:
                base = {}
                break
            cur = frozenset(inverse[v] for v in seq.residual)
            continue
        P = recognize_ring(sub)
        if P is None:
            return None
        if P.k % 2 == 0:
            colored = color_even_ring(sub, P)
            base = {inverse[v]: col for v, col in colored.items()}
            break
        P_orig = RingPartition(
            P.k, tuple(tuple(inverse[v] for v in part) for part in P.parts)
        )
        frames.append(("extend", (cur, P_orig)))
        cur = cur - {P_orig.top(1)}
    coloring = base
    for kind, payload in reversed(frames):
        if kind == "greedy":
            _greedy_extend(G, coloring, list(reversed(payload)))
        else:
            vset, P_orig = payload
            sub, mapping = induced_subgraph(G, vset)
            inverse = {new: old for old, new in mapping.items()}
            P_sub = RingPartition(
                P_orig.k, tuple(tuple(mapping[v] for v in part) for part in P_orig.parts)
            )
            t2 = P_orig.top(1)
            c_sub = {mapping[v]: coloring[v] for v in vset if v != t2}
            extended = extend_optimal_coloring(sub, P_sub, c_sub)
            for new_v, col in extended.items():
                coloring[inverse[new_v]] = col
    return coloring
