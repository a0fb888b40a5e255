"""Immutable simple graphs over dense integer vertices, plus DIMACS I/O.

Vertices are always 0..n-1.  Adjacency is kept both as a boolean matrix
(constant-time edge tests, vectorized counter setup) and as sorted
neighbor tuples (deterministic iteration).
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from .errors import InputError, ParseError


class Graph:
    """A finite simple undirected graph, immutable after construction."""

    __slots__ = ("n", "_matrix", "_neighbors", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        matrix = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            matrix[u, v] = True
            matrix[v, u] = True
        matrix.setflags(write=False)
        self.n = n
        self._matrix = matrix
        self._neighbors = tuple(
            tuple(int(w) for w in np.flatnonzero(matrix[v])) for v in range(n)
        )
        self._edges = frozenset(
            (int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(matrix)))
        )

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v."""
        return self._edges

    @property
    def adjacency_matrix(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._matrix

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._matrix[u, v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"


def _check_vertex(G: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise InputError(f"invalid vertex identifier {v!r}")


def closed_neighborhood(G: Graph, v: int) -> frozenset[int]:
    """Neighbors of v together with v itself."""
    _check_vertex(G, v)
    return frozenset(G.neighbors(v)) | {v}


def dominates(G: Graph, u: int, v: int) -> bool:
    """True iff the closed neighborhood of v is contained in that of u."""
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        raise InputError("domination is defined for distinct vertices")
    return closed_neighborhood(G, v) <= closed_neighborhood(G, u)


def is_proper(G: Graph, coloring: Mapping[int, int]) -> bool:
    """True iff no edge joins two equal-colored vertices of the domain."""
    for u, v in G.edges:
        cu = coloring.get(u)
        if cu is not None and cu == coloring.get(v):
            return False
    return True


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by S, plus the bijection old vertex -> new vertex.

    Vertices of S are relabeled 0..|S|-1 in ascending order of their
    original identifiers.
    """
    verts = sorted(set(S))
    if not verts:
        raise InputError("induced subgraph of an empty vertex set")
    for v in verts:
        _check_vertex(G, v)
    mapping = {old: new for new, old in enumerate(verts)}
    sub = G.adjacency_matrix[np.ix_(verts, verts)]
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(sub)))]
    return Graph(len(verts), edges), mapping


def complement(G: Graph) -> Graph:
    """Graph on the same vertices whose edges are the non-edges of G."""
    comp = ~G.adjacency_matrix.copy()
    np.fill_diagonal(comp, False)
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(comp)))]
    return Graph(G.n, edges)


def load_dimacs(text: str) -> Graph:
    """Parse a DIMACS .col description into a Graph.

    Accepted lines: comments `c ...`, exactly one header `p edge <n> <m>`,
    and edges `e <u> <v>` with 1-based endpoints.  Vertex indices are
    shifted to 0-based on load.
    """
    n = None
    m_declared = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem header", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError("header must read 'p edge <n> <m>'", lineno)
            try:
                n = int(fields[2])
                m_declared = int(fields[3])
            except ValueError:
                raise ParseError("non-integer header fields", lineno) from None
            if n < 0 or m_declared < 0:
                raise ParseError("negative header fields", lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge before problem header", lineno)
            if len(fields) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError("non-integer edge endpoints", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex index out of range 1..{n}", lineno)
            if u == v:
                raise ParseError("self-loop", lineno)
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unrecognized line type {fields[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem header")
    if m_declared != len(edges):
        raise ParseError(f"header declares {m_declared} edges, found {len(edges)}")
    return Graph(n, edges)


def save_dimacs(G: Graph) -> str:
    """Serialize to DIMACS .col with edges written u < v in sorted order."""
    lines = [f"p edge {G.n} {len(G.edges)}"]
    for u, v in sorted(G.edges):
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
