"""Undirected simple graphs on up to 64 vertices, stored as per-vertex bitsets.

Vertex sets are plain ints used as bitmasks (bit v = vertex v), which keeps
every set operation a single machine-word op for the orders this library
works at.  Graphs are immutable: every editing operation returns a new value.
"""

from __future__ import annotations

from typing import Iterable, Iterator

MAX_VERTICES = 64

Edge = tuple[int, int]


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex collection."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> Iterator[int]:
    """Vertices of a bitmask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph; ``adj[v]`` is the neighbour bitmask of v."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} has bits >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(adj):
            for u in bits_of(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = adj
        self._hash = hash((n, adj))

    # -- construction -----------------------------------------------------

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Trusted constructor for internal hot paths; skips invariant checks.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = hash((n, adj))
        return g

    @staticmethod
    def from_edges(n: int, edges: Iterable[Edge]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, adj)

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> tuple[Edge, ...]:
        """Fixed edge enumeration: pairs (u, v) with u < v, lexicographic."""
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits_of(higher):
                out.append((u, v))
        return tuple(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


# -- constructors ------------------------------------------------------------


def complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, (full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    """Simple cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every cross edge (g1 vertices keep their labels)."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would exceed {MAX_VERTICES} vertices")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    adj = [row | mask2 for row in g1.adj]
    adj += [(row << g1.n) | mask1 for row in g2.adj]
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, (full & ~(row | (1 << v)) for v, row in enumerate(g.adj)))


# -- editing (all return new graphs) -----------------------------------------


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"edge {e} not in graph")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Delete v; labels above v shift down by one (order-preserving compaction)."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if g.n == 1:
        raise ValueError("cannot delete the only vertex")
    keep = [u for u in range(g.n) if u != v]
    return induced(g, keep)


def induced(g: Graph, s: int | Iterable[int]) -> Graph:
    """Induced subgraph on vertex set s (bitmask or iterable), labels compacted."""
    mask = s if isinstance(s, int) else mask_of(s)
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set not within graph")
    verts = list(bits_of(mask))
    if not verts:
        raise ValueError("induced subgraph needs at least one vertex")
    pos = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits_of(g.adj[v] & mask):
            adj[pos[v]] |= 1 << pos[u]
    return Graph(len(verts), adj)


def add_vertex_with_neighborhood(g: Graph, m: int | Iterable[int]) -> Graph:
    """Append one vertex adjacent to exactly the vertices of m."""
    mask = m if isinstance(m, int) else mask_of(m)
    if mask & ~g.vertex_mask:
        raise ValueError("neighborhood not within graph")
    if g.n + 1 > MAX_VERTICES:
        raise ValueError(f"would exceed {MAX_VERTICES} vertices")
    new = g.n
    adj = [row | (1 << new) if mask >> v & 1 else row for v, row in enumerate(g.adj)]
    adj.append(mask)
    return Graph(g.n + 1, adj)
