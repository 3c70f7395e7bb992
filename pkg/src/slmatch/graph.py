"""Immutable simple graphs and the clique-join families used by the harness.

Vertices are always labelled 0..n-1.  Adjacency is stored as one bitmask int
per vertex, so graphs are hashable value objects and component/subset work is
cheap integer arithmetic.  All structural operations return new graphs.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Iterator

from .errors import InputError


class Graph:
    """Simple undirected graph (no loops, no multiedges) on vertices 0..n-1.

    The constructor trusts its arguments; use :func:`build_graph` to construct
    from an edge list with validation.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self._adj = adj

    def adjacency_mask(self, v: int) -> int:
        """Bitmask of neighbours of v (bit u set iff uv is an edge)."""
        return self._adj[v]

    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._adj]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            m = self._adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with the given edges (duplicates collapsed)."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"vertex count must be a nonnegative integer, got {n!r}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop ({u},{v}) not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def component_masks(adj: tuple[int, ...], mask: int) -> Iterator[int]:
    """Connected components of the subgraph induced on the vertices in `mask`,
    yielded as bitmasks."""
    remaining = mask
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            frontier = nxt & remaining & ~comp
            comp |= frontier
        yield comp
        remaining &= ~comp


def components(G: Graph) -> list[tuple[int, ...]]:
    """Vertex lists of the connected components, each sorted."""
    full = (1 << G.n) - 1
    return [tuple(_bits(m)) for m in component_masks(G._adj, full)]


def is_connected(G: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0."""
    if G.n == 0:
        raise InputError("connectivity is undefined for the empty graph")
    full = (1 << G.n) - 1
    first = next(component_masks(G._adj, full))
    return first == full


def odd_components(G: Graph) -> int:
    """Number of connected components with an odd number of vertices."""
    full = (1 << G.n) - 1
    return sum(m.bit_count() & 1 for m in component_masks(G._adj, full))


def delete_vertices(G: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on V - vertices, relabelled contiguously (order kept)."""
    drop = set(vertices)
    for v in drop:
        if not (isinstance(v, int) and 0 <= v < G.n):
            raise InputError(f"vertex {v!r} not in 0..{G.n - 1}")
    keep = [v for v in range(G.n) if v not in drop]
    adj = []
    for old_u in keep:
        m = G._adj[old_u]
        new_mask = 0
        for new_v, old_v in enumerate(keep):
            if (m >> old_v) & 1:
                new_mask |= 1 << new_v
        adj.append(new_mask)
    return Graph(len(keep), tuple(adj))


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union; G2's vertices are shifted up by G1.n."""
    n1 = G1.n
    adj = list(G1._adj) + [m << n1 for m in G2._adj]
    return Graph(n1 + G2.n, tuple(adj))


def join(G1: Graph, G2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1, n2 = G1.n, G2.n
    g = disjoint_union(G1, G2)
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    adj = [(g._adj[v] | right) if v < n1 else (g._adj[v] | left) for v in range(g.n)]
    return Graph(g.n, tuple(adj))


def complete_graph(m: int) -> Graph:
    if m < 0:
        raise InputError("order must be nonnegative")
    full = (1 << m) - 1
    return Graph(m, tuple(full ^ (1 << v) for v in range(m)))


def empty_graph(m: int) -> Graph:
    if m < 0:
        raise InputError("order must be nonnegative")
    return Graph(m, (0,) * m)


def proof_graph(s: int, parts: Iterable[int]) -> Graph:
    """Clique K_s joined to a disjoint union of cliques of the given orders.

    The first s vertices form the joined clique; each part follows as a
    consecutive block.  This is the shape every deficiency witness can be
    completed to without losing edges.
    """
    parts = list(parts)
    if not (isinstance(s, int) and s >= 1):
        raise InputError(f"s must be a positive integer, got {s!r}")
    if not parts:
        raise InputError("at least one component order is required")
    for p in parts:
        if not (isinstance(p, int) and p >= 1):
            raise InputError(f"component orders must be positive integers, got {p!r}")
    inner = reduce(disjoint_union, (complete_graph(p) for p in parts))
    return join(complete_graph(s), inner)


def extremal_h(n: int) -> Graph:
    """One hub joined to K_{n-3} plus two pendant vertices.

    Vertex 0 is the hub, 1..n-3 the clique, n-2 and n-1 the pendants.
    Edge count is exactly n^2/2 - 5n/2 + 5.
    """
    if not (isinstance(n, int) and n >= 4):
        raise InputError(f"order must be an integer >= 4, got {n!r}")
    return join(complete_graph(1), disjoint_union(complete_graph(n - 3), empty_graph(2)))
