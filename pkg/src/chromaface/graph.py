"""Simple undirected graphs on the dense vertex range 1..n."""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graph input or an invalid edit."""


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph with vertices ``1..n``.

    Edges are unordered pairs stored as sorted tuples. Editing helpers
    return new graphs.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        es: set[Edge] = set()
        for pair in edges:
            u, v = pair
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge {pair} has a vertex outside 1..{n}")
            if u == v:
                raise GraphError(f"edge {pair} is a loop")
            e = norm_edge(u, v)
            es.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)

    # queries

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> dict[int, int]:
        return {v: len(self._adj[v]) for v in self.vertices()}

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj[1:]), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj[1:]), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 1 <= u <= self.n and v in self._adj[u]

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # edits

    def delete_edge(self, u: int, v: int) -> Graph:
        e = norm_edge(u, v)
        if e not in self.edges:
            raise GraphError(f"edge {e} is not in the graph")
        return Graph(self.n, self.edges - {e})

    def add_edges(self, pairs: Iterable[Edge], new_vertices: int = 0) -> Graph:
        return Graph(self.n + new_vertices, list(self.edges) + list(pairs))

    def delete_vertex(self, v: int) -> Graph:
        """Remove ``v`` and relabel the vertices above it down by one."""
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} is not in the graph")
        shift = lambda x: x - 1 if x > v else x  # noqa: E731
        return Graph(self.n - 1, [(shift(a), shift(b)) for a, b in self.edges if v not in (a, b)])


def graph_from_edges(n: int, edge_list: Iterable[Edge]) -> Graph:
    return Graph(n, edge_list)


def subdivide_edge(g: Graph, e: Edge) -> Graph:
    """Replace ``e`` by a path of length two through the new vertex ``n+1``."""
    u, v = norm_edge(*e)
    if (u, v) not in g.edges:
        raise GraphError(f"cannot subdivide {e}: not an edge")
    w = g.n + 1
    return Graph(w, [x for x in g.edges if x != (u, v)] + [(u, w), (w, v)])


def _connected_without(g: Graph, removed: frozenset[int]) -> bool:
    alive = [v for v in g.vertices() if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    queue = deque([alive[0]])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen and y not in removed:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(alive)


def is_connected(g: Graph) -> bool:
    return _connected_without(g, frozenset())


def connectivity_level(g: Graph) -> int:
    """Vertex connectivity capped at 3 (0 for a disconnected graph).

    Complete graphs K_k count as (k-1)-connected, so K_4 and larger
    report 3.
    """
    if g.n == 0 or not is_connected(g):
        return 0
    if g.n <= 2:
        return 1
    for v in g.vertices():
        if not _connected_without(g, frozenset((v,))):
            return 1
    if g.n == 3:
        return 2
    for a, b in combinations(g.vertices(), 2):
        if not _connected_without(g, frozenset((a, b))):
            return 2
    return 3


def neighborhood(g: Graph, s: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for v in s:
        out |= g.neighbors(v)
    return out


def common_neighbors(g: Graph, u: int, v: int) -> set[int]:
    return set(g.neighbors(u) & g.neighbors(v))


def triangles_through_edge_avoiding(g: Graph, e: Edge, y: int) -> int:
    """Triangles on ``e`` whose third vertex is not ``y``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"{e} is not an edge")
    if y in (u, v):
        raise GraphError(f"vertex {y} is an endpoint of {e}")
    return len(common_neighbors(g, u, v) - {y})


def iter_degree_sequence(g: Graph) -> Iterator[int]:
    return (g.degree(v) for v in g.vertices())


def suppress_degree_two(g: Graph) -> Graph | None:
    """Smooth every degree-2 vertex; ``None`` if that leaves a multigraph.

    Returned vertices are relabelled densely, preserving relative order.
    """
    keep = [v for v in g.vertices() if g.degree(v) != 2]
    if len(keep) < 2:
        return None
    index = {v: i + 1 for i, v in enumerate(keep)}
    new_edges: list[Edge] = []
    seen_darts: set[tuple[int, int]] = set()
    for a in keep:
        for b in g.neighbors(a):
            if (a, b) in seen_darts:
                continue
            prev, cur = a, b
            while g.degree(cur) == 2:
                nxt = next(iter(g.neighbors(cur) - {prev}))
                prev, cur = cur, nxt
            seen_darts.add((a, b))
            seen_darts.add((cur, prev))
            if cur == a:
                return None
            new_edges.append(norm_edge(index[a], index[cur]))
    if len(set(new_edges)) != len(new_edges):
        return None
    return Graph(len(keep), new_edges)


# small named graphs used across tests and checks

def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
