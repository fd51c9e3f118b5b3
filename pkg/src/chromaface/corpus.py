"""Exhaustive corpora of small graphs, drawn from the networkx graph atlas."""

from __future__ import annotations

from typing import Iterator

import networkx as nx

from .graph import Graph, is_connected


def from_networkx(h: nx.Graph) -> Graph:
    index = {v: i + 1 for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(index), [(index[a], index[b]) for a, b in h.edges()])


def to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges)
    return h


def atlas_graphs(max_vertices: int = 7, max_edges: int | None = None, connected: bool = True) -> Iterator[Graph]:
    """All graphs up to isomorphism with at most ``max_vertices`` (<= 7) vertices."""
    if max_vertices > 7:
        raise ValueError("the graph atlas stops at 7 vertices")
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 0 or h.number_of_nodes() > max_vertices:
            continue
        if max_edges is not None and h.number_of_edges() > max_edges:
            continue
        g = from_networkx(h)
        if connected and not is_connected(g):
            continue
        yield g
