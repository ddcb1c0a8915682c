"""Shared corpus builders for the test suite."""

from __future__ import annotations

import random

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from onecross.graph import Multigraph, build
from onecross.planarity import test_planarity as run_planarity


def nx_to_multigraph(G: nx.Graph) -> Multigraph:
    return build(
        sorted(tuple(sorted(e)) for e in G.edges()),
        vertices=range(G.number_of_nodes()),
    )


def atlas_connected(max_n: int, max_m: int | None = None) -> list[Multigraph]:
    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(G):
            continue
        if max_m is not None and G.number_of_edges() > max_m:
            continue
        out.append(nx_to_multigraph(G))
    return out


def random_planar_graph(rng: random.Random, n: int) -> Multigraph:
    """Random connected planar graph: greedy edge addition under an nx filter."""
    G = nx.Graph()
    G.add_nodes_from(range(n))
    for v in range(1, n):
        G.add_edge(v, rng.randrange(v))
    for _ in range(3 * n):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or G.has_edge(u, v):
            continue
        G.add_edge(u, v)
        if not nx.is_planar(G):
            G.remove_edge(u, v)
    return nx_to_multigraph(G)


def random_nonplanar_graph(rng: random.Random, max_n: int) -> Multigraph:
    """Random sparse connected nonplanar graph (resamples until nonplanar)."""
    while True:
        n = rng.randint(6, max_n)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        for v in range(1, n):
            G.add_edge(v, rng.randrange(v))
        extra = rng.randint(3, 6)
        for _ in range(20 * extra):
            if G.number_of_edges() >= n - 1 + extra:
                break
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v and not G.has_edge(u, v):
                G.add_edge(u, v)
        g = nx_to_multigraph(G)
        if not run_planarity(g).planar:
            return g
