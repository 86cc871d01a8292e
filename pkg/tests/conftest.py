"""Independent oracles shared by the test modules."""

from __future__ import annotations

from itertools import combinations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher, categorical_node_match

from weylgraph.graph import BichromaticGraph
from weylgraph.permgroup import Perm


def to_nx(g: BichromaticGraph) -> nx.Graph:
    h = nx.Graph()
    for v in range(g.n):
        h.add_node(v, color=g.colors[v])
    h.add_edges_from(g.edges())
    return h


def vf2(a: BichromaticGraph, b: BichromaticGraph, respect_colors: bool = True) -> GraphMatcher:
    match = categorical_node_match("color", None) if respect_colors else None
    return GraphMatcher(to_nx(a), to_nx(b), node_match=match)


def vf2_isomorphic(a, b, respect_colors: bool = True) -> bool:
    return vf2(a, b, respect_colors).is_isomorphic()


def vf2_aut_count(g, respect_colors: bool = True) -> int:
    return sum(1 for _ in vf2(g, g, respect_colors).isomorphisms_iter())


def is_witness(a: BichromaticGraph, b: BichromaticGraph, image, respect_colors: bool = True) -> bool:
    """Check a vertex map edge by edge."""
    if sorted(image) != list(range(b.n)) or a.n != b.n:
        return False
    if respect_colors and any(a.colors[v] != b.colors[image[v]] for v in range(a.n)):
        return False
    return all(b.has_edge(image[u], image[v]) == a.has_edge(u, v)
               for u, v in combinations(range(a.n), 2))


def closure_order(gens: list[Perm]) -> int:
    """Group order by breadth-first closure; only for small groups."""
    e = Perm.identity(gens[0].degree)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = h * g
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return len(seen)
