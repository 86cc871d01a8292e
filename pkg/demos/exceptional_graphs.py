"""Walk through the four exceptional graphs locally like W(F4).

Run: python3 demos/exceptional_graphs.py
"""

from __future__ import annotations

from weylgraph.graph import hypercube
from weylgraph.iso import automorphism_group, is_isomorphic, max_transitive_on_neighbors, orbits
from weylgraph.weyl import (contract_four_cliques, f4_structure, is_locally_like_f4,
                            is_tightly_connected, mu_profile, named_graph, weyl_graph)


def describe(name: str) -> None:
    g = named_graph(name)
    mu = mu_profile(g)
    s = f4_structure(g)
    nt = max_transitive_on_neighbors(g)
    print(f"{name}: {g.n} vertices, {g.num_edges} edges")
    print(f"  locally like W(F4): {bool(is_locally_like_f4(g))}")
    print(f"  mu = {mu.mu}, mu_s = {mu.mu_s}, mu_l = {mu.mu_l}")
    print(f"  short/long = {s.n_short}/{s.n_long}, tightly connected = {is_tightly_connected(g)}")
    print(f"  |Aut| = {automorphism_group(g).order()}, orbits = {len(orbits(g))}")
    print(f"  stabilizer kernel on neighbors = {sorted(nt.kernel_orders)}, "
          f"maximally transitive = {bool(nt)}")


def main() -> None:
    for name in ("g24a", "g24b", "g32a", "g32b"):
        describe(name)
    print()
    print("g24a is W(F4):", is_isomorphic(named_graph("g24a"), weyl_graph("F4")) is not None)
    q = contract_four_cliques(named_graph("g32a"))
    print("g32a / 4-cliques is the cube:",
          is_isomorphic(q, hypercube(3), respect_colors=False) is not None)


if __name__ == "__main__":
    main()
