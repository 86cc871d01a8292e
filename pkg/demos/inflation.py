"""Build graphs locally like W(F4) by inflating bipartite graphs.

Run: python3 demos/inflation.py
"""

from __future__ import annotations

from weylgraph import graph as G
from weylgraph.iso import is_isomorphic
from weylgraph.weyl import (contract_four_cliques, identify_named, inflate_k3, inflate_k6,
                            is_locally_like_f4, mu_profile)


def main() -> None:
    # every vertex of K3,3 sees a 3-coclique
    for seed in range(5):
        g = inflate_k3(G.complete_bipartite(3, 3), seed=seed)
        print(f"inflate_k3(K3,3), seed {seed}: {g.n} vertices -> {identify_named(g)}")
    for seed in range(3):
        g = inflate_k3(G.hypercube(3), seed=seed)
        print(f"inflate_k3(Q3), seed {seed}: {g.n} vertices -> {identify_named(g)}")

    # C4 x C4 x C4 is bipartite and locally a 6-coclique
    c4 = G.cycle(4)
    lam = G.cartesian(G.cartesian(c4, c4), c4)
    g = inflate_k6(lam, seed=0)
    mu = mu_profile(g)
    back = contract_four_cliques(g)
    print(f"inflate_k6(C4^3): {g.n} vertices, locally like W(F4) = {bool(is_locally_like_f4(g))}")
    print(f"  mu_s + mu_l values: {sorted(mu.mu_sum_values)}")
    print(f"  contracts back to C4^3: {is_isomorphic(back, lam, respect_colors=False) is not None}")


if __name__ == "__main__":
    main()
