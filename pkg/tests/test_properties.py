"""Property tests for the invariants each module promises."""

from __future__ import annotations

import math
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from weylgraph import graph as G
from weylgraph.coxeter import coset_enumerate, coxeter_group, coxeter_matrix, coxeter_presentation, reflection_graph
from weylgraph.graph import BichromaticGraph
from weylgraph.iso import automorphism_group, canonical_form, is_isomorphic, orbits
from weylgraph.permgroup import (Perm, PermGroup, commutes, conjugacy_class, involution_census,
                                 orbit, stabilizer, symmetric_group, symmetric_involution_class_size)
from weylgraph.recognize import seeded_graph_data, symmetric_input, weyl_f4_input
from weylgraph.rootsys import build_root_system, reflection_perm, root_pair_representatives, weyl_group
from weylgraph.weyl import (contract_four_cliques, f4_structure, inflate_k3, inflate_k6,
                            is_locally_like_f4, mu_profile, named_graph, weyl_graph)

from conftest import vf2_isomorphic

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def perms(draw, n=7):
    return Perm(draw(st.permutations(range(n))))


@st.composite
def graphs(draw, min_n=1, max_n=9, colored=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    colors = draw(st.lists(st.sampled_from("sl"), min_size=n, max_size=n)) if colored else None
    return BichromaticGraph(n, [p for p, c in zip(pairs, chosen) if c], colors)


# -- permutation groups ----------------------------------------------------

@SETTINGS
@given(st.lists(perms(), min_size=1, max_size=3), st.integers(0, 6))
def test_orbit_stabilizer(gens, x):
    g = PermGroup(gens)
    assert len(orbit(g, x)) * stabilizer(g, x).order() == g.order()


@SETTINGS
@given(st.lists(perms(6), min_size=1, max_size=2), perms(6))
def test_conjugacy_class_is_conjugation_orbit(gens, h):
    g = PermGroup(gens)
    cls = set(conjugacy_class(g, h))
    assert cls == {h ** e for e in g.elements()}


@SETTINGS
@given(perms(9))
def test_inverse_roundtrip(p):
    assert (p * p.inverse()).is_identity() and (p.inverse() * p).is_identity()


@pytest.mark.parametrize("n", range(2, 9))
def test_symmetric_involution_census(n):
    census = involution_census(symmetric_group(n))
    sizes = sorted(census.values())
    want = sorted(symmetric_involution_class_size(n, k) for k in range(1, n // 2 + 1))
    assert sizes == want
    assert want == sorted(math.perm(n, 2 * k) // (math.factorial(k) * 2 ** k)
                          for k in range(1, n // 2 + 1))


# -- root systems ------------------------------------------------------------

def _similar(a: set, b: set) -> bool:
    na = {sum(c * c for c in v) for v in a}
    nb = {sum(c * c for c in v) for v in b}
    if len(na) != 1 or len(nb) != 1:
        return False
    # uniform scaling by sqrt(ratio); compare Gram matrices up to that factor
    ra, rb = sorted(a), sorted(b)
    (x,), (y,) = na, nb
    gram = lambda vs: sorted(sorted(sum(p * q for p, q in zip(u, v)) for v in vs) for u in vs)  # noqa: E731
    return [[e * y for e in row] for row in gram(ra)] == [[e * x for e in row] for row in gram(rb)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_c_short_roots_similar_to_b_long_roots(n):
    b, c = build_root_system(f"B{n}"), build_root_system(f"C{n}")
    assert _similar({r.coords for r in c.short_roots}, {r.coords for r in b.long_roots})
    assert _similar({r.coords for r in c.long_roots}, {r.coords for r in b.short_roots})


@pytest.mark.parametrize("tag", ["B3", "C4", "F4", "G2"])
def test_weyl_group_preserves_length_class(tag):
    rs = build_root_system(tag)
    for p in weyl_group(rs).generators:
        for i, r in enumerate(rs.roots):
            assert rs.roots[p(i)].length_class == r.length_class


# -- graph algebra ----------------------------------------------------------

@SETTINGS
@given(graphs())
def test_graph_or_complement_connected(g):
    assert G.is_connected(g) or G.is_connected(G.complement(g))


@SETTINGS
@given(graphs(max_n=6), graphs(max_n=6))
def test_local_graph_of_product(a, b):
    p = G.cartesian(a, b)
    for x in range(a.n):
        for y in range(b.n):
            want = G.disjoint_union(G.local_graph(a, x), G.local_graph(b, y))
            assert is_isomorphic(G.local_graph(p, x * b.n + y), want) is not None


@SETTINGS
@given(graphs(max_n=6), graphs(max_n=6))
def test_products_of_connected_graphs_are_connected(a, b):
    if G.is_connected(a) and G.is_connected(b):
        assert G.is_connected(G.cartesian(a, b))


SMALL_CHI = {"c4": G.cycle(4), "c5": G.cycle(5), "c6": G.cycle(6), "k3": G.complete(3), "k4": G.complete(4)}


@pytest.mark.parametrize("a,b", [(a, b) for a in SMALL_CHI for b in SMALL_CHI])
def test_chromatic_number_of_product(a, b):
    ga, gb = SMALL_CHI[a], SMALL_CHI[b]
    assert G.chromatic_number(G.cartesian(ga, gb)) == max(G.chromatic_number(ga), G.chromatic_number(gb))


@SETTINGS
@given(graphs(min_n=2), st.data())
def test_contraction_is_partial_homomorphism(g, data):
    labels = data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    blocks = [[v for v in range(g.n) if labels[v] == k] for k in range(4)]
    blocks = [b for b in blocks if b]
    q = G.contraction(g, blocks)
    for i, j in combinations(range(len(blocks)), 2):
        cross = any(g.has_edge(u, v) for u in blocks[i] for v in blocks[j])
        assert q.has_edge(i, j) == cross
    assert all(not q.has_edge(i, i) for i in range(q.n))


def _locally_two_coclique(g: BichromaticGraph) -> bool:
    return all(G.local_graph(g, v).n == 2 and G.local_graph(g, v).num_edges == 0 for v in range(g.n))


def test_connected_locally_2coclique_is_cycle_atlas():
    # every graph on at most 7 vertices
    hits = 0
    for h in nx.graph_atlas_g()[1:]:
        g = BichromaticGraph(h.number_of_nodes(), h.edges())
        if G.is_connected(g) and _locally_two_coclique(g):
            hits += 1
            assert is_isomorphic(g, G.cycle(g.n)) is not None
    assert hits == 4  # C4, C5, C6, C7


@SETTINGS
@given(st.integers(8, 10), st.randoms(use_true_random=False))
def test_connected_locally_2coclique_is_cycle_random(n, rnd):
    # random 2-regular graphs on 8..10 vertices: unions of cycles
    verts = list(range(n))
    rnd.shuffle(verts)
    cuts, i = [], 0
    while i < n:
        k = rnd.randint(4, 6) if n - i >= 8 else n - i
        cuts.append(verts[i:i + k])
        i += k
    edges = [(c[j], c[(j + 1) % len(c)]) for c in cuts for j in range(len(c))]
    g = BichromaticGraph(n, edges)
    if G.is_connected(g) and _locally_two_coclique(g):
        assert is_isomorphic(g, G.cycle(n)) is not None


@SETTINGS
@given(graphs(max_n=8))
def test_reduce_of_composition_with_k2(g):
    r = G.reduce(g)
    assert is_isomorphic(G.reduce(G.composition(r, G.complete(2))), r) is not None


# -- isomorphism -------------------------------------------------------------

@SETTINGS
@given(graphs(colored=True), st.randoms(use_true_random=False))
def test_relabeling_keeps_canonical_form(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.permuted(perm)
    assert canonical_form(h) == canonical_form(g)
    assert canonical_form(h, respect_colors=False) == canonical_form(g, respect_colors=False)


@SETTINGS
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_vf2(a, b):
    assert (is_isomorphic(a, b, respect_colors=False) is not None) == vf2_isomorphic(a, b, False)


@SETTINGS
@given(graphs(colored=True))
def test_aut_equals_aut_of_complement(g):
    a, b = automorphism_group(g), automorphism_group(G.complement(g))
    assert a.order() == b.order()
    assert all(p in b for p in a.generators)


@SETTINGS
@given(graphs(colored=True))
def test_orbit_sizes_divide_group_order(g):
    a = automorphism_group(g)
    orbs = orbits(g)
    assert sum(len(o) for o in orbs) == g.n
    for o in orbs:
        assert len(o) * stabilizer(a, o[0]).order() == a.order()


def test_aut_b5_equals_aut_d5():
    want = 2 ** math.comb(5, 2) * math.factorial(5)
    assert automorphism_group(weyl_graph("B5")).order() == want
    assert automorphism_group(weyl_graph("D5")).order() == want


# -- Weyl graphs -------------------------------------------------------------

CATALOG = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "D4", "D5",
           "E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("tag", CATALOG)
def test_weyl_graph_vertex_count(tag):
    assert weyl_graph(tag).n == len(build_root_system(tag)) // 2


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_bn_long_adjacency_law(n):
    rs = build_root_system(f"B{n}")
    g = weyl_graph(f"B{n}")
    # y_{i,j} for i < j is s_{e_i - e_j}; y_{j,i} is s_{e_i + e_j}
    name = {}
    for i, j in combinations(range(n), 2):
        for (a, b), sign in (((i, j), -1), ((j, i), 1)):
            v = [0] * n
            v[i], v[j] = 2, 2 * sign
            name[(a, b)] = g.labels.index("(" + ",".join(map(str, v)) + ")")
    for (i, j), (k, l) in permutations(name, 2):
        law = not ({i, j} & {k, l}) or (k, l) == (j, i)
        assert g.has_edge(name[(i, j)], name[(k, l)]) == law
    assert len(name) == len(rs.long_roots) // 2


@pytest.mark.parametrize("family,rng,start", [("B", range(2, 7), 3), ("D", range(4, 8), 5), ("A", range(2, 7), 4)])
def test_weyl_graph_connectivity(family, rng, start):
    for n in rng:
        assert G.is_connected(weyl_graph(f"{family}{n}")) == (n >= start)


def _f4_corpus():
    out = {name: named_graph(name) for name in ("g24a", "g24b", "g32a", "g32b")}
    out["W(F4)"] = weyl_graph("F4")
    for seed in range(3):
        out[f"k33/{seed}"] = inflate_k3(G.complete_bipartite(3, 3), seed)
        out[f"q3/{seed}"] = inflate_k3(G.hypercube(3), seed)
        out[f"k66/{seed}"] = inflate_k6(G.complete_bipartite(6, 6), seed)
    return out


F4_CORPUS = _f4_corpus()


@pytest.mark.parametrize("name", sorted(F4_CORPUS))
def test_f4_structure_on_corpus(name):
    g = F4_CORPUS[name]
    assert is_locally_like_f4(g)
    s = f4_structure(g)
    assert s.balanced and s.order_ok and s.components_are_4cliques
    assert set(s.long_neighbors_per_short_clique) == {12}


def _locally_coclique(g: BichromaticGraph, k: int) -> bool:
    return all(G.local_graph(g, v).n == k and G.local_graph(g, v).num_edges == 0 for v in range(g.n))


@pytest.mark.parametrize("name", sorted(F4_CORPUS))
def test_mu_equivalences_on_corpus(name):
    g = F4_CORPUS[name]
    p = mu_profile(g)
    q = contract_four_cliques(g)
    assert (p.mu_s == 1 and p.mu_l == 1) == _locally_coclique(q, 3)
    assert (set(p.mu_sum_values) == {1}) == _locally_coclique(q, 6)
    if p.mu == 3:
        assert p.mu_s == p.mu_l == 1


# -- Coxeter presentations -------------------------------------------------

CLASSICAL = {f"A{n}": math.factorial(n + 1) for n in range(1, 5)}
CLASSICAL.update({f"B{n}": 2 ** n * math.factorial(n) for n in range(2, 5)})
CLASSICAL.update({"D4": 2 ** 3 * 24, "A5": 720, "D5": 2 ** 4 * 120, "F4": 1152, "G2": 12, "H3": 120})
CLASSICAL.update({f"I2({m})": 2 * m for m in range(3, 9)})


@pytest.mark.parametrize("tag", sorted(CLASSICAL))
def test_coset_count_is_classical_order(tag):
    assert coset_enumerate(coxeter_presentation(coxeter_matrix(tag))).index == CLASSICAL[tag]


@pytest.mark.parametrize("tag", ["A3", "B3", "F4", "H3", "I2(7)", "D4"])
def test_coxeter_images_have_exact_orders(tag):
    cm = coxeter_matrix(tag)
    gens = coxeter_group(cm).generators
    for i in range(cm.rank):
        assert gens[i].is_involution()
        for j in range(i + 1, cm.rank):
            assert (gens[i] * gens[j]).order() == cm.m[i][j]


@pytest.mark.parametrize("m", range(3, 9))
def test_dihedral_reflection_graph(m):
    g = reflection_graph(coxeter_matrix(f"I2({m})"))
    want = G.coclique(m) if m % 2 else G.disjoint_union(*[G.complete(2)] * (m // 2))
    assert is_isomorphic(g, want, respect_colors=False) is not None


# -- recognition ------------------------------------------------------------

def _reflection_classes_graph(tag: str) -> BichromaticGraph:
    rs = build_root_system(tag)
    w = weyl_group(rs)
    reps, seen, verts, colors = [], set(), [], []
    for i in root_pair_representatives(rs):
        p = reflection_perm(rs, rs.roots[i])
        if p in seen:
            continue
        cls = conjugacy_class(w, p)
        seen.update(cls)
        verts.extend(cls)
        colors.extend([rs.roots[i].length_class[0]] * len(cls))
    edges = [(a, b) for a, b in combinations(range(len(verts)), 2) if commutes(verts[a], verts[b])]
    return BichromaticGraph(len(verts), edges, None if rs.is_simply_laced else colors)


@pytest.mark.parametrize("tag", ["B3", "C3", "F4", "A4"])
def test_class_commuting_graph_is_weyl_graph(tag):
    assert is_isomorphic(_reflection_classes_graph(tag), weyl_graph(tag)) is not None


def _b3_involutions():
    w = weyl_group(build_root_system("B3"))
    return [e for e in w.elements() if e.is_involution()]


B3_INVOLUTIONS = _b3_involutions()


def test_involution_product_laws_in_b3():
    for a, b in combinations(B3_INVOLUTIONS, 2):
        k = (a * b).order()
        assert (k in (1, 2)) == commutes(a, b)
        assert (k in (1, 3)) == ((a ** b) == (b ** a))
        assert (k in (1, 2, 4)) == commutes(a, a ** b)


def test_short_long_conjugation_in_b3():
    rs = build_root_system("B3")
    refl = {i: reflection_perm(rs, rs.roots[i]) for i in root_pair_representatives(rs)}
    short = [p for i, p in refl.items() if rs.roots[i].length_class == "short"]
    long_ = [p for i, p in refl.items() if rs.roots[i].length_class == "long"]
    for x in short:
        for y in long_:
            if commutes(x, y):
                continue
            partners = [z for z in long_ if z != y and commutes(z, y)]
            assert partners == [y ** x]
            others = [z for z in short if z != x and not commutes(z, y)]
            assert others == [x ** y]


def test_kernel_equals_center():
    assert seeded_graph_data(weyl_f4_input(), colored=True).kernel_order == 2
    assert seeded_graph_data(symmetric_input(9)).kernel_order == 1
