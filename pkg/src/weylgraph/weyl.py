"""Weyl graphs, the exceptional 24/32-vertex graphs, and graphs locally like W(F4).

A graph is locally like W(F4) when it is bichromatic, every short local
graph is isomorphic to W(B3) and every long local graph to W(C3).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import _tables
from .errors import DomainError
from .graph import (LONG, SHORT, BichromaticGraph, _bits, bipartition, components,
                    contraction, induced_subgraph, is_clique, is_connected, local_graph)
from .iso import canonical_form, is_isomorphic
from .rootsys import build_root_system, inner_product, root_pair_representatives

NAMED = ("g24a", "g24b", "g32a", "g32b")


# --------------------------------------------------------------------------
# constructions


@lru_cache(maxsize=None)
def weyl_graph(type_tag: str) -> BichromaticGraph:
    """Commuting graph on reflections: roots mod sign, adjacent when orthogonal.

    Non-simply-laced types are colored by root length; simply laced types are
    left uncolored.
    """
    rs = build_root_system(type_tag)
    reps = root_pair_representatives(rs)
    roots = [rs.roots[i] for i in reps]
    edges = [(a, b) for a, b in combinations(range(len(roots)), 2)
             if inner_product(roots[a], roots[b]) == 0]
    if rs.is_simply_laced:
        colors = None
    else:
        colors = [SHORT if r.length_class == "short" else LONG for r in roots]
    labels = ["(" + ",".join(map(str, r.coords)) + ")" for r in roots]
    return BichromaticGraph(len(roots), edges, colors, labels)


def _from_table(table: dict[str, list[str]], short_prefixes: str) -> BichromaticGraph:
    names: list[str] = []
    for key, vals in table.items():
        for v in [key, *vals]:
            if v not in names:
                names.append(v)
    index = {v: i for i, v in enumerate(names)}
    edges = set()
    for key, vals in table.items():
        for v in vals:
            a, b = sorted((index[key], index[v]))
            edges.add((a, b))
    colors = [SHORT if v[0] in short_prefixes else LONG for v in names]
    return BichromaticGraph(len(names), sorted(edges), colors, names)


@lru_cache(maxsize=None)
def named_graph(which: str) -> BichromaticGraph:
    """One of g24a, g24b, g32a, g32b from the embedded adjacency tables.

    Colors: x (and z) vertices short, y (and w) vertices long.
    """
    key = which.lower()
    if key not in NAMED:
        raise DomainError(f"unknown named graph {which!r}; expected one of {', '.join(NAMED)}")
    return _from_table(getattr(_tables, key.upper()), "xz")


# --------------------------------------------------------------------------
# local structure


@dataclass(frozen=True)
class LocalProfile:
    is_homogeneous: bool
    delta_s: bytes | None = None
    delta_l: bytes | None = None
    delta: bytes | None = None
    forms: dict = field(default_factory=dict, compare=False)


def local_profile(g: BichromaticGraph) -> LocalProfile:
    """Canonical forms of the local graphs grouped by vertex color."""
    if g.n == 0:
        raise DomainError("local profile of the empty graph")
    forms: dict = {}
    for v in range(g.n):
        forms.setdefault(g.colors[v], set()).add(canonical_form(local_graph(g, v)))
    homogeneous = all(len(f) == 1 for f in forms.values())

    def one(c):
        f = forms.get(c)
        return next(iter(f)) if f and len(f) == 1 else None

    return LocalProfile(homogeneous, one(SHORT), one(LONG), one(None), forms)


@lru_cache(maxsize=None)
def _f4_local_forms() -> dict[str, bytes]:
    return {SHORT: canonical_form(weyl_graph("B3")), LONG: canonical_form(weyl_graph("C3"))}


@dataclass(frozen=True)
class LocalCheck:
    ok: bool
    vertex: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_locally_like_f4(g: BichromaticGraph) -> LocalCheck:
    """Short local graphs ≅ W(B3) and long local graphs ≅ W(C3)."""
    if not g.is_colored:
        raise DomainError("locally-like-W(F4) check needs a fully colored graph")
    want = _f4_local_forms()
    for v in range(g.n):
        c = g.colors[v]
        kind = "short" if c == SHORT else "long"
        target = "W(B3)" if c == SHORT else "W(C3)"
        if g.degree(v) != 9:
            return LocalCheck(False, v, f"{kind} vertex {g.labels[v]} has degree {g.degree(v)}, expected 9")
        if canonical_form(local_graph(g, v)) != want[c]:
            return LocalCheck(False, v, f"local graph at {kind} vertex {g.labels[v]} is not {target}")
    return LocalCheck(True)


def _require_f4(g: BichromaticGraph) -> None:
    chk = is_locally_like_f4(g)
    if not chk:
        raise DomainError(f"graph is not locally like W(F4): {chk.reason}")


def distance_two_pairs(g: BichromaticGraph) -> list[tuple[int, int]]:
    out = []
    for x in range(g.n):
        reach = 0
        for w in _bits(g.adj[x]):
            reach |= g.adj[w]
        reach &= ~g.adj[x] & ~(1 << x)
        out.extend((x, y) for y in _bits(reach) if y > x)
    return out


@dataclass(frozen=True)
class MuProfile:
    """Common-neighbor parameters over distance-2 pairs.

    ``mu_values`` covers same-type pairs, ``mu_s_values``/``mu_l_values``
    mixed pairs; each maps value -> number of pairs.
    """

    mu_values: dict
    mu_s_values: dict
    mu_l_values: dict
    mu_sum_values: dict

    @staticmethod
    def _const(d: dict):
        return next(iter(d)) if len(d) == 1 else None

    @property
    def mu(self):
        return self._const(self.mu_values)

    @property
    def mu_s(self):
        return self._const(self.mu_s_values)

    @property
    def mu_l(self):
        return self._const(self.mu_l_values)

    @property
    def mu_constant(self) -> bool:
        return len(self.mu_values) == 1

    @property
    def mu_s_constant(self) -> bool:
        return len(self.mu_s_values) == 1

    @property
    def mu_l_constant(self) -> bool:
        return len(self.mu_l_values) == 1

    def to_dict(self) -> dict:
        return {
            "mu": {str(k): v for k, v in sorted(self.mu_values.items())},
            "mu_s": {str(k): v for k, v in sorted(self.mu_s_values.items())},
            "mu_l": {str(k): v for k, v in sorted(self.mu_l_values.items())},
        }


def mu_profile(g: BichromaticGraph, check: bool = True) -> MuProfile:
    if check:
        _require_f4(g)
    mu, mu_s, mu_l, mu_sum = Counter(), Counter(), Counter(), Counter()
    for x, y in distance_two_pairs(g):
        common = list(_bits(g.adj[x] & g.adj[y]))
        if g.colors[x] == g.colors[y]:
            other = LONG if g.colors[x] == SHORT else SHORT
            if any(g.colors[z] != other for z in common) or not _is_coclique(g, common):
                raise AssertionError(f"common neighbors of {x}, {y} are not an opposite-type coclique")
            m = len(common)
            if m not in (1, 2, 3):
                raise AssertionError(f"mu({x}, {y}) = {m} out of range")
            mu[m] += 1
        else:
            ns = nl = 0
            for comp in components(g, common):
                cs = {g.colors[z] for z in comp}
                if len(comp) != 2 or len(cs) != 1:
                    raise AssertionError(f"common neighbors of {x}, {y} are not monochromatic pairs")
                if cs.pop() == SHORT:
                    ns += 1
                else:
                    nl += 1
            if ns > 1 or nl > 1:
                raise AssertionError(f"mixed parameters ({ns}, {nl}) out of range at {x}, {y}")
            mu_s[ns] += 1
            mu_l[nl] += 1
            mu_sum[ns + nl] += 1
    return MuProfile(dict(sorted(mu.items())), dict(sorted(mu_s.items())),
                     dict(sorted(mu_l.items())), dict(sorted(mu_sum.items())))


def _is_coclique(g: BichromaticGraph, vs: list[int]) -> bool:
    mask = sum(1 << v for v in vs)
    return all(not g.adj[v] & mask for v in vs)


def monochromatic_components(g: BichromaticGraph) -> dict[str, list[list[int]]]:
    return {c: components(g, g.vertices_of_color(c)) for c in (SHORT, LONG)}


def four_clique_partition(g: BichromaticGraph, check: bool = True) -> list[list[int]]:
    """Monochromatic components, each a 4-clique, ordered by least vertex."""
    if check:
        _require_f4(g)
    blocks = []
    for comps in monochromatic_components(g).values():
        for comp in comps:
            if len(comp) != 4 or not is_clique(g, comp):
                raise DomainError(f"monochromatic component {comp} is not a 4-clique")
            blocks.append(comp)
    return sorted(blocks)


def is_tightly_connected(g: BichromaticGraph) -> bool:
    """Every long vertex meets every short component and vice versa."""
    if not g.is_colored:
        raise DomainError("tight connectivity needs a fully colored graph")
    comps = monochromatic_components(g)
    masks = {c: [sum(1 << v for v in comp) for comp in comps[c]] for c in comps}
    for v in range(g.n):
        other = LONG if g.colors[v] == SHORT else SHORT
        if any(not g.adj[v] & m for m in masks[other]):
            return False
    return True


@dataclass(frozen=True)
class F4Structure:
    """Counting invariants every graph locally like W(F4) satisfies."""

    n_short: int
    n_long: int
    components_are_4cliques: bool
    long_neighbors_per_short_clique: tuple[int, ...]

    @property
    def balanced(self) -> bool:
        return self.n_short == self.n_long

    @property
    def order_ok(self) -> bool:
        n = self.n_short + self.n_long
        return n % 8 == 0 and n >= 24

    @property
    def ok(self) -> bool:
        return (self.balanced and self.order_ok and self.components_are_4cliques
                and set(self.long_neighbors_per_short_clique) == {12})


def f4_structure(g: BichromaticGraph) -> F4Structure:
    comps = monochromatic_components(g)
    cliques = all(len(c) == 4 and is_clique(g, c) for cs in comps.values() for c in cs)
    counts = []
    for comp in comps[SHORT]:
        reach = 0
        for v in comp:
            reach |= g.adj[v]
        counts.append(sum(1 for w in _bits(reach) if g.colors[w] == LONG))
    return F4Structure(len(g.vertices_of_color(SHORT)), len(g.vertices_of_color(LONG)),
                       cliques, tuple(counts))


def contract_four_cliques(g: BichromaticGraph) -> BichromaticGraph:
    return contraction(g, four_clique_partition(g))


def identify_named(g: BichromaticGraph, candidates=NAMED) -> str | None:
    """Name of the exceptional graph isomorphic to g, if any."""
    for name in candidates:
        h = named_graph(name)
        if h.n == g.n and is_isomorphic(g, h) is not None:
            return name
    return None


# --------------------------------------------------------------------------
# inflation of bipartite graphs


_PAIRS6 = [frozenset(p) for p in combinations((1, 2, 3, 4), 2)]
_PAIRS3 = [frozenset(p) for p in ((1, 2), (1, 3), (1, 4))]


def _bipartite_colors(lam: BichromaticGraph) -> list[str]:
    side = bipartition(lam)
    if side is None:
        raise DomainError("input graph is not bipartite")
    if lam.is_colored:
        for u, v in lam.edges():
            if lam.colors[u] == lam.colors[v]:
                raise DomainError(f"edge ({lam.labels[u]}, {lam.labels[v]}) joins vertices of one color")
        return list(lam.colors)
    if any(c is not None for c in lam.colors):
        raise DomainError("input graph is partially colored")
    return [SHORT if s == 0 else LONG for s in side]


def _inflate(lam: BichromaticGraph, seed: int, pairs: list[frozenset], doubled: bool) -> BichromaticGraph:
    k = len(pairs)
    if lam.n == 0 or not is_connected(lam):
        raise DomainError("input graph must be nonempty and connected")
    colors = _bipartite_colors(lam)
    for v in range(lam.n):
        nb = lam.neighbors(v)
        if len(nb) != k or not _is_coclique(lam, nb):
            raise DomainError(f"vertex {lam.labels[v]} is not locally a coclique on {k} vertices")
    offsets = np.random.default_rng(seed).integers(0, k, size=lam.n)
    a: dict[tuple[int, int], frozenset] = {}
    for x in range(lam.n):
        for pos, y in enumerate(lam.neighbors(x)):
            a[(x, y)] = pairs[(pos + int(offsets[x])) % k]
    full = frozenset((1, 2, 3, 4))
    edges = []
    for x in range(lam.n):
        for i, j in combinations(range(4), 2):
            edges.append((4 * x + i, 4 * x + j))
    for x, y in lam.edges():
        links = [(a[(x, y)], a[(y, x)])]
        if doubled:
            links.append((full - a[(x, y)], full - a[(y, x)]))
        for ax, ay in links:
            for i in sorted(ax):
                for j in sorted(ay):
                    edges.append((4 * x + i - 1, 4 * y + j - 1))
    out_colors = [colors[x] for x in range(lam.n) for _ in range(4)]
    labels = [f"{lam.labels[x]}_{i}" for x in range(lam.n) for i in range(1, 5)]
    return BichromaticGraph(4 * lam.n, edges, out_colors, labels)


def inflate_k6(lam: BichromaticGraph, seed: int = 0) -> BichromaticGraph:
    """Replace each vertex of a bipartite, locally 6-coclique graph by a 4-clique.

    x_i ~ y_j iff x ~ y and (i, j) in a(x, y) x a(y, x), where a(x, .) is a
    seed-rotated bijection from the neighbors of x onto the 2-subsets of [4].
    """
    return _inflate(lam, seed, _PAIRS6, doubled=False)


def inflate_k3(lam: BichromaticGraph, seed: int = 0) -> BichromaticGraph:
    """As inflate_k6 for locally 3-coclique graphs, also joining complementary pairs."""
    return _inflate(lam, seed, _PAIRS3, doubled=True)
