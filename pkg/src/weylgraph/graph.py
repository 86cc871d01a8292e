"""Bichromatic finite simple graphs and the graph algebra built on them.

Vertices are ``0..n-1``; adjacency rows are Python integers used as bit
sets.  Each vertex carries an optional color, ``"s"`` (short), ``"l"``
(long) or ``None`` (uncolored).
"""

from __future__ import annotations

import json
import math
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ResourceError

SHORT = "s"
LONG = "l"
COLORS = (SHORT, LONG, None)

CHROMATIC_LIMIT = 64
INDEPENDENCE_LIMIT = 30


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class BichromaticGraph:
    """Immutable simple graph with optional short/long vertex colors."""

    __slots__ = ("n", "adj", "colors", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 colors: Sequence[str | None] | None = None,
                 labels: Sequence[str] | None = None):
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise DomainError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(n, adj, colors, labels)

    def _init(self, n, adj, colors, labels) -> None:
        if colors is None:
            colors = (None,) * n
        colors = tuple(colors)
        if len(colors) != n:
            raise DomainError(f"{len(colors)} colors for {n} vertices")
        for c in colors:
            if c not in COLORS:
                raise DomainError(f"invalid color {c!r}")
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise DomainError(f"{len(labels)} labels for {n} vertices")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, adj: Sequence[int], colors=None, labels=None) -> "BichromaticGraph":
        """Build from bit-set rows; checks symmetry and irreflexivity."""
        n = len(adj)
        for u in range(n):
            if adj[u] >> u & 1:
                raise DomainError(f"self-loop at {u}")
            if adj[u] >> n:
                raise DomainError(f"row {u} mentions vertices beyond {n}")
            for v in _bits(adj[u]):
                if not adj[v] >> u & 1:
                    raise DomainError(f"adjacency not symmetric at ({u}, {v})")
        g = object.__new__(cls)
        g._init(n, list(adj), colors, labels)
        return g

    def __setattr__(self, key, value):
        raise AttributeError("BichromaticGraph is immutable")

    def __repr__(self) -> str:
        kinds = ""
        if self.is_colored:
            ns = self.colors.count(SHORT)
            kinds = f", short={ns}, long={self.n - ns}"
        return f"BichromaticGraph(n={self.n}, edges={self.num_edges}{kinds})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, BichromaticGraph) and self.adj == other.adj
                and self.colors == other.colors)

    def __hash__(self) -> int:
        return hash((self.adj, self.colors))

    def __len__(self) -> int:
        return self.n

    # -- queries --------------------------------------------------------

    @property
    def is_colored(self) -> bool:
        return self.n > 0 and all(c is not None for c in self.colors)

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertices_of_color(self, color: str | None) -> list[int]:
        return [v for v in range(self.n) if self.colors[v] == color]

    def vertex_by_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"no vertex labelled {label!r}") from None

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise DomainError(f"vertex {v!r} not in graph on {self.n} vertices")

    # -- color handling --------------------------------------------------

    def uncolored(self) -> "BichromaticGraph":
        return BichromaticGraph.from_rows(self.adj, None, self.labels)

    def with_colors(self, colors: Sequence[str | None]) -> "BichromaticGraph":
        return BichromaticGraph.from_rows(self.adj, colors, self.labels)

    def swapped_colors(self) -> "BichromaticGraph":
        swap = {SHORT: LONG, LONG: SHORT, None: None}
        return self.with_colors([swap[c] for c in self.colors])

    def relabeled(self, labels: Sequence[str]) -> "BichromaticGraph":
        return BichromaticGraph.from_rows(self.adj, self.colors, labels)

    def permuted(self, perm: Sequence[int]) -> "BichromaticGraph":
        """Graph with vertex v renamed perm[v]."""
        n = self.n
        if sorted(perm) != list(range(n)):
            raise DomainError("not a permutation of the vertices")
        adj = [0] * n
        colors = [None] * n
        labels = [""] * n
        for v in range(n):
            row = 0
            for w in _bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
            colors[perm[v]] = self.colors[v]
            labels[perm[v]] = self.labels[v]
        return BichromaticGraph.from_rows(adj, colors, labels)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "colors": list(self.colors),
            "labels": list(self.labels),
            "edges": [list(e) for e in self.edges()],
        })

    @classmethod
    def from_json(cls, text: str) -> "BichromaticGraph":
        data = json.loads(text)
        n = data["n"]
        return cls(n, [tuple(e) for e in data.get("edges", [])],
                   data.get("colors"), data.get("labels"))

    def to_graph6(self) -> str:
        import networkx as nx

        return nx.to_graph6_bytes(self.to_networkx(), header=False).decode().strip()

    @classmethod
    def from_graph6(cls, text: str) -> "BichromaticGraph":
        import networkx as nx

        h = nx.from_graph6_bytes(text.strip().encode())
        return cls(h.number_of_nodes(), h.edges())

    def to_dot(self, name: str = "G") -> str:
        """DOT source: short vertices as open circles, long as filled dots."""
        lines = [f"graph {name} {{", "  node [shape=circle, label=\"\", width=0.2];"]
        for v in range(self.n):
            c = self.colors[v]
            style = {LONG: "style=filled, fillcolor=black",
                     SHORT: "style=solid",
                     None: "style=solid"}[c]
            lines.append(f'  {v} [{style}, xlabel="{self.labels[v]}"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        for v in range(self.n):
            h.add_node(v, color=self.colors[v], label=self.labels[v])
        h.add_edges_from(self.edges())
        return h


Graph = BichromaticGraph


# --------------------------------------------------------------------------
# small named graphs


def complete(n: int, color: str | None = None) -> BichromaticGraph:
    return BichromaticGraph(n, combinations(range(n), 2), [color] * n)


def coclique(n: int, color: str | None = None) -> BichromaticGraph:
    """The edgeless graph on n vertices."""
    return BichromaticGraph(n, (), [color] * n)


def cycle(n: int) -> BichromaticGraph:
    if n < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return BichromaticGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> BichromaticGraph:
    return BichromaticGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(m: int, n: int, colors: tuple | None = None) -> BichromaticGraph:
    g = join(coclique(m), coclique(n))
    if colors is not None:
        g = g.with_colors([colors[0]] * m + [colors[1]] * n)
    return g


def hypercube(d: int) -> BichromaticGraph:
    n = 1 << d
    return BichromaticGraph(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d)
                                if v < v ^ (1 << i)],
                            labels=[format(v, f"0{d}b") for v in range(n)])


def kneser(n: int, k: int) -> BichromaticGraph:
    """K(n, k): k-subsets of [n], adjacent when disjoint; lexicographic order."""
    if not 1 <= k <= n:
        raise DomainError(f"kneser({n}, {k}) needs 1 <= k <= n")
    subsets = list(combinations(range(1, n + 1), k))
    masks = [sum(1 << i for i in s) for s in subsets]
    edges = [(a, b) for a, b in combinations(range(len(subsets)), 2)
             if not masks[a] & masks[b]]
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    return BichromaticGraph(len(subsets), edges, labels=labels)


def _symplectic(x: int, y: int, dim: int) -> int:
    # coordinates paired as (0,1), (2,3), ...
    s = 0
    for k in range(0, dim, 2):
        s ^= ((x >> k) & (y >> (k + 1)) ^ (x >> (k + 1)) & (y >> k)) & 1
    return s


def _quadratic(x: int, dim: int, sign: str) -> int:
    q = 0
    for k in range(0, dim, 2):
        q ^= (x >> k) & (x >> (k + 1)) & 1
    if sign == "-":
        q ^= (x & 1) ^ ((x >> 1) & 1)
    return q


def _vector_label(x: int, dim: int) -> str:
    return "".join(str(x >> k & 1) for k in range(dim))


def _orthogonality_graph(vectors: list[int], dim: int) -> BichromaticGraph:
    edges = [(a, b) for a, b in combinations(range(len(vectors)), 2)
             if _symplectic(vectors[a], vectors[b], dim) == 0]
    return BichromaticGraph(len(vectors), edges,
                            labels=[_vector_label(v, dim) for v in vectors])


def sp2(two_n: int) -> BichromaticGraph:
    """Symplectic graph: nonzero vectors of F_2^{2n}, adjacent when B(x, y) = 0."""
    if two_n < 2 or two_n % 2:
        raise DomainError(f"sp2 needs an even dimension >= 2, got {two_n}")
    return _orthogonality_graph(list(range(1, 1 << two_n)), two_n)


def nsp(two_n: int, sign: str) -> BichromaticGraph:
    """Induced subgraph of sp2 on the vectors with Q^sign(x) = 1."""
    sign = {"+": "+", "-": "-", "+1": "+", "-1": "-", 1: "+", -1: "-"}.get(sign)
    if sign is None:
        raise DomainError("sign must be '+' or '-'")
    if two_n < 4 or two_n % 2:
        raise DomainError(f"nsp needs an even dimension >= 4, got {two_n}")
    vecs = [x for x in range(1, 1 << two_n) if _quadratic(x, two_n, sign) == 1]
    return _orthogonality_graph(vecs, two_n)


# --------------------------------------------------------------------------
# graph algebra


def disjoint_union(*graphs: BichromaticGraph) -> BichromaticGraph:
    adj: list[int] = []
    colors: list = []
    labels: list[str] = []
    off = 0
    for g in graphs:
        adj.extend(r << off for r in g.adj)
        colors.extend(g.colors)
        labels.extend(g.labels)
        off += g.n
    return BichromaticGraph.from_rows(adj, colors, labels)


def join(a: BichromaticGraph, b: BichromaticGraph) -> BichromaticGraph:
    """a + b: disjoint union plus every edge between a and b."""
    mask_a = (1 << a.n) - 1
    mask_b = ((1 << b.n) - 1) << a.n
    adj = [r | mask_b for r in a.adj] + [(r << a.n) | mask_a for r in b.adj]
    return BichromaticGraph.from_rows(adj, a.colors + b.colors, a.labels + b.labels)


def cartesian(a: BichromaticGraph, b: BichromaticGraph) -> BichromaticGraph:
    """a □ b on pairs (x, y) indexed x * |b| + y; colors are dropped."""
    nb = b.n
    edges = []
    for x in range(a.n):
        for y in range(nb):
            v = x * nb + y
            for y2 in _bits(b.adj[y]):
                if y2 > y:
                    edges.append((v, x * nb + y2))
            for x2 in _bits(a.adj[x]):
                if x2 > x:
                    edges.append((v, x2 * nb + y))
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    return BichromaticGraph(a.n * nb, edges, labels=labels)


def composition(a: BichromaticGraph, b: BichromaticGraph) -> BichromaticGraph:
    """a[b]: (x1,y1) ~ (x2,y2) iff x1 ~ x2, or x1 = x2 and y1 ~ y2.

    Each vertex keeps the color of its a-coordinate.
    """
    nb = b.n
    full = (1 << nb) - 1
    adj = []
    for x in range(a.n):
        outer = 0
        for x2 in _bits(a.adj[x]):
            outer |= full << (x2 * nb)
        for y in range(nb):
            adj.append(outer | (b.adj[y] << (x * nb)))
    colors = [a.colors[x] for x in range(a.n) for _ in range(nb)]
    labels = [f"({la},{lb})" for la in a.labels for lb in b.labels]
    return BichromaticGraph.from_rows(adj, colors, labels)


def complement(g: BichromaticGraph) -> BichromaticGraph:
    full = (1 << g.n) - 1
    return BichromaticGraph.from_rows([full & ~r & ~(1 << v) for v, r in enumerate(g.adj)],
                                      g.colors, g.labels)


def induced_subgraph(g: BichromaticGraph, vertices: Iterable[int]) -> BichromaticGraph:
    """Induced subgraph; new vertex i is the i-th of ``vertices``."""
    vs = list(vertices)
    for v in vs:
        g._check_vertex(v)
    if len(set(vs)) != len(vs):
        raise DomainError("repeated vertex in induced_subgraph")
    pos = {v: i for i, v in enumerate(vs)}
    mask = sum(1 << v for v in vs)
    adj = []
    for v in vs:
        row = 0
        for w in _bits(g.adj[v] & mask):
            row |= 1 << pos[w]
        adj.append(row)
    return BichromaticGraph.from_rows(adj, [g.colors[v] for v in vs], [g.labels[v] for v in vs])


def local_graph(g: BichromaticGraph, v: int) -> BichromaticGraph:
    """Induced subgraph on the neighbors of v."""
    g._check_vertex(v)
    return induced_subgraph(g, g.neighbors(v))


def contraction(g: BichromaticGraph, blocks: Sequence[Iterable[int]]) -> BichromaticGraph:
    """Quotient Γ/Π: blocks adjacent when some cross pair is adjacent.

    Blocks must partition the vertex set.  If g is colored every block must be
    monochromatic and the block inherits that color.
    """
    blocks = [sorted(b) for b in blocks]
    owner = [-1] * g.n
    for i, b in enumerate(blocks):
        if not b:
            raise DomainError("empty block in partition")
        for v in b:
            g._check_vertex(v)
            if owner[v] != -1:
                raise DomainError(f"vertex {v} in two blocks")
            owner[v] = i
    if -1 in owner:
        raise DomainError(f"vertex {owner.index(-1)} not covered by the partition")
    colors = []
    for b in blocks:
        cs = {g.colors[v] for v in b}
        if len(cs) > 1:
            raise DomainError(f"block {b} is not monochromatic")
        colors.append(cs.pop())
    adj = [0] * len(blocks)
    for i, b in enumerate(blocks):
        row = 0
        for v in b:
            row |= g.adj[v]
        for w in _bits(row):
            j = owner[w]
            if j != i:
                adj[i] |= 1 << j
    labels = ["{" + ",".join(g.labels[v] for v in b) + "}" if len(b) > 1 else g.labels[b[0]]
              for b in blocks]
    return BichromaticGraph.from_rows(adj, colors, labels)


def reduced_partition(g: BichromaticGraph) -> list[list[int]]:
    """Classes of equal closed neighborhood and equal color, by least member."""
    classes: dict[tuple, list[int]] = {}
    for v in range(g.n):
        key = (g.adj[v] | (1 << v), g.colors[v])
        classes.setdefault(key, []).append(v)
    return sorted(classes.values())


def reduce(g: BichromaticGraph) -> BichromaticGraph:
    """The reduced graph Γ*."""
    return contraction(g, reduced_partition(g))


# --------------------------------------------------------------------------
# connectivity and distances


def bfs_distances(g: BichromaticGraph, source: int, within: int | None = None) -> list[float]:
    g._check_vertex(source)
    allowed = (1 << g.n) - 1 if within is None else within
    dist = [math.inf] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def distance(g: BichromaticGraph, u: int, v: int) -> float:
    g._check_vertex(v)
    return bfs_distances(g, u)[v]


def components(g: BichromaticGraph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (of the subgraph induced on ``within``), by least vertex."""
    allowed = (1 << g.n) - 1 if within is None else sum(1 << v for v in within)
    left = allowed
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= allowed & ~comp
            comp |= nxt
            frontier = nxt
        out.append(list(_bits(comp)))
        left &= ~comp
    return out


def is_connected(g: BichromaticGraph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def diameter(g: BichromaticGraph) -> float:
    return max((max(bfs_distances(g, v)) for v in range(g.n)), default=0)


def is_bipartite(g: BichromaticGraph) -> bool:
    return bipartition(g) is not None


def bipartition(g: BichromaticGraph) -> list[int] | None:
    """Side (0/1) of each vertex with vertex 0 of every component on side 0."""
    side = [-1] * g.n
    for comp in components(g):
        side[comp[0]] = 0
        queue = deque([comp[0]])
        while queue:
            v = queue.popleft()
            for w in _bits(g.adj[v]):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return side


def is_regular(g: BichromaticGraph) -> bool:
    return len(set(g.degrees())) <= 1


def is_clique(g: BichromaticGraph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    mask = sum(1 << v for v in vs)
    return all((g.adj[v] | (1 << v)) & mask == mask for v in vs)


def count_triangles(g: BichromaticGraph) -> int:
    t = 0
    for u, v in g.edges():
        t += popcount(g.adj[u] & g.adj[v])
    return t // 3


# --------------------------------------------------------------------------
# exact colouring and independence


def _k_colorable(g: BichromaticGraph, k: int) -> bool:
    n = g.n
    color = [-1] * n
    # DSATUR-style: always branch on the vertex with most distinct neighbor colors
    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] != -1:
                continue
            sat = len({color[w] for w in _bits(g.adj[v]) if color[w] != -1})
            cand = (sat, popcount(g.adj[v]))
            if key is None or cand > key:
                best, key = v, cand
        return best

    def solve(done: int) -> bool:
        if done == n:
            return True
        v = pick()
        used = {color[w] for w in _bits(g.adj[v]) if color[w] != -1}
        top = max(color) + 1
        for c in range(min(k, top + 1)):
            if c in used:
                continue
            color[v] = c
            if solve(done + 1):
                return True
            color[v] = -1
        return False

    return solve(0)


def chromatic_number(g: BichromaticGraph) -> int:
    if g.n > CHROMATIC_LIMIT:
        raise ResourceError(f"exact chromatic number limited to {CHROMATIC_LIMIT} vertices")
    if g.n == 0:
        return 0
    k = 1 if g.num_edges == 0 else 2
    while not _k_colorable(g, k):
        k += 1
    return k


def maximum_independent_sets(g: BichromaticGraph) -> list[list[int]]:
    """All independent sets of maximum size (exhaustive, sorted)."""
    if g.n > INDEPENDENCE_LIMIT:
        raise ResourceError(f"independent-set enumeration limited to {INDEPENDENCE_LIMIT} vertices")
    if g.n == 0:
        return [[]]
    comp = complement(g)
    best: list[int] = []
    found: list[int] = []

    # Bron-Kerbosch with pivoting on the complement: maximal cliques there
    # are maximal independent sets here.
    def bk(r: int, p: int, x: int) -> None:
        nonlocal best, found
        if popcount(r) + popcount(p) < (popcount(best[0]) if best else 0):
            return
        if not p and not x:
            size = popcount(r)
            cur = popcount(best[0]) if best else -1
            if size > cur:
                best = [r]
            elif size == cur:
                best.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: popcount(p & comp.adj[u]))
        for v in list(_bits(p & ~comp.adj[pivot])):
            bk(r | (1 << v), p & comp.adj[v], x & comp.adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << g.n) - 1, 0)
    return sorted(list(_bits(m)) for m in best)


def independence_number(g: BichromaticGraph) -> int:
    return len(maximum_independent_sets(g)[0])
