"""Color-respecting canonical labeling, isomorphism and automorphism groups.

The search is individualization-refinement: the initial ordered partition
is given by the vertex colors, every node is refined to an equitable
partition, and the first smallest non-singleton cell is individualized.
Leaves are compared by the adjacency matrix they induce; the largest such
certificate is the canonical form.  Automorphisms are harvested whenever two
leaves give the same certificate and are used both to prune the tree and as
generators of the automorphism group.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError, ResourceError
from .graph import BichromaticGraph, _bits, local_graph
from .permgroup import Perm, PermGroup

MAX_VERTICES = 512
NODE_BUDGET = 2_000_000

_COLOR_RANK = {"s": 0, "l": 1, None: 2}
_COLOR_BYTE = {"s": b"s", "l": b"l", None: b"-"}


class Coloring:
    """Ordered partition of the vertices; cells are identified by start position."""

    __slots__ = ("cells", "cell_of")

    def __init__(self, cells: Sequence[Sequence[int]]):
        self.cells: dict[int, list[int]] = {}
        self.cell_of: dict[int, int] = {}
        pos = 0
        for c in cells:
            c = list(c)
            if not c:
                continue
            self.cells[pos] = c
            for v in c:
                if v in self.cell_of:
                    raise DomainError(f"vertex {v} in two cells")
                self.cell_of[v] = pos
            pos += len(c)

    def copy(self) -> "Coloring":
        new = object.__new__(Coloring)
        new.cells = {s: list(c) for s, c in self.cells.items()}
        new.cell_of = dict(self.cell_of)
        return new

    def ordered(self) -> list[list[int]]:
        return [self.cells[s] for s in sorted(self.cells)]

    def is_discrete(self) -> bool:
        return len(self.cells) == len(self.cell_of)

    def labeling(self) -> list[int]:
        return [c[0] for c in self.ordered()]

    def _split(self, start: int, pieces: list[list[int]]) -> list[int]:
        starts = []
        pos = start
        for p in pieces:
            self.cells[pos] = p
            for v in p:
                self.cell_of[v] = pos
            starts.append(pos)
            pos += len(p)
        return starts

    def individualize(self, v: int) -> int:
        s = self.cell_of[v]
        rest = [w for w in self.cells[s] if w != v]
        self._split(s, [[v], rest])
        return s

    def target_cell(self) -> int | None:
        """Start of the first smallest non-singleton cell."""
        best = None
        for s in sorted(self.cells):
            size = len(self.cells[s])
            if size > 1 and (best is None or size < len(self.cells[best])):
                best = s
        return best


def _refine(adj: Sequence[int], part: Coloring, queue_starts: list[int]) -> None:
    """Refine to the coarsest equitable partition finer than ``part``."""
    queue = deque(queue_starts)
    queued = set(queue_starts)
    while queue:
        w = queue.popleft()
        queued.discard(w)
        wmask = 0
        for v in part.cells[w]:
            wmask |= 1 << v
        touched = 0
        for v in part.cells[w]:
            touched |= adj[v]
        touched_cells = sorted({part.cell_of[v] for v in _bits(touched)})
        for s in touched_cells:
            cell = part.cells[s]
            if len(cell) == 1:
                continue
            counts = [(adj[v] & wmask).bit_count() for v in cell]
            first = counts[0]
            if all(c == first for c in counts):
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            pieces = [groups[c] for c in sorted(groups)]
            starts = part._split(s, pieces)
            if s in queued:
                for t in starts[1:]:
                    queue.append(t)
                    queued.add(t)
            else:
                sizes = [len(p) for p in pieces]
                skip = sizes.index(max(sizes))
                for i, t in enumerate(starts):
                    if i != skip:
                        queue.append(t)
                        queued.add(t)


def _initial_coloring(g: BichromaticGraph, respect_colors: bool) -> Coloring:
    if not respect_colors:
        return Coloring([list(range(g.n))])
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(g.colors):
        cells.setdefault(_COLOR_RANK[c], []).append(v)
    return Coloring([cells[k] for k in sorted(cells)])


@dataclass
class SearchResult:
    """Outcome of one canonical-labeling search."""

    labeling: list[int]
    certificate: bytes
    generators: list[Perm] = field(default_factory=list)
    nodes: int = 0


class _Search:
    def __init__(self, g: BichromaticGraph, respect_colors: bool, budget: int):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.colors = g.colors if respect_colors else (None,) * g.n
        self.budget = budget
        self.nodes = 0
        self.leaves: dict[bytes, tuple[list[int], list[int]]] = {}
        self.best: bytes | None = None
        self.best_lab: list[int] | None = None
        self.generators: list[Perm] = []
        self.nbytes = max(1, (self.n + 7) // 8)

    def certificate(self, lab: list[int]) -> bytes:
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        out = [self.n.to_bytes(2, "little"), b"".join(_COLOR_BYTE[self.colors[v]] for v in lab)]
        for v in lab:
            row = 0
            for w in _bits(self.adj[v]):
                row |= 1 << pos[w]
            out.append(row.to_bytes(self.nbytes, "big"))
        return b"".join(out)

    def automorphism(self, lab1: list[int], lab2: list[int]) -> Perm:
        images = [0] * self.n
        for a, b in zip(lab1, lab2):
            images[a] = b
        p = Perm(images)
        _assert_isomorphism(self.g, self.g, images, self.colors == self.g.colors)
        return p

    def run(self, part: Coloring) -> None:
        _refine(self.adj, part, sorted(part.cells))
        self.explore(part, [])

    def explore(self, part: Coloring, seq: list[int]) -> int | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceError(f"isomorphism search exceeded {self.budget} nodes")
        depth = len(seq)
        if part.is_discrete():
            lab = part.labeling()
            cert = self.certificate(lab)
            seen = self.leaves.get(cert)
            if seen is not None:
                old_lab, old_seq = seen
                self.generators.append(self.automorphism(old_lab, lab))
                k = 0
                while k < depth and old_seq[k] == seq[k]:
                    k += 1
                return k
            self.leaves[cert] = (lab, list(seq))
            if self.best is None or cert > self.best:
                self.best, self.best_lab = cert, lab
            return None
        target = part.target_cell()
        children = list(part.cells[target])
        explored: list[int] = []
        # union-find over vertices for generators fixing the current prefix
        parent = list(range(self.n))
        used = 0

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in children:
            while used < len(self.generators):
                gen = self.generators[used].array
                used += 1
                if all(gen[v] == v for v in seq):
                    for v in range(self.n):
                        a, b = find(v), find(int(gen[v]))
                        if a != b:
                            parent[max(a, b)] = min(a, b)
            rc = find(c)
            if any(find(e) == rc for e in explored):
                continue
            explored.append(c)
            child = part.copy()
            s = child.individualize(c)
            _refine(self.adj, child, [s])
            seq.append(c)
            jump = self.explore(child, seq)
            seq.pop()
            if jump is not None and jump < depth:
                return jump
        return None


def _search(g: BichromaticGraph, respect_colors: bool = True,
            budget: int = NODE_BUDGET) -> SearchResult:
    if g.n > MAX_VERTICES:
        raise ResourceError(f"graph has {g.n} vertices; limit is {MAX_VERTICES}")
    if g.n == 0:
        return SearchResult([], b"\x00\x00", [], 0)
    s = _Search(g, respect_colors, budget)
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * g.n + 200))
    try:
        s.run(_initial_coloring(g, respect_colors))
    finally:
        sys.setrecursionlimit(old)
    return SearchResult(s.best_lab, s.best, s.generators, s.nodes)


def _assert_isomorphism(a: BichromaticGraph, b: BichromaticGraph, images: Sequence[int],
                        respect_colors: bool) -> None:
    """Hard check that v -> images[v] maps a onto b."""
    n = a.n
    if b.n != n or sorted(images) != list(range(n)):
        raise AssertionError("map is not a bijection of vertex sets")
    for v in range(n):
        if respect_colors and a.colors[v] != b.colors[images[v]]:
            raise AssertionError(f"vertex {v} changes color")
        row = 0
        for w in _bits(a.adj[v]):
            row |= 1 << images[w]
        if row != b.adj[images[v]]:
            raise AssertionError(f"adjacency of vertex {v} not preserved")


def canonical_labeling(g: BichromaticGraph, respect_colors: bool = True) -> list[int]:
    """Vertex order whose induced adjacency matrix is the canonical form."""
    return _search(g, respect_colors).labeling


def canonical_form(g: BichromaticGraph, respect_colors: bool = True) -> bytes:
    """Byte string equal for two graphs iff they are (color-preservingly) isomorphic."""
    return _search(g, respect_colors).certificate


def is_isomorphic(a: BichromaticGraph, b: BichromaticGraph,
                  respect_colors: bool = True) -> list[int] | None:
    """A verified isomorphism as an image list, or None."""
    if a.n != b.n or a.num_edges != b.num_edges:
        return None
    if respect_colors and sorted(a.colors, key=_COLOR_RANK.get) != sorted(b.colors, key=_COLOR_RANK.get):
        return None
    if sorted(a.degrees()) != sorted(b.degrees()):
        return None
    ra, rb = _search(a, respect_colors), _search(b, respect_colors)
    if ra.certificate != rb.certificate:
        return None
    images = [0] * a.n
    for u, v in zip(ra.labeling, rb.labeling):
        images[u] = v
    _assert_isomorphism(a, b, images, respect_colors)
    return images


def automorphism_group(g: BichromaticGraph, respect_colors: bool = True) -> PermGroup:
    """Automorphism group generated by the automorphisms found in the search."""
    res = _search(g, respect_colors)
    return PermGroup(res.generators, degree=max(g.n, 1))


def orbits(g: BichromaticGraph, respect_colors: bool = True) -> list[list[int]]:
    """Vertex orbits of the automorphism group, sorted by least vertex."""
    return automorphism_group(g, respect_colors).orbits() if g.n else []


@dataclass(frozen=True)
class VertexAction:
    vertex: int
    stabilizer_order: int
    image_order: int
    kernel_order: int
    local_aut_order: int

    @property
    def full(self) -> bool:
        return self.image_order == self.local_aut_order


@dataclass(frozen=True)
class NeighborTransitivity:
    """Whether every vertex stabilizer induces all automorphisms of its local graph."""

    result: bool
    actions: tuple[VertexAction, ...]

    def __bool__(self) -> bool:
        return self.result

    @property
    def kernel_orders(self) -> set[int]:
        return {a.kernel_order for a in self.actions}


def max_transitive_on_neighbors(g: BichromaticGraph,
                                respect_colors: bool = True) -> NeighborTransitivity:
    """Compare the induced action of each vertex stabilizer on x^⊥ with Aut(x^⊥).

    One representative per automorphism orbit is examined; the data are
    constant on orbits.
    """
    forms: dict = {}
    for v in range(g.n):
        key = g.colors[v] if respect_colors else None
        f = canonical_form(local_graph(g, v), respect_colors)
        if forms.setdefault(key, f) != f:
            raise DomainError("graph is not locally homogeneous")
    aut = automorphism_group(g, respect_colors)
    actions = []
    local_orders: dict = {}
    for orb in aut.orbits():
        x = min(orb)
        stab = aut.stabilizer(x)
        nbrs = g.neighbors(x)
        image = PermGroup([p.restrict(nbrs) for p in stab.generators], degree=max(len(nbrs), 1))
        key = g.colors[x] if respect_colors else None
        if key not in local_orders:
            local_orders[key] = automorphism_group(local_graph(g, x), respect_colors).order()
        so, io = stab.order(), image.order()
        actions.append(VertexAction(x, so, io, so // io, local_orders[key]))
    return NeighborTransitivity(all(a.full for a in actions), tuple(actions))
