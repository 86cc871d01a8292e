"""Crystallographic root systems with exact integer coordinates.

Coordinates are stored doubled, so the half-integral roots of E8 and F4 are
integral and every inner product and reflection stays exact.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import DomainError
from .permgroup import Perm, PermGroup

SCALE = 2

_TAG_RE = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True, order=True)
class Root:
    coords: tuple[int, ...]
    length_class: str = "long"

    @property
    def norm2(self) -> int:
        return sum(c * c for c in self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), self.length_class)


@dataclass(frozen=True)
class RootSystem:
    type_tag: str
    ambient_dim: int
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def index(self, coords) -> int:
        return self._index[tuple(coords)]

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {r.coords: i for i, r in enumerate(self.roots)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def __contains__(self, coords) -> bool:
        if isinstance(coords, Root):
            coords = coords.coords
        return tuple(coords) in self._index

    @property
    def short_roots(self) -> list[Root]:
        return [r for r in self.roots if r.length_class == "short"]

    @property
    def long_roots(self) -> list[Root]:
        return [r for r in self.roots if r.length_class == "long"]

    @property
    def is_simply_laced(self) -> bool:
        return not self.short_roots

    def positive_roots(self) -> list[Root]:
        """Roots whose first nonzero coordinate is positive."""
        return [r for r in self.roots if _lex_positive(r.coords)]

    def simple_roots(self) -> list[Root]:
        """The base of the lexicographic positive system."""
        pos = self.positive_roots()
        sums = {tuple(a + b for a, b in zip(r.coords, s.coords))
                for r, s in combinations(pos, 2)}
        return [r for r in pos if r.coords not in sums]

    def to_json(self) -> str:
        return json.dumps({
            "type": self.type_tag,
            "scaled_by": SCALE,
            "roots": [list(r.coords) for r in self.roots],
            "classes": [r.length_class for r in self.roots],
        })

    @classmethod
    def from_json(cls, text: str) -> "RootSystem":
        data = json.loads(text)
        if data.get("scaled_by", SCALE) != SCALE:
            raise DomainError(f"expected coordinates scaled by {SCALE}")
        roots = tuple(Root(tuple(c), k) for c, k in zip(data["roots"], data["classes"]))
        return cls(data["type"], len(roots[0].coords) if roots else 0, roots)


def _lex_positive(v) -> bool:
    for c in v:
        if c:
            return c > 0
    return False


def parse_type(type_tag: str) -> tuple[str, int]:
    m = _TAG_RE.match(type_tag.strip().upper().replace("(", "").replace(")", ""))
    if not m:
        raise DomainError(f"unknown root system type {type_tag!r}")
    family, rank = m.group(1), int(m.group(2))
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[family]
    if not ok:
        raise DomainError(f"invalid rank {rank} for type {family}")
    return family, rank


def _e(n: int, *terms: tuple[int, int]) -> tuple[int, ...]:
    v = [0] * n
    for i, c in terms:
        v[i] += c
    return tuple(v)


def _pm_pairs(n: int, scale: int = SCALE) -> list[tuple[int, ...]]:
    out = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(_e(n, (i, si * scale), (j, sj * scale)))
    return out


def _half_vectors(n: int, keep) -> list[tuple[int, ...]]:
    # (1/2) sum c_i e_i, doubled
    return [tuple(c) for c in product((1, -1), repeat=n) if keep(c)]


def _raw_vectors(family: str, rank: int) -> tuple[int, list[tuple[int, ...]]]:
    n = rank
    if family == "A":
        dim = n + 1
        vecs = [_e(dim, (i, SCALE), (j, -SCALE))
                for i in range(dim) for j in range(dim) if i != j]
        return dim, vecs
    if family == "B":
        vecs = [_e(n, (i, s * SCALE)) for i in range(n) for s in (1, -1)]
        return n, vecs + _pm_pairs(n)
    if family == "C":
        vecs = [_e(n, (i, s * 2 * SCALE)) for i in range(n) for s in (1, -1)]
        return n, vecs + _pm_pairs(n)
    if family == "D":
        return n, _pm_pairs(n)
    if family == "E":
        e8 = _pm_pairs(8) + _half_vectors(8, lambda c: _prod(c) == 1)
        if n == 8:
            return 8, e8
        # E7: orthogonal to e7 + e8; E6: additionally orthogonal to e6 + e8
        e7 = [v for v in e8 if v[6] + v[7] == 0]
        if n == 7:
            return 8, e7
        return 8, [v for v in e7 if v[5] + v[7] == 0]
    if family == "F":
        vecs = [_e(4, (i, s * SCALE)) for i in range(4) for s in (1, -1)]
        vecs += _half_vectors(4, lambda c: True)
        return 4, vecs + _pm_pairs(4)
    if family == "G":
        short = [_e(3, (i, SCALE), (j, -SCALE))
                 for i in range(3) for j in range(3) if i != j]
        long_ = []
        for i in range(3):
            j, k = [t for t in range(3) if t != i]
            for s in (1, -1):
                long_.append(_e(3, (i, 2 * s * SCALE), (j, -s * SCALE), (k, -s * SCALE)))
        return 3, short + long_
    raise DomainError(f"unknown family {family}")


def _prod(c) -> int:
    out = 1
    for x in c:
        out *= x
    return out


@lru_cache(maxsize=None)
def build_root_system(type_tag: str) -> RootSystem:
    """Root system of the given type, e.g. ``"F4"``, ``"B3"``, ``"E7"``.

    Roots are sorted lexicographically on scaled coordinates.  With two root
    lengths the shorter class is "short"; a single length is called long.
    """
    family, rank = parse_type(type_tag)
    dim, vecs = _raw_vectors(family, rank)
    vecs = sorted(set(vecs))
    norms = sorted({sum(c * c for c in v) for v in vecs})
    if len(norms) > 2:
        raise AssertionError(f"{type_tag}: more than two root lengths {norms}")
    short_norm = norms[0] if len(norms) == 2 else None
    roots = tuple(Root(v, "short" if sum(c * c for c in v) == short_norm else "long")
                  for v in vecs)
    return RootSystem(f"{family}{rank}", dim, roots)


def inner_product(a: Root | tuple, b: Root | tuple) -> int:
    """Dot product of scaled coordinates."""
    va = a.coords if isinstance(a, Root) else tuple(a)
    vb = b.coords if isinstance(b, Root) else tuple(b)
    if len(va) != len(vb):
        raise DomainError(f"dimension mismatch: {len(va)} vs {len(vb)}")
    return sum(x * y for x, y in zip(va, vb))


def reflect(a: Root, through: Root) -> Root:
    """Image of ``a`` under the reflection in the hyperplane orthogonal to ``through``."""
    n2 = inner_product(through, through)
    if n2 == 0:
        raise DomainError("cannot reflect through the zero vector")
    num = 2 * inner_product(a, through)
    if num % n2:
        raise ArithmeticError(f"non-integral Cartan number {num}/{n2}: input is not crystallographic")
    k = num // n2
    return Root(tuple(x - k * y for x, y in zip(a.coords, through.coords)), a.length_class)


def reflection_perm(rs: RootSystem, through: Root) -> Perm:
    """The reflection through a root as a permutation of the indexed root list."""
    images = []
    for r in rs.roots:
        img = reflect(r, through).coords
        if img not in rs:
            raise AssertionError(f"reflection of {r.coords} through {through.coords} left {rs.type_tag}")
        images.append(rs.index(img))
    return Perm(images)


def weyl_group(rs: RootSystem) -> PermGroup:
    """Weyl group acting on the root list, generated by the simple reflections."""
    return PermGroup([reflection_perm(rs, a) for a in rs.simple_roots()])


def root_pair_representatives(rs: RootSystem) -> list[int]:
    """Indices of the lexicographically larger member of each pair {a, -a}."""
    out = []
    for i, r in enumerate(rs.roots):
        if r.coords > (-r).coords:
            out.append(i)
    return out
