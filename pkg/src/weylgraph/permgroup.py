"""Permutations and finite permutation groups.

Permutations act on the right, as in GAP: ``(p * q)(i) = q(p(i))`` and
conjugation is ``h ** g = g^-1 h g``.  Groups are kept as generating sets;
order and membership go through a Schreier-Sims stabilizer chain that is
built on first use and cached.
"""

from __future__ import annotations

import math
import re
import threading
from collections import deque
from itertools import product
from typing import Callable, Hashable, Iterable, Iterator, Sequence

import numpy as np

from .errors import DomainError, ResourceError

#: Default cap on explicit element enumeration.
ELEMENT_BUDGET = 2_000_000

# Transversal elements are cached as full arrays only below this many entries.
_TRANSVERSAL_CACHE_LIMIT = 20_000_000


class Perm:
    """A permutation of ``{0, ..., degree-1}`` stored as an image array."""

    __slots__ = ("_a", "_hash")

    def __init__(self, images: Iterable[int]):
        a = np.array(list(images) if not isinstance(images, np.ndarray) else images,
                     dtype=np.int64)
        if a.ndim != 1:
            raise DomainError("permutation images must be a flat sequence")
        n = a.shape[0]
        if n and (a.min() < 0 or a.max() >= n or np.unique(a).shape[0] != n):
            raise DomainError(f"not a permutation: {a.tolist()}")
        a.flags.writeable = False
        self._a = a
        self._hash = None

    @classmethod
    def _raw(cls, a: np.ndarray) -> "Perm":
        p = object.__new__(cls)
        a.flags.writeable = False
        p._a = a
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(np.arange(degree, dtype=np.int64))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        """Build from 0-based cycles; points not mentioned are fixed."""
        a = np.arange(degree, dtype=np.int64)
        seen: set[int] = set()
        for cyc in cycles:
            cyc = list(cyc)
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise DomainError(f"point {pt} out of range for degree {degree}")
                if pt in seen:
                    raise DomainError(f"point {pt} repeated in cycle notation")
                seen.add(pt)
            for i, pt in enumerate(cyc):
                a[pt] = cyc[(i + 1) % len(cyc)]
        return cls._raw(a)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Perm":
        """Parse 1-based cycle notation such as ``"(1 2)(3 4 5)"``.

        Commas may separate points, as in GAP output.  ``"()"`` is the
        identity.
        """
        s = text.strip()
        if not re.fullmatch(r"(\(\s*(\d+(\s*[,\s]\s*\d+)*)?\s*\)\s*)*", s):
            raise DomainError(f"cannot parse permutation {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", s):
            pts = [int(t) - 1 for t in re.split(r"[,\s]+", body.strip()) if t]
            if any(p < 0 for p in pts):
                raise DomainError(f"points are 1-based in {text!r}")
            if pts:
                cycles.append(pts)
        top = max((max(c) for c in cycles), default=-1) + 1
        if degree is None:
            degree = top
        elif top > degree:
            raise DomainError(f"{text!r} moves points beyond degree {degree}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return int(self._a.shape[0])

    @property
    def array(self) -> np.ndarray:
        """Read-only image array."""
        return self._a

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self._a)

    def __call__(self, i: int) -> int:
        return int(self._a[i])

    def __mul__(self, other: "Perm") -> "Perm":
        if not isinstance(other, Perm):
            return NotImplemented
        _check_same_degree(self, other)
        return Perm._raw(other._a[self._a])

    def inverse(self) -> "Perm":
        inv = np.empty_like(self._a)
        inv[self._a] = np.arange(self._a.shape[0], dtype=np.int64)
        return Perm._raw(inv)

    def __invert__(self) -> "Perm":
        return self.inverse()

    def __pow__(self, other):
        if isinstance(other, Perm):
            # conjugation h^g = g^-1 h g
            return other.inverse() * self * other
        k = int(other)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Perm.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self, g: "Perm") -> "Perm":
        """Return ``g^-1 self g``."""
        _check_same_degree(self, g)
        ginv = np.empty_like(g._a)
        ginv[g._a] = np.arange(g._a.shape[0], dtype=np.int64)
        # (g^-1 h g)(i) = g(h(g^-1(i)))
        return Perm._raw(g._a[self._a[ginv]])

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._a, np.arange(self._a.shape[0])))

    def is_involution(self) -> bool:
        return not self.is_identity() and bool(np.array_equal(self._a[self._a],
                                                              np.arange(self._a.shape[0])))

    def support(self) -> list[int]:
        return np.nonzero(self._a != np.arange(self._a.shape[0]))[0].tolist()

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        a = self._a
        for i in range(self.degree):
            if seen[i] or a[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = int(a[i])
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = int(a[j])
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def cycle_string(self, one_based: bool = True) -> str:
        off = 1 if one_based else 0
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + off) for p in c) + ")" for c in cyc)

    def restrict(self, points: Sequence[int]) -> "Perm":
        """Action on an invariant subset, renumbered by position in ``points``."""
        index = {p: i for i, p in enumerate(points)}
        try:
            return Perm._raw(np.array([index[int(self._a[p])] for p in points],
                                      dtype=np.int64))
        except KeyError:
            raise DomainError("point set is not invariant under the permutation") from None

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self._a.shape == other._a.shape \
            and bool(np.array_equal(self._a, other._a))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._a.tobytes())
        return self._hash

    def __lt__(self, other: "Perm") -> bool:
        return self._a.tolist() < other._a.tolist()

    def __repr__(self) -> str:
        return f"Perm({self.cycle_string()!s}, degree={self.degree})"


def _check_same_degree(a: Perm, b: Perm) -> None:
    if a.degree != b.degree:
        raise DomainError(f"degree mismatch: {a.degree} vs {b.degree}")


def commutes(a: Perm, b: Perm) -> bool:
    _check_same_degree(a, b)
    return bool(np.array_equal(b._a[a._a], a._a[b._a]))


# --------------------------------------------------------------------------
# actions

ACTIONS = ("points", "conjugation", "sets", "tuples")


def _action(kind: str, degree: int) -> Callable[[Hashable, Perm], Hashable]:
    if kind == "points":
        return lambda x, g: int(g._a[x])
    if kind == "conjugation":
        return lambda x, g: x.conj(g)
    if kind == "sets":
        return lambda x, g: frozenset(int(g._a[p]) for p in x)
    if kind == "tuples":
        return lambda x, g: tuple(int(g._a[p]) for p in x)
    raise DomainError(f"unknown action {kind!r}; expected one of {ACTIONS}")


def _check_point(kind: str, x, degree: int) -> None:
    if kind == "points":
        if not isinstance(x, (int, np.integer)) or not 0 <= x < degree:
            raise DomainError(f"point {x!r} out of range for degree {degree}")
    elif kind == "conjugation":
        if not isinstance(x, Perm) or x.degree != degree:
            raise DomainError("conjugation action needs a permutation of matching degree")
    else:
        pts = list(x)
        if any(not 0 <= p < degree for p in pts):
            raise DomainError(f"points {pts} out of range for degree {degree}")


class _Orbit:
    """BFS orbit with a Schreier vector (parent point and generator index)."""

    def __init__(self, gens: Sequence[Perm], start, act):
        self.gens = list(gens)
        self.act = act
        self.points = [start]
        self.parent = {start: None}
        self._grow(0)

    def _grow(self, frm: int) -> None:
        queue = deque(self.points[frm:])
        while queue:
            x = queue.popleft()
            for k, g in enumerate(self.gens):
                y = self.act(x, g)
                if y not in self.parent:
                    self.parent[y] = (x, k)
                    self.points.append(y)
                    queue.append(y)

    def add_generator(self, g: Perm) -> int:
        """Add a generator and close the orbit; returns the old orbit size."""
        old = len(self.points)
        self.gens.append(g)
        k = len(self.gens) - 1
        queue = deque()
        for x in list(self.points):
            y = self.act(x, g)
            if y not in self.parent:
                self.parent[y] = (x, k)
                self.points.append(y)
                queue.append(y)
        while queue:
            x = queue.popleft()
            for j, h in enumerate(self.gens):
                y = self.act(x, h)
                if y not in self.parent:
                    self.parent[y] = (x, j)
                    self.points.append(y)
                    queue.append(y)
        return old

    def word(self, y) -> list[int]:
        """Generator indices w with start^(g_w1 g_w2 ...) = y."""
        w = []
        while self.parent[y] is not None:
            y, k = self.parent[y]
            w.append(k)
        w.reverse()
        return w

    def transversal(self, y, degree: int) -> Perm:
        a = np.arange(degree, dtype=np.int64)
        for k in self.word(y):
            a = self.gens[k]._a[a]
        return Perm._raw(a)


# --------------------------------------------------------------------------
# stabilizer chain


class _Level:
    __slots__ = ("base", "orbit", "checked", "cache")

    def __init__(self, base: int, gens: Sequence[Perm]):
        self.base = base
        self.orbit = _Orbit(gens, base, lambda x, g: int(g._a[x]))
        self.checked: set[tuple[int, int]] = set()
        self.cache: dict[int, Perm] = {}


class StabChain:
    """Deterministic Schreier-Sims base and strong generating set."""

    def __init__(self, gens: Sequence[Perm], degree: int, known_order: int | None = None):
        self.degree = degree
        self.levels: list[_Level] = []
        gens = [g for g in gens if not g.is_identity()]
        if gens:
            self._build(gens, known_order)

    # transversal element u with base^u = point, at level i
    def _u(self, i: int, point: int) -> Perm:
        lvl = self.levels[i]
        u = lvl.cache.get(point)
        if u is None:
            u = lvl.orbit.transversal(point, self.degree)
            if len(lvl.orbit.points) * self.degree <= _TRANSVERSAL_CACHE_LIMIT:
                lvl.cache[point] = u
        return u

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip g through levels >= start; returns residue and drop level."""
        a = g._a
        for i in range(start, len(self.levels)):
            lvl = self.levels[i]
            img = int(a[lvl.base])
            if img not in lvl.orbit.parent:
                return Perm._raw(a), i
            u = self._u(i, img)
            uinv = np.empty_like(u._a)
            uinv[u._a] = np.arange(self.degree, dtype=np.int64)
            a = uinv[a]
        return Perm._raw(a), len(self.levels)

    def _new_level(self, g: Perm, gens: Sequence[Perm]) -> None:
        moved = g.support()
        used = {lvl.base for lvl in self.levels}
        base = next(p for p in moved if p not in used)
        self.levels.append(_Level(base, gens))

    def _current_order(self) -> int:
        return math.prod(len(lvl.orbit.points) for lvl in self.levels)

    def _build(self, gens: list[Perm], known_order: int | None) -> None:
        # initial base: every generator moves some base point
        for g in gens:
            if all(int(g._a[lvl.base]) == lvl.base for lvl in self.levels):
                self._new_level(g, [])
        for i, lvl in enumerate(self.levels):
            for g in gens:
                if all(int(g._a[self.levels[j].base]) == self.levels[j].base for j in range(i)):
                    lvl.orbit.add_generator(g)
        i = len(self.levels) - 1
        while i >= 0:
            if known_order is not None and self._current_order() == known_order:
                return
            restart = self._check_level(i)
            i = restart if restart is not None else i - 1

    def _check_level(self, i: int) -> int | None:
        lvl = self.levels[i]
        orb = lvl.orbit
        for beta in list(orb.points):
            for k, s in enumerate(list(orb.gens)):
                if (beta, k) in lvl.checked:
                    continue
                lvl.checked.add((beta, k))
                img = int(s._a[beta])
                par = orb.parent.get(img)
                if par is not None and par == (beta, k):
                    continue  # tree edge, Schreier generator is trivial
                h = self._u(i, beta) * s
                u2 = self._u(i, img)
                u2inv = np.empty_like(u2._a)
                u2inv[u2._a] = np.arange(self.degree, dtype=np.int64)
                h = Perm._raw(u2inv[h._a])
                res, j = self.sift(h, i + 1)
                if res.is_identity():
                    continue
                if j == len(self.levels):
                    self._new_level(res, [])
                for level in range(i + 1, j + 1):
                    self.levels[level].orbit.add_generator(res)
                    self.levels[level].cache.clear()
                return j
        return None

    def order(self) -> int:
        return self._current_order()

    def contains(self, g: Perm) -> bool:
        res, _ = self.sift(g)
        return res.is_identity()

    @property
    def base(self) -> list[int]:
        return [lvl.base for lvl in self.levels]

    def strong_generators(self) -> list[Perm]:
        out: list[Perm] = []
        seen: set[Perm] = set()
        for lvl in self.levels:
            for g in lvl.orbit.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        return out

    def elements(self) -> Iterator[Perm]:
        """All group elements as products u_k ... u_0 of transversal elements."""
        if not self.levels:
            yield Perm.identity(self.degree)
            return
        transversals = [[self._u(i, p) for p in lvl.orbit.points]
                        for i, lvl in enumerate(self.levels)]
        for combo in product(*reversed(transversals)):
            a = np.arange(self.degree, dtype=np.int64)
            for u in combo:
                a = u._a[a]
            yield Perm._raw(a)


# --------------------------------------------------------------------------
# groups


class PermGroup:
    """A permutation group given by generators.

    ``known_order`` may be supplied when the order is certified elsewhere
    (for instance a coset table); Schreier-Sims then stops as soon as the
    partial chain accounts for it.
    """

    def __init__(self, generators: Iterable[Perm], degree: int | None = None,
                 known_order: int | None = None):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise DomainError("degree is required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DomainError(f"generator degree {g.degree} != group degree {degree}")
        self.degree = degree
        self.generators = gens
        self._known_order = known_order
        self._chain: StabChain | None = None
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, ngens={len(self.generators)})"

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabChain(self.generators, self.degree, self._known_order)
        return self._chain

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        return self.chain.contains(g)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def orbit(self, x, action: str = "points") -> list:
        return orbit(self, x, action)

    def orbits(self) -> list[list[int]]:
        """Point orbits, each listed in BFS order, ordered by least point."""
        seen = [False] * self.degree
        out = []
        for p in range(self.degree):
            if not seen[p]:
                orb = orbit(self, p)
                for q in orb:
                    seen[q] = True
                out.append(orb)
        return out

    def stabilizer(self, x, action: str = "points") -> "PermGroup":
        return stabilizer(self, x, action)

    def centralizer(self, h: Perm) -> "PermGroup":
        return centralizer(self, h)

    def elements(self, budget: int = ELEMENT_BUDGET) -> list[Perm]:
        n = self.order()
        if n > budget:
            raise ResourceError(f"group of order {n} exceeds element budget {budget}")
        return list(self.chain.elements())

    def restricted(self, points: Sequence[int]) -> "PermGroup":
        """Induced action on an invariant point set."""
        return PermGroup([g.restrict(points) for g in self.generators], degree=len(points))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)


def orbit(g: PermGroup, x, action: str = "points") -> list:
    """Orbit of x in BFS order with generators applied in listed order."""
    act = _action(action, g.degree)
    _check_point(action, x, g.degree)
    if action == "sets":
        x = frozenset(x)
    elif action == "tuples":
        x = tuple(x)
    return list(_Orbit(g.generators, x, act).points)


def _schreier_generators(g: PermGroup, x, action: str) -> tuple[list, Iterator[Perm]]:
    act = _action(action, g.degree)
    orb = _Orbit(g.generators, x, act)
    deg = g.degree
    trans: dict = {}

    def u(y) -> Perm:
        t = trans.get(y)
        if t is None:
            t = trans[y] = orb.transversal(y, deg)
        return t

    def gen() -> Iterator[Perm]:
        seen: set[Perm] = set()
        for y in orb.points:
            for k, s in enumerate(g.generators):
                z = act(y, s)
                if orb.parent.get(z) == (y, k):
                    continue
                h = u(y) * s * u(z).inverse()
                if not h.is_identity() and h not in seen:
                    seen.add(h)
                    yield h

    return orb.points, gen()


def stabilizer(g: PermGroup, x, action: str = "points") -> PermGroup:
    """Stabilizer via Schreier generators, thinned to a non-redundant set."""
    _check_point(action, x, g.degree)
    if action == "sets":
        x = frozenset(x)
    elif action == "tuples":
        x = tuple(x)
    points, sgens = _schreier_generators(g, x, action)
    known = g.order() // len(points)
    kept: list[Perm] = []
    trial: PermGroup | None = None
    for h in sgens:
        if trial is not None and h in trial:
            continue
        kept.append(h)
        trial = PermGroup(kept, degree=g.degree)
        if trial.order() == known:
            break
    return PermGroup(kept, degree=g.degree, known_order=known)


def centralizer(g: PermGroup, h: Perm) -> PermGroup:
    if h.degree != g.degree:
        raise DomainError(f"degree mismatch: {h.degree} vs {g.degree}")
    return stabilizer(g, h, "conjugation")


def conjugacy_class(g: PermGroup, x: Perm) -> list[Perm]:
    return orbit(g, x, "conjugation")


def order(g: PermGroup) -> int:
    return g.order()


def center(g: PermGroup, within: PermGroup | None = None,
           budget: int = ELEMENT_BUDGET) -> PermGroup:
    """Z(G).

    If ``within`` is a subgroup known to contain the center (for instance
    the centralizer of some element), its elements are filtered directly;
    otherwise the center is an iterated centralizer of the generators.
    """
    if within is not None:
        members = [c for c in within.elements(budget)
                   if not c.is_identity() and all(commutes(c, s) for s in g.generators)]
        return PermGroup(members, degree=g.degree, known_order=len(members) + 1)
    c = g
    for s in g.generators:
        c = centralizer(c, s)
    return c


def involution_census(g: PermGroup, budget: int = ELEMENT_BUDGET) -> dict[Perm, int]:
    """Conjugacy classes of involutions: representative -> class size.

    Representatives are the first class members met in the chain's element
    enumeration order.
    """
    invols = [p for p in g.elements(budget) if p.is_involution()]
    census: dict[Perm, int] = {}
    covered: set[Perm] = set()
    for p in invols:
        if p in covered:
            continue
        cls = conjugacy_class(g, p)
        covered.update(cls)
        census[p] = len(cls)
    return census


def falling_factorial(n: int, k: int) -> int:
    return math.perm(n, k)


def symmetric_involution_class_size(n: int, k: int) -> int:
    """Number of involutions of Sym_n with k disjoint transpositions."""
    return falling_factorial(n, 2 * k) // (math.factorial(k) * 2 ** k)


# --------------------------------------------------------------------------
# standard groups


def symmetric_group(n: int) -> PermGroup:
    if n < 1:
        raise DomainError("symmetric group needs n >= 1")
    if n == 1:
        return PermGroup([], degree=1)
    gens = [Perm.from_cycles([(0, 1)], n)]
    if n > 2:
        gens.append(Perm.from_cycles([tuple(range(n))], n))
    return PermGroup(gens)


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], degree=max(n, 1))
    gens = [Perm.from_cycles([(i, i + 1, i + 2)], n) for i in range(n - 2)]
    return PermGroup(gens)


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([Perm.from_cycles([tuple(range(n))], n)] if n > 1 else [], degree=n)
