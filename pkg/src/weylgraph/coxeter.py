"""Coxeter diagrams, finite presentations and Todd-Coxeter coset enumeration."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ParseError, ResourceError
from .graph import LONG, SHORT, BichromaticGraph
from .permgroup import Perm, PermGroup, commutes, conjugacy_class

INF = math.inf
DEFAULT_MAX_COSETS = 1_000_000


# --------------------------------------------------------------------------
# Coxeter matrices


@dataclass(frozen=True)
class CoxeterMatrix:
    name: str
    m: tuple[tuple, ...]
    colors: tuple | None = None

    def __post_init__(self):
        r = len(self.m)
        for i in range(r):
            if len(self.m[i]) != r:
                raise DomainError("Coxeter matrix must be square")
            if self.m[i][i] != 1:
                raise DomainError("Coxeter matrix must have 1 on the diagonal")
            for j in range(r):
                if i != j and (self.m[i][j] != self.m[j][i] or self.m[i][j] < 2):
                    raise DomainError(f"bad Coxeter entry m[{i}][{j}] = {self.m[i][j]}")
        if self.colors is not None and len(self.colors) != r:
            raise DomainError("one color per generator expected")

    @property
    def rank(self) -> int:
        return len(self.m)

    @property
    def generator_names(self) -> list[str]:
        return [f"s{i + 1}" for i in range(self.rank)]


def _chain(r: int, labels: dict[tuple[int, int], int] | None = None) -> list[list]:
    m = [[1 if i == j else 2 for j in range(r)] for i in range(r)]
    for i in range(r - 1):
        m[i][i + 1] = m[i + 1][i] = 3
    for (i, j), v in (labels or {}).items():
        m[i][j] = m[j][i] = v
    return m


def _freeze(m) -> tuple[tuple, ...]:
    return tuple(tuple(row) for row in m)


def coxeter_matrix(tag: str) -> CoxeterMatrix:
    """Catalog diagram: A_n, B_n, C_n, D_n, E6-8, F4, G2, H3, H4, I2(m).

    Crystallographic diagrams with two root lengths carry vertex colors
    (short/long) following the usual simple-root labelling.
    """
    t = tag.strip().upper().replace("_", "")
    m = re.match(r"^I2\((\d+)\)$", t) or re.match(r"^I2,(\d+)$", t)
    if m:
        k = int(m.group(1))
        if k < 2:
            raise DomainError("I2(m) needs m >= 2")
        return CoxeterMatrix(f"I2({k})", ((1, k), (k, 1)))
    m = re.match(r"^([A-H])(\d+)$", t)
    if not m:
        raise DomainError(f"unknown Coxeter diagram {tag!r}")
    fam, r = m.group(1), int(m.group(2))
    name = f"{fam}{r}"
    if fam == "A" and r >= 1:
        return CoxeterMatrix(name, _freeze(_chain(r)))
    if fam in "BC" and r >= 2:
        mm = _chain(r, {(r - 2, r - 1): 4})
        end, rest = (SHORT, LONG) if fam == "B" else (LONG, SHORT)
        return CoxeterMatrix(name, _freeze(mm), tuple([rest] * (r - 1) + [end]))
    if fam == "D" and r >= 4:
        mm = [row + [2] for row in _chain(r - 1)] + [[2] * (r - 1) + [1]]
        mm[r - 3][r - 1] = mm[r - 1][r - 3] = 3
        return CoxeterMatrix(name, _freeze(mm))
    if fam == "E" and r in (6, 7, 8):
        # Bourbaki labelling: 1-3-4-5-...; 2 attached to 4
        mm = [[1 if i == j else 2 for j in range(r)] for i in range(r)]
        for i, j in [(0, 2), (2, 3), (1, 3)] + [(k, k + 1) for k in range(3, r - 1)]:
            mm[i][j] = mm[j][i] = 3
        return CoxeterMatrix(name, _freeze(mm))
    if fam == "F" and r == 4:
        return CoxeterMatrix(name, _freeze(_chain(4, {(1, 2): 4})), (LONG, LONG, SHORT, SHORT))
    if fam == "G" and r == 2:
        return CoxeterMatrix(name, ((1, 6), (6, 1)), (SHORT, LONG))
    if fam == "H" and r in (3, 4):
        return CoxeterMatrix(name, _freeze(_chain(r, {(0, 1): 5})))
    raise DomainError(f"no finite Coxeter diagram {tag!r}")


# --------------------------------------------------------------------------
# presentations


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def invert_word(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(-g for g in reversed(word))


def power_word(word: Sequence[int], k: int) -> tuple[int, ...]:
    base = tuple(word) if k >= 0 else invert_word(word)
    return free_reduce(base * abs(k))


@dataclass(frozen=True)
class GroupPresentation:
    """Generators by name; relators as words of signed 1-based generator indices."""

    generators: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rels = []
        for r in self.relators:
            r = free_reduce(r)
            if not r:
                raise DomainError("relator reduces to the empty word")
            for g in r:
                if not (1 <= abs(g) <= len(self.generators)):
                    raise DomainError(f"relator mentions unknown generator index {g}")
            rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word_string(self, word: Sequence[int]) -> str:
        return " ".join(self.generators[abs(g) - 1] + ("^-1" if g < 0 else "") for g in word)

    def __str__(self) -> str:
        rels = ", ".join("(" + self.word_string(r) + ")" for r in self.relators)
        return f"gens: {' '.join(self.generators)}; rels: {rels}"


_TOKEN_RE = re.compile(r"\s*(?:(?P<id>[A-Za-z_][A-Za-z0-9_.]*)|(?P<int>-?\d+)|(?P<op>[()^*,]))")


class _WordParser:
    def __init__(self, text: str, offset: int, names: dict[str, int]):
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                bad = text[pos:].lstrip()[:1]
                raise ParseError("unexpected character", bad, offset + len(text) - len(text[pos:].lstrip()))
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), offset + m.start(kind)))
            pos = m.end()
        self.i = 0
        self.names = names
        self.end = offset + len(text)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "<end>", self.end)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self) -> tuple[int, ...]:
        w = self.word()
        kind, tok, pos = self.peek()
        if kind != "eof":
            raise ParseError("unexpected token", tok, pos)
        return w

    def word(self) -> tuple[int, ...]:
        out = self.term()
        while True:
            kind, tok, _ = self.peek()
            if kind == "op" and tok == "*":
                self.take()
                out += self.term()
            elif kind == "id" or (kind == "op" and tok == "("):
                out += self.term()
            else:
                return free_reduce(out)

    def term(self) -> tuple[int, ...]:
        base = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, tok, pos = self.peek()
            if kind == "int":
                self.take()
                base = power_word(base, int(tok))
            else:
                g = self.factor()
                base = free_reduce(invert_word(g) + base + g)
        return base

    def factor(self) -> tuple[int, ...]:
        kind, tok, pos = self.take()
        if kind == "id":
            if tok not in self.names:
                raise ParseError("unknown generator", tok, pos)
            return (self.names[tok],)
        if kind == "op" and tok == "(":
            w = self.word()
            k2, t2, p2 = self.take()
            if t2 != ")":
                raise ParseError("expected ')'", t2, p2)
            return w
        raise ParseError("expected generator or '('", tok, pos)


def parse_word(text: str, generators: Sequence[str], offset: int = 0) -> tuple[int, ...]:
    """Parse a word such as ``(x1^(x0*y1*x0) * y0)^2``; x^y means y^-1 x y."""
    names = {g: i + 1 for i, g in enumerate(generators)}
    return _WordParser(text, offset, names).parse()


def _split_top(text: str, offset: int) -> list[tuple[str, int]]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:i], offset + start))
            start = i + 1
    parts.append((text[start:], offset + start))
    return parts


def parse_presentation(text: str) -> GroupPresentation:
    """Parse ``gens: a b c; rels: a^2, (a b)^3, (a (b^c))^2``."""
    m = re.match(r"\s*gens\s*:(?P<g>[^;]*);\s*rels\s*:(?P<r>.*)$", text, re.S)
    if not m:
        stripped = text.lstrip()
        raise ParseError("expected 'gens: ...; rels: ...'", stripped[:8], len(text) - len(stripped))
    gens = m.group("g").split()
    if not gens:
        raise ParseError("no generators", ";", m.start("r"))
    for g in gens:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.]*", g):
            raise ParseError("invalid generator name", g, m.start("g") + m.group("g").index(g))
    if len(set(gens)) != len(gens):
        raise DomainError("duplicate generator names")
    rels = []
    body = m.group("r").rstrip().rstrip(";")
    for part, pos in _split_top(body, m.start("r")):
        if not part.strip():
            raise ParseError("empty relator", ",", pos)
        w = parse_word(part, gens, pos)
        if not w:
            raise ParseError("relator reduces to the empty word", part.strip(), pos)
        rels.append(w)
    return GroupPresentation(tuple(gens), tuple(rels))


def coxeter_presentation(cm: CoxeterMatrix) -> GroupPresentation:
    """s^2 for every generator, (s t)^m for every pair."""
    rels = [(i + 1, i + 1) for i in range(cm.rank)]
    for i in range(cm.rank):
        for j in range(i + 1, cm.rank):
            mij = cm.m[i][j]
            if mij == INF or mij == 0:
                raise DomainError(f"infinite Coxeter entry between s{i + 1} and s{j + 1}")
            rels.append((i + 1, j + 1) * int(mij))
    return GroupPresentation(tuple(cm.generator_names), tuple(rels))


APPENDIX_F4_PRESENTATION = (
    "gens: x0 x1 y0 y1; "
    "rels: x0^2, x1^2, y0^2, y1^2, "
    "(x1*y0)^4, (y0*y1)^3, (y1*x1)^2, (y1*x0)^4, (x0*x1)^3, "
    "(x0*y0)^2, "
    "(x1^(x0*y1*x0) * y0)^2, "
    "(x0 * y1^(y0*x1*y0))^2"
)


def appendix_f4_presentation() -> GroupPresentation:
    """Four involutions x0, x1, y0, y1 with twelve relators presenting a group of order 1152."""
    return parse_presentation(APPENDIX_F4_PRESENTATION)


# --------------------------------------------------------------------------
# Todd-Coxeter


@dataclass
class CosetTable:
    """Standardized complete coset table; column 2g is generator g, 2g+1 its inverse."""

    ngens: int
    rows: list[list[int]]
    complete: bool = True
    subgroup_trivial: bool = True
    defined: int = 0

    @property
    def index(self) -> int:
        return len(self.rows)

    def permutations(self) -> list[Perm]:
        """Right action of each generator on the cosets."""
        return [Perm([row[2 * g] for row in self.rows]) for g in range(self.ngens)]

    def to_perm_group(self) -> PermGroup:
        known = self.index if self.subgroup_trivial else None
        return PermGroup(self.permutations(), degree=self.index, known_order=known)


class _Enumerator:
    def __init__(self, p: GroupPresentation, max_cosets: int):
        self.ngens = p.ngens
        ncols = 2 * p.ngens
        # involutory generators share one column for g and g^-1
        invol = {abs(r[0]) for r in p.relators if len(r) == 2 and r[0] == r[1]}
        self.col = {}
        self.inv = list(range(ncols))
        for g in range(p.ngens):
            self.col[g + 1] = 2 * g
            if g + 1 in invol:
                self.col[-(g + 1)] = 2 * g
                self.inv[2 * g] = 2 * g
            else:
                self.col[-(g + 1)] = 2 * g + 1
                self.inv[2 * g], self.inv[2 * g + 1] = 2 * g + 1, 2 * g
        self.cols = sorted(set(self.col.values()))
        self.ncols = ncols
        self.rels = [[self.col[x] for x in r] for r in p.relators]
        self.table: list[list[int]] = [[-1] * ncols]
        self.parent = [0]
        self.max = max_cosets
        self.queue: list[int] = []

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        n = len(self.table)
        if n >= self.max:
            raise ResourceError(f"coset enumeration exceeded {self.max} cosets")
        self.table.append([-1] * self.ncols)
        self.parent.append(n)
        self.table[c][x] = n
        self.table[n][self.inv[x]] = c

    def scan_and_fill(self, c: int, w: list[int]) -> None:
        t, inv = self.table, self.inv
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and t[f][w[i]] >= 0:
                f = t[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][inv[w[j]]] >= 0:
                b = t[b][inv[w[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][w[i]] = b
                t[b][inv[w[i]]] = f
                return
            self.define(f, w[i])

    def merge(self, k: int, l: int) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        self.parent[l] = k
        self.queue.append(l)

    def coincidence(self, a: int, b: int) -> None:
        t, inv = self.table, self.inv
        self.queue = []
        self.merge(a, b)
        qi = 0
        while qi < len(self.queue):
            e = self.queue[qi]
            qi += 1
            for x in self.cols:
                f = t[e][x]
                if f < 0:
                    continue
                if t[f][inv[x]] == e:
                    t[f][inv[x]] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if t[e1][x] >= 0:
                    self.merge(f1, t[e1][x])
                elif t[f1][inv[x]] >= 0:
                    self.merge(e1, t[f1][inv[x]])
                else:
                    t[e1][x] = f1
                    t[f1][inv[x]] = e1

    def run(self, subgroup: list[list[int]]) -> None:
        for w in subgroup:
            self.scan_and_fill(0, w)
        c = 0
        while c < len(self.table):
            for r in self.rels:
                if not self.alive(c):
                    break
                self.scan_and_fill(c, r)
            if self.alive(c):
                for x in self.cols:
                    if self.table[c][x] < 0:
                        self.define(c, x)
            c += 1

    def standardized(self) -> list[list[int]]:
        order = [0]
        index = {0: 0}
        k = 0
        while k < len(order):
            c = order[k]
            for x in self.cols:
                d = self.rep(self.table[c][x])
                if d not in index:
                    index[d] = len(order)
                    order.append(d)
            k += 1
        rows = []
        for c in order:
            rows.append([index[self.rep(self.table[c][self.col[(x // 2 + 1) * (1 if x % 2 == 0 else -1)]])]
                         for x in range(self.ncols)])
        return rows


def coset_enumerate(p: GroupPresentation, subgroup_gens: Sequence[Sequence[int]] = (),
                    max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """HLT coset enumeration of the subgroup generated by ``subgroup_gens``."""
    e = _Enumerator(p, max_cosets)
    sub = [[e.col[x] for x in free_reduce(w)] for w in subgroup_gens if free_reduce(w)]
    e.run(sub)
    rows = e.standardized()
    table = CosetTable(p.ngens, rows, True, not sub, len(e.table))
    _check_table(table, p)
    return table


def _check_table(t: CosetTable, p: GroupPresentation) -> None:
    perms = t.permutations()
    for r in p.relators:
        for c in range(t.index):
            d = c
            for x in r:
                g = perms[abs(x) - 1]
                d = g(d) if x > 0 else int(g.inverse()(d))
            if d != c:
                raise AssertionError("coset table does not satisfy the relators")


# --------------------------------------------------------------------------
# groups from presentations


def evaluate_word(word: Sequence[int], images: Sequence[Perm]) -> Perm:
    out = images[0] * images[0].inverse()
    for x in word:
        g = images[abs(x) - 1]
        out = out * (g if x > 0 else g.inverse())
    return out


def failed_relations(relators: Sequence[Sequence[int]], images: Sequence[Perm]) -> list[int]:
    return [i for i, r in enumerate(relators) if not evaluate_word(r, images).is_identity()]


def verify_relations(g: PermGroup | None, relators, images: Sequence[Perm]) -> bool:
    """True iff every relator evaluates to the identity at the given images.

    ``relators`` may be a GroupPresentation or a list of words.
    """
    if isinstance(relators, GroupPresentation):
        if len(images) != relators.ngens:
            raise DomainError(f"{len(images)} images for {relators.ngens} generators")
        relators = relators.relators
    if g is not None:
        for h in images:
            if h not in g:
                raise DomainError("image is not an element of the group")
    return not failed_relations(relators, images)


def coxeter_group(cm: CoxeterMatrix, max_cosets: int = DEFAULT_MAX_COSETS) -> PermGroup:
    """Regular permutation representation of the Coxeter group of ``cm``."""
    return coset_enumerate(coxeter_presentation(cm), max_cosets=max_cosets).to_perm_group()


def reflection_graph(cm: CoxeterMatrix, class_reps: Sequence[int] | None = None,
                     max_cosets: int = DEFAULT_MAX_COSETS) -> BichromaticGraph:
    """Commuting graph on the conjugacy classes of the chosen simple reflections.

    Colors come from the diagram's vertex colors; uncolored diagrams give an
    uncolored graph.
    """
    if class_reps is None:
        class_reps = range(cm.rank)
    G = coxeter_group(cm, max_cosets)
    gens = G.generators
    vertices: list[Perm] = []
    colors: list = []
    seen: set[Perm] = set()
    for i in class_reps:
        if not 0 <= i < cm.rank:
            raise DomainError(f"no generator {i} in rank {cm.rank} diagram")
        if gens[i] in seen:
            continue
        cls = conjugacy_class(G, gens[i])
        seen.update(cls)
        vertices.extend(cls)
        colors.extend([cm.colors[i] if cm.colors else None] * len(cls))
    edges = [(a, b) for a in range(len(vertices)) for b in range(a + 1, len(vertices))
             if commutes(vertices[a], vertices[b])]
    return BichromaticGraph(len(vertices), edges, colors)
