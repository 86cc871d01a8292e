"""Graph constructor expressions such as ``cartesian(cycle:4,cycle:4)``.

Grammar::

    spec   := atom | op "(" spec ("," spec)* ")"
    atom   := kind ":" arg ("," arg)*      (arity fixed per kind)
    op     := cartesian | union | join | compose | complement | reduce
              | uncolor | swap
"""

from __future__ import annotations

import re
from pathlib import Path

from . import graph as G
from .errors import DomainError, ParseError
from .graph import BichromaticGraph
from .weyl import named_graph, weyl_graph

# kind -> (arity, builder)
ATOMS = {
    "weyl": (1, lambda t: weyl_graph(t.upper())),
    "kneser": (2, lambda n, k: G.kneser(int(n), int(k))),
    "sp2": (1, lambda n: G.sp2(int(n))),
    "nsp": (2, lambda n, e: G.nsp(int(n), e)),
    "named": (1, lambda w: named_graph(w)),
    "cycle": (1, lambda n: G.cycle(int(n))),
    "path": (1, lambda n: G.path(int(n))),
    "complete": (1, lambda n: G.complete(int(n))),
    "coclique": (1, lambda n: G.coclique(int(n))),
    "cube": (1, lambda d: G.hypercube(int(d))),
    "bipartite": (2, lambda m, n: G.complete_bipartite(int(m), int(n), ("s", "l"))),
    "file": (1, None),
}

OPS = {
    "cartesian": (2, None, lambda gs: _fold(G.cartesian, gs)),
    "union": (1, None, lambda gs: G.disjoint_union(*gs)),
    "join": (2, None, lambda gs: _fold(G.join, gs)),
    "compose": (2, 2, lambda gs: G.composition(gs[0], gs[1])),
    "complement": (1, 1, lambda gs: G.complement(gs[0])),
    "reduce": (1, 1, lambda gs: G.reduce(gs[0])),
    "uncolor": (1, 1, lambda gs: gs[0].uncolored()),
    "swap": (1, 1, lambda gs: gs[0].swapped_colors()),
}

_INT_ARG = re.compile(r"[+-]?\w+|[+-]")


def _fold(f, gs):
    out = gs[0]
    for g in gs[1:]:
        out = f(out, g)
    return out


class _SpecParser:
    def __init__(self, text: str):
        self.s = text
        self.i = 0

    def skip(self) -> None:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def ident(self) -> tuple[str, int]:
        self.skip()
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(self.s, self.i)
        if not m:
            tok = self.s[self.i:self.i + 1] or "<end>"
            raise ParseError("expected a graph kind or operator", tok, self.i)
        self.i = m.end()
        return m.group(0), m.start()

    def expect(self, ch: str) -> None:
        self.skip()
        if self.s[self.i:self.i + 1] != ch:
            raise ParseError(f"expected {ch!r}", self.s[self.i:self.i + 1] or "<end>", self.i)
        self.i += 1

    def spec(self) -> BichromaticGraph:
        name, pos = self.ident()
        self.skip()
        nxt = self.s[self.i:self.i + 1]
        if nxt == ":":
            self.i += 1
            return self.atom(name.lower(), pos)
        if nxt == "(":
            if name.lower() not in OPS:
                raise ParseError("unknown operator", name, pos)
            self.i += 1
            args = [self.spec()]
            self.skip()
            while self.s[self.i:self.i + 1] == ",":
                self.i += 1
                args.append(self.spec())
                self.skip()
            self.expect(")")
            lo, hi, fn = OPS[name.lower()]
            if len(args) < lo or (hi is not None and len(args) > hi):
                raise ParseError(f"wrong number of arguments ({len(args)}) for", name, pos)
            return fn(args)
        raise ParseError("expected ':' or '(' after", name, pos)

    def atom(self, kind: str, pos: int) -> BichromaticGraph:
        if kind not in ATOMS:
            raise ParseError("unknown graph kind", kind, pos)
        arity, build = ATOMS[kind]
        if kind == "file":
            start = self.i
            depth = 0
            while self.i < len(self.s):
                ch = self.s[self.i]
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    if depth == 0:
                        break
                    depth -= 1
                elif ch == "," and depth == 0:
                    break
                self.i += 1
            path = self.s[start:self.i].strip()
            if not path:
                raise ParseError("missing file path", "<end>", start)
            return load_graph_file(path)
        args = []
        for k in range(arity):
            if k:
                self.expect(",")
            self.skip()
            m = _INT_ARG.match(self.s, self.i)
            if not m:
                raise ParseError(f"missing argument for {kind}", self.s[self.i:self.i + 1] or "<end>", self.i)
            args.append((m.group(0), m.start()))
            self.i = m.end()
        try:
            return build(*(a for a, _ in args))
        except ValueError as exc:
            if isinstance(exc, DomainError):
                raise
            raise ParseError(f"bad argument for {kind}", args[0][0], args[0][1]) from None


def load_graph_file(path: str) -> BichromaticGraph:
    text = Path(path).read_text()
    stripped = text.strip()
    if stripped.startswith("{"):
        return BichromaticGraph.from_json(stripped)
    return BichromaticGraph.from_graph6(stripped)


def parse_graph_spec(text: str) -> BichromaticGraph:
    """Build the graph described by a constructor expression."""
    p = _SpecParser(text)
    g = p.spec()
    p.skip()
    if p.i != len(text):
        raise ParseError("unexpected trailing input", text[p.i:p.i + 1], p.i)
    return g
