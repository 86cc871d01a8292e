"""Recognition of Sym_n and W(F4) from involution centralizer data.

Each pipeline builds a graph on conjugacy classes of involutions, checks
its local structure, identifies it, and then certifies the group by order
computations.  Every step is recorded in the report; nothing is assumed.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

from .coxeter import (appendix_f4_presentation, coset_enumerate, coxeter_matrix,
                      coxeter_presentation, failed_relations)
from .errors import DomainError
from .graph import LONG, SHORT, BichromaticGraph, diameter, is_connected, kneser, local_graph
from .iso import automorphism_group, canonical_form, is_isomorphic
from .permgroup import Perm, PermGroup, center, centralizer, commutes, conjugacy_class, orbit, symmetric_group
from .rootsys import build_root_system, reflection_perm, weyl_group
from .weyl import is_locally_like_f4, is_tightly_connected, mu_profile, named_graph

SYM = "SYM"
WF4 = "WF4"
GAMMA24B = "GAMMA24B"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class RecognitionInput:
    """A group with involutions x, y and seed pairs whose orbits give the edges."""

    group: PermGroup
    x: Perm
    y: Perm
    edge_seeds: list[tuple[Perm, Perm]] = field(default_factory=list)
    extra: dict[str, Perm] = field(default_factory=dict)  # u, v when built by from_uv

    def __post_init__(self):
        for name, e in (("x", self.x), ("y", self.y)):
            if e.degree != self.group.degree:
                raise DomainError(f"{name} has degree {e.degree}, group has degree {self.group.degree}")
            if not e.is_involution():
                raise DomainError(f"{name} is not an involution")
            if e not in self.group:
                raise DomainError(f"{name} is not an element of the group")
        for a, b in self.edge_seeds:
            if not (a.is_involution() and b.is_involution()):
                raise DomainError("edge seed contains a non-involution")
            if not commutes(a, b):
                raise DomainError(f"edge seed {a.cycle_string()}, {b.cycle_string()} does not commute")

    @classmethod
    def from_uv(cls, group: PermGroup, x: Perm, y: Perm,
                u: Perm | None = None, v: Perm | None = None) -> "RecognitionInput":
        """Seeds (x, x^u), (y, y^v) and (x, y)."""
        seeds = []
        if u is not None:
            seeds.append((x, x ** u))
        if v is not None:
            seeds.append((y, y ** v))
        seeds.append((x, y))
        extra = {k: e for k, e in (("u", u), ("v", v)) if e is not None}
        return cls(group, x, y, seeds, extra)

    @classmethod
    def from_json(cls, text: str) -> "RecognitionInput":
        data = json.loads(text)
        deg = data["degree"]
        gens = [Perm.parse(s, deg) for s in data["generators"]]
        named = {k: Perm.parse(s, deg) for k, s in data.get("named", {}).items()}
        if "x" not in named or "y" not in named:
            raise DomainError("group spec must name involutions x and y")
        return cls.from_uv(PermGroup(gens, degree=deg), named["x"], named["y"],
                           named.get("u"), named.get("v"))

    def to_json(self) -> str:
        named = {"x": self.x.cycle_string(), "y": self.y.cycle_string()}
        named.update({k: e.cycle_string() for k, e in self.extra.items()})
        return json.dumps({"degree": self.group.degree,
                           "generators": [g.cycle_string() for g in self.group.generators],
                           "named": named})


@dataclass
class Hypothesis:
    name: str
    passed: bool
    witness: str = ""


@dataclass
class RecognitionReport:
    verdict: str = INCONCLUSIVE
    hypotheses: list[Hypothesis] = field(default_factory=list)
    graph_summary: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    def check(self, name: str, passed: bool, witness: str = "") -> bool:
        self.hypotheses.append(Hypothesis(name, bool(passed), witness))
        return bool(passed)

    @property
    def failed(self) -> list[Hypothesis]:
        return [h for h in self.hypotheses if not h.passed]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "hypotheses": [{"name": h.name, "passed": h.passed, "witness": h.witness}
                           for h in self.hypotheses],
            "graph_summary": self.graph_summary,
            "certificates": self.certificates,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


# --------------------------------------------------------------------------
# graphs from groups


def class_commuting_graph(g: PermGroup, x: Perm) -> BichromaticGraph:
    """Commuting graph on the conjugacy class of x."""
    if x.degree != g.degree or x not in g:
        raise DomainError("element is not in the group")
    cls = conjugacy_class(g, x)
    edges = [(a, b) for a in range(len(cls)) for b in range(a + 1, len(cls))
             if commutes(cls[a], cls[b])]
    return BichromaticGraph(len(cls), edges, labels=[c.cycle_string() for c in cls])


@dataclass
class SeededGraph:
    graph: BichromaticGraph
    vertices: list[Perm]
    action: PermGroup
    group_order: int

    @property
    def kernel_order(self) -> int:
        """Order of the kernel of the conjugation action on the vertices."""
        return self.group_order // self.action.order()


def seeded_graph_data(ri: RecognitionInput, colored: bool | None = None) -> SeededGraph:
    G = ri.group
    xs = conjugacy_class(G, ri.x)
    conj = ri.y in set(xs)
    if colored is None:
        colored = not conj
    if colored and conj:
        raise DomainError("x and y are conjugate; a two-colored graph needs non-conjugate classes")
    verts = list(xs) if conj else xs + conjugacy_class(G, ri.y)
    index = {p: i for i, p in enumerate(verts)}
    perms = []
    for s in G.generators:
        perms.append(Perm([index[p.conj(s)] for p in verts]))
    action = PermGroup(perms, degree=len(verts))
    edges: set[tuple[int, int]] = set()
    for a, b in ri.edge_seeds:
        if a not in index or b not in index:
            raise DomainError("edge seed outside the vertex classes")
        for e in orbit(action, (index[a], index[b]), "sets"):
            edges.add(tuple(sorted(e)))
    colors = None
    if colored:
        colors = [SHORT] * len(xs) + [LONG] * (len(verts) - len(xs))
    g = BichromaticGraph(len(verts), sorted(edges), colors, [p.cycle_string() for p in verts])
    return SeededGraph(g, verts, action, G.order())


def seeded_graph(ri: RecognitionInput, colored: bool | None = None) -> BichromaticGraph:
    """Vertices x^G (short) and y^G (long); edges the G-orbits of the seed pairs."""
    return seeded_graph_data(ri, colored).graph


# --------------------------------------------------------------------------
# Sym_n


def recognize_sym(ri: RecognitionInput, n: int) -> RecognitionReport:
    """Run the Sym_{n+2} pipeline on centralizer data modelled on Sym_n."""
    rep = RecognitionReport()
    G = ri.group
    if not rep.check("n at least 7", n >= 7, f"n = {n}"):
        return rep
    xs = conjugacy_class(G, ri.x)
    if not rep.check("x and y conjugate", ri.y in set(xs), "y in x^G" if ri.y in set(xs) else "y not in x^G"):
        return rep
    want = math.comb(n + 2, 2)
    if not rep.check("class size", len(xs) == want, f"|x^G| = {len(xs)}, C({n + 2},2) = {want}"):
        return rep
    data = seeded_graph_data(ri)
    g = data.graph
    rep.graph_summary = {"vertices": g.n, "edges": g.num_edges}
    if not rep.check("graph connected", is_connected(g)):
        return rep
    target = canonical_form(kneser(n, 2))
    bad = [v for v in range(g.n) if canonical_form(local_graph(g, v)) != target]
    if not rep.check(f"locally K({n},2)", not bad,
                     f"vertex {g.labels[bad[0]]} has a different local graph" if bad else "all local graphs agree"):
        return rep
    witness = is_isomorphic(g, kneser(n + 2, 2))
    if not rep.check(f"graph isomorphic to K({n + 2},2)", witness is not None):
        return rep
    rep.certificates["isomorphism"] = Perm(witness).cycle_string()
    order = G.order()
    z = center(G, within=centralizer(G, ri.x)).order()
    kernel = data.kernel_order
    rep.certificates.update({"group_order": order, "center_order": z, "kernel_order": kernel})
    if not rep.check("action kernel equals center", kernel == z, f"kernel {kernel}, |Z(G)| = {z}"):
        return rep
    if not rep.check("center trivial", z == 1, f"|Z(G)| = {z}"):
        return rep
    aut = automorphism_group(g).order()
    rep.certificates["aut_order"] = aut
    if not rep.check("faithful image is all of Aut", data.action.order() == aut,
                     f"|G/Z| = {data.action.order()}, |Aut| = {aut}"):
        return rep
    if not rep.check("order", order == math.factorial(n + 2), f"|G| = {order}"):
        return rep
    rep.verdict = f"{SYM}({n + 2})"
    return rep


# --------------------------------------------------------------------------
# W(F4)


def find_f4_coxeter_generators(G: PermGroup, short_cls: Sequence[Perm],
                               long_cls: Sequence[Perm]) -> list[Perm] | None:
    """Reflections s1, s2 (long) and s3, s4 (short) satisfying the F4 Coxeter relations."""
    def order_of(a: Perm, b: Perm) -> int:
        return (a * b).order()

    s1 = long_cls[0]
    for s2 in long_cls:
        if order_of(s1, s2) != 3:
            continue
        for s3 in short_cls:
            if order_of(s2, s3) != 4 or not commutes(s1, s3):
                continue
            for s4 in short_cls:
                if order_of(s3, s4) == 3 and commutes(s1, s4) and commutes(s2, s4):
                    gens = [s1, s2, s3, s4]
                    if PermGroup(gens, degree=G.degree).order() == G.order():
                        return gens
    return None


def find_appendix_generators(G: PermGroup, x: Perm, y: Perm) -> dict[str, Perm] | None:
    """Scan for x0, x1, y0, y1 around (x, y) satisfying the twelve-relator presentation.

    x1, y1 commute with x and y; x0 commutes with y, y0 with x, and x0 with y0.
    """
    shorts = conjugacy_class(G, x)
    longs = conjugacy_class(G, y)
    pres = appendix_f4_presentation()
    for x1 in shorts:
        if x1 == x or not (commutes(x1, x) and commutes(x1, y)):
            continue
        for y1 in longs:
            if y1 == y or not (commutes(y1, x) and commutes(y1, y) and commutes(y1, x1)):
                continue
            for x0 in shorts:
                if x0 in (x, x1) or not commutes(x0, y):
                    continue
                for y0 in longs:
                    if y0 in (y, y1) or not (commutes(y0, x) and commutes(y0, x0)):
                        continue
                    imgs = [x0, x1, y0, y1]
                    if not failed_relations(pres.relators, imgs):
                        return dict(zip(pres.generators, imgs))
    return None


def recognize_f4(ri: RecognitionInput) -> RecognitionReport:
    """Run the W(F4) pipeline: seeded graph, local check, μ, identification, group orders."""
    G = ri.group
    if ri.y in set(conjugacy_class(G, ri.x)):
        raise DomainError("x and y are conjugate; the W(F4) pipeline needs non-conjugate involutions")
    rep = RecognitionReport()
    data = seeded_graph_data(ri, colored=True)
    g = data.graph
    rep.graph_summary = {"vertices": g.n, "short": len(g.vertices_of_color(SHORT)),
                         "long": len(g.vertices_of_color(LONG)), "edges": g.num_edges}
    if not rep.check("graph connected", is_connected(g)):
        return rep
    local = is_locally_like_f4(g)
    if not rep.check("locally like W(F4)", local.ok, local.reason or "all local graphs agree"):
        return rep
    mu = mu_profile(g, check=False)
    rep.graph_summary["mu"] = mu.to_dict()
    triggers = {
        "mu = 3": mu.mu == 3,
        "order 24": g.n == 24,
        "tightly connected": is_tightly_connected(g),
        "diameter 2": diameter(g) == 2,
    }
    rep.graph_summary["triggers"] = triggers
    fired = [k for k, v in triggers.items() if v]
    if not rep.check("tightness condition", bool(fired), ", ".join(fired) or "none fired"):
        return rep
    form = canonical_form(g)
    rep.graph_summary["canonical_form"] = form.hex()
    identified = None
    for name in ("g24a", "g24b"):
        w = is_isomorphic(g, named_graph(name))
        if w is not None:
            identified = name
            rep.certificates["isomorphism"] = {"target": name, "map": Perm(w).cycle_string()}
            break
    if not rep.check("graph is g24a or g24b", identified is not None, identified or "no match"):
        return rep
    order = G.order()
    cx = centralizer(G, ri.x).order()
    cy = centralizer(G, ri.y).order()
    if not rep.check("centralizer orders 96", cx == 96 and cy == 96, f"|C(x)| = {cx}, |C(y)| = {cy}"):
        return rep
    z = center(G, within=centralizer(G, ri.x)).order()
    kernel = data.kernel_order
    rep.certificates.update({"group_order": order, "center_order": z, "kernel_order": kernel})
    if not rep.check("center of order at most 2", z in (1, 2), f"|Z(G)| = {z}"):
        return rep
    if not rep.check("action kernel equals center", kernel == z, f"kernel {kernel}, |Z(G)| = {z}"):
        return rep
    aut = automorphism_group(g).order()
    rep.certificates["aut_order"] = aut
    if not rep.check("G/Z fills Aut", data.action.order() == aut,
                     f"|G/Z| = {data.action.order()}, |Aut| = {aut}"):
        return rep
    if not rep.check("order 1152", order == 1152, f"|G| = {order}"):
        return rep
    cox = find_f4_coxeter_generators(G, conjugacy_class(G, ri.x), conjugacy_class(G, ri.y))
    ok = cox is not None
    pres = coxeter_presentation(coxeter_matrix("F4"))
    if ok:
        ok = not failed_relations(pres.relators, cox)
        rep.certificates["coxeter_generators"] = [c.cycle_string() for c in cox]
    if not rep.check("F4 Coxeter relations hold on generating reflections", ok):
        return rep
    presented = coset_enumerate(pres).index
    rep.certificates["presented_order"] = presented
    if not rep.check("presented group has order |G|", presented == order, f"{presented} cosets"):
        return rep
    rep.verdict = WF4 if identified == "g24a" else GAMMA24B
    return rep


# --------------------------------------------------------------------------
# concrete inputs


def _refl(rs, coords) -> Perm:
    return reflection_perm(rs, rs.roots[rs.index(tuple(coords))])


def symmetric_input(n: int) -> RecognitionInput:
    """Sym_n with x = (1 2), y = (3 4)."""
    G = symmetric_group(n)
    x = Perm.from_cycles([(0, 1)], n)
    y = Perm.from_cycles([(2, 3)], n)
    return RecognitionInput(G, x, y, [(x, y)])


def _bc_input(type_tag: str) -> tuple[PermGroup, dict[str, Perm]]:
    rs = build_root_system(type_tag)
    W = weyl_group(rs)
    e = lambda *t: tuple(2 * c for c in t)  # noqa: E731
    named = {
        "x": _refl(rs, e(1, 0, 0, 0)),
        "u": _refl(rs, e(1, -1, 0, 0)),
        "y": _refl(rs, e(0, 0, 1, -1)),
        "v": _refl(rs, e(0, 0, 0, 1)),
    }
    return W, named


def weyl_f4_input() -> RecognitionInput:
    """W(F4) on its 48 roots: x = s_{e1}, y = s_{e3-e4}, u = s_{e1-e2}, v = s_{e4}."""
    W, nm = _bc_input("F4")
    return RecognitionInput.from_uv(W, nm["x"], nm["y"], nm["u"], nm["v"])


def weyl_b4_input() -> RecognitionInput:
    """W(B4) with the same reflection seeds as the W(F4) input."""
    W, nm = _bc_input("B4")
    return RecognitionInput.from_uv(W, nm["x"], nm["y"], nm["u"], nm["v"])
