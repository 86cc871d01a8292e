"""Executable versions of the appendix computations (items A.1 to A.11)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .coxeter import (appendix_f4_presentation, coset_enumerate, coxeter_matrix,
                      failed_relations, reflection_graph)
from .graph import complete, components, induced_subgraph, is_connected, local_graph, nsp, sp2
from .iso import automorphism_group, is_isomorphic, max_transitive_on_neighbors, orbits
from .recognize import find_appendix_generators, seeded_graph_data, weyl_f4_input
from .weyl import named_graph, weyl_graph


@dataclass(frozen=True)
class AppendixResult:
    item: str
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.item}  {self.title}: {self.detail}"


def _a1():
    pairs = [("E6", nsp(6, "-")), ("E7", sp2(6)), ("E8", nsp(8, "+"))]
    res = {t: is_isomorphic(weyl_graph(t), h) is not None for t, h in pairs}
    return all(res.values()), ", ".join(f"W({t}) {'≅' if ok else '≇'} {n}" for (t, _), ok, n in
                                         zip(pairs, res.values(), ("NSp-(6)", "Sp(6)", "NSp+(8)")))


def _a2():
    h3 = reflection_graph(coxeter_matrix("H3"))
    comps = components(h3)
    ok3 = h3.n == 15 and len(comps) == 5 and all(
        is_isomorphic(induced_subgraph(h3, c), complete(3)) is not None for c in comps)
    h4 = reflection_graph(coxeter_matrix("H4"))
    ok4 = h4.n == 60 and is_connected(h4) and all(
        is_isomorphic(local_graph(h4, v), h3) is not None for v in range(h4.n))
    return ok3 and ok4, f"W(H3): {h3.n} vertices, {len(comps)} triangles; W(H4): {h4.n} vertices, connected={is_connected(h4)}"


def _a3():
    a, b = named_graph("g24a"), named_graph("g24b")
    ab = is_isomorphic(a, b) is not None
    af = is_isomorphic(a, weyl_graph("F4")) is not None
    return (not ab) and af, f"g24a≅g24b={ab}, g24a≅W(F4)={af}"


def _a4():
    o = [automorphism_group(named_graph(n)).order() for n in ("g24a", "g24b")]
    return o == [576, 576], f"|Aut| = {o[0]}, {o[1]}"


def _a5():
    o = [len(orbits(named_graph(n))) for n in ("g24a", "g24b")]
    return o == [2, 2], f"orbits = {o[0]}, {o[1]}"


def _a6():
    iso = is_isomorphic(named_graph("g32a"), named_graph("g32b")) is not None
    return not iso, f"g32a≅g32b={iso}"


def _a7():
    o = [len(orbits(named_graph(n))) for n in ("g32a", "g32b")]
    return o == [2, 2], f"orbits = {o[0]}, {o[1]}"


def _stab_kernel(name: str) -> tuple[set, set, bool]:
    r = max_transitive_on_neighbors(named_graph(name))
    return {a.stabilizer_order for a in r.actions}, r.kernel_orders, bool(r)


def _a8():
    out, ok = [], True
    for n in ("g32a", "g32b"):
        st, ker, mt = _stab_kernel(n)
        ok &= st == {48} and ker == {1} and mt
        out.append(f"{n}: stabilizer {sorted(st)}, kernel {sorted(ker)}, maximally transitive={mt}")
    return ok, "; ".join(out)


def _a9():
    out, ok = [], True
    for n in ("g24a", "g24b"):
        st, ker, mt = _stab_kernel(n)
        ok &= st == {48} and ker == {2} and not mt
        out.append(f"{n}: stabilizer {sorted(st)}, kernel {sorted(ker)}, maximally transitive={mt}")
    return ok, "; ".join(out)


def _a10():
    wf4 = weyl_graph("F4")
    aut = automorphism_group(wf4).order()
    data = seeded_graph_data(weyl_f4_input(), colored=True)
    same = is_isomorphic(data.graph, wf4) is not None
    img, ker = data.action.order(), data.kernel_order
    ok = aut == 576 == 1152 // 2 and same and ker == 2 and img == aut
    return ok, f"|Aut(W(F4))| = {aut}; conjugation action of W(F4): kernel {ker}, image {img}"


def _a11():
    pres = appendix_f4_presentation()
    n = coset_enumerate(pres).index
    ri = weyl_f4_input()
    gens = find_appendix_generators(ri.group, ri.x, ri.y)
    rel_ok = gens is not None and not failed_relations(pres.relators, list(gens.values()))
    return n == 1152 and rel_ok, f"{n} cosets; relators hold on reflections of W(F4): {rel_ok}"


CHECKS: list[tuple[str, str, Callable]] = [
    ("A.1", "simply laced Weyl graphs vs symplectic graphs", _a1),
    ("A.2", "reflection graphs of H3 and H4", _a2),
    ("A.3", "g24a vs g24b vs W(F4)", _a3),
    ("A.4", "automorphism group orders of g24a, g24b", _a4),
    ("A.5", "g24a, g24b transitive per color", _a5),
    ("A.6", "g32a vs g32b", _a6),
    ("A.7", "g32a, g32b transitive per color", _a7),
    ("A.8", "g32a, g32b maximally transitive on neighbors", _a8),
    ("A.9", "g24a, g24b stabilizer action not faithful", _a9),
    ("A.10", "Aut(W(F4)) and the conjugation action", _a10),
    ("A.11", "twelve-relator presentation of W(F4)", _a11),
]


def run_appendix() -> list[AppendixResult]:
    out = []
    for item, title, fn in CHECKS:
        ok, detail = fn()
        out.append(AppendixResult(item, title, bool(ok), detail))
    return out
