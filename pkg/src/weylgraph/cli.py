"""Command-line front end: ``weylgraph <command> ...``.

Exit codes: 0 success or verdict reached, 1 a check failed, 2 usage or
input error, 3 a resource budget was exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .appendix import run_appendix
from .coxeter import coset_enumerate, coxeter_matrix, coxeter_presentation, parse_presentation
from .errors import DomainError, ParseError, ResourceError
from .graph import BichromaticGraph, local_graph
from .graphspec import parse_graph_spec
from .iso import automorphism_group, canonical_form, is_isomorphic, orbits
from .permgroup import Perm
from .recognize import INCONCLUSIVE, RecognitionInput, recognize_f4, recognize_sym
from .weyl import (LONG, SHORT, f4_structure, inflate_k3, inflate_k6, is_locally_like_f4,
                   local_profile, mu_profile)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# inflation variants selected by --lemma
INFLATIONS = {"34": inflate_k6, "35": inflate_k3}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _digest(b: bytes) -> str:
    return hashlib.sha256(b).hexdigest()[:16]


def _emit(g: BichromaticGraph, fmt: str) -> str:
    if fmt == "json":
        return g.to_json()
    if fmt == "dot":
        return g.to_dot()
    return g.to_graph6()


def _color_name(c) -> str:
    return {SHORT: "short", LONG: "long", None: "uncolored"}[c]


def cmd_build(a) -> int:
    print(_emit(parse_graph_spec(a.spec), a.format))
    return EXIT_OK


def cmd_local(a) -> int:
    g = parse_graph_spec(a.spec)
    prof = local_profile(g)
    print(f"graph: {g.n} vertices, {g.num_edges} edges")
    for c in sorted(prof.forms, key=_color_name):
        verts = [v for v in range(g.n) if g.colors[v] == c]
        sizes = sorted({(local_graph(g, v).n, local_graph(g, v).num_edges) for v in verts})
        shapes = ", ".join(f"{n}v/{m}e" for n, m in sizes)
        forms = sorted(_digest(f) for f in prof.forms[c])
        print(f"{_color_name(c)}: {len(verts)} vertices, {len(forms)} local class(es) [{shapes}] "
              f"{' '.join(forms)}")
    print(f"locally homogeneous: {prof.is_homogeneous}")
    return EXIT_OK if prof.is_homogeneous else EXIT_FAIL


def cmd_check_f4(a) -> int:
    g = parse_graph_spec(a.spec)
    chk = is_locally_like_f4(g)
    print(f"graph: {g.n} vertices, {g.num_edges} edges")
    if not chk:
        print(f"locally like W(F4): False ({chk.reason})")
        return EXIT_FAIL
    s = f4_structure(g)
    print("locally like W(F4): True")
    print(f"short/long: {s.n_short}/{s.n_long} (balanced={s.balanced})")
    print(f"order divisible by 8 and >= 24: {s.order_ok}")
    print(f"monochromatic components are 4-cliques: {s.components_are_4cliques}")
    print(f"long neighbors per short 4-clique: {sorted(set(s.long_neighbors_per_short_clique))}")
    return EXIT_OK if s.ok else EXIT_FAIL


def cmd_mu(a) -> int:
    g = parse_graph_spec(a.spec)
    prof = mu_profile(g)
    out = prof.to_dict()
    out["mu_s+mu_l"] = {str(k): v for k, v in sorted(prof.mu_sum_values.items())}
    print(json.dumps(out, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_iso(a) -> int:
    g, h = parse_graph_spec(a.a), parse_graph_spec(a.b)
    m = is_isomorphic(g, h, respect_colors=not a.ignore_colors)
    if m is None:
        print("not isomorphic")
        return EXIT_FAIL
    print("isomorphic")
    print(f"witness: {Perm(m).cycle_string()}")
    return EXIT_OK


def cmd_aut(a) -> int:
    g = parse_graph_spec(a.spec)
    rc = not a.ignore_colors
    grp = automorphism_group(g, respect_colors=rc)
    orbs = orbits(g, respect_colors=rc)
    print(f"order: {grp.order()}")
    print(f"orbits: {len(orbs)} of sizes {sorted(len(o) for o in orbs)}")
    print(f"canonical form: {_digest(canonical_form(g, respect_colors=rc))}")
    for p in grp.generators:
        print(f"generator: {p.cycle_string()}")
    return EXIT_OK


def cmd_inflate(a) -> int:
    g = INFLATIONS[a.lemma](parse_graph_spec(a.spec), seed=a.seed)
    print(_emit(g, a.format))
    return EXIT_OK


def cmd_cosets(a) -> int:
    if a.presentation:
        pres = parse_presentation(Path(a.presentation).read_text())
        label = a.presentation
    else:
        pres = coxeter_presentation(coxeter_matrix(a.diagram))
        label = a.diagram
    t = coset_enumerate(pres, max_cosets=a.max)
    print(f"{label}: {pres.ngens} generators, {len(pres.relators)} relators")
    print(f"index of trivial subgroup: {t.index}")
    print(f"cosets defined: {t.defined}")
    return EXIT_OK


def cmd_recognize(a) -> int:
    ri = RecognitionInput.from_json(Path(a.group).read_text())
    if a.kind == "sym":
        n = a.n if a.n is not None else ri.group.degree - 2
        rep = recognize_sym(ri, n)
    else:
        rep = recognize_f4(ri)
    print(rep.to_json())
    return EXIT_FAIL if rep.verdict == INCONCLUSIVE else EXIT_OK


def cmd_verify_appendix(a) -> int:
    res = run_appendix()
    for r in res:
        print(r.line())
    passed = sum(r.passed for r in res)
    print(f"{passed}/{len(res)} passed")
    return EXIT_OK if passed == len(res) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weylgraph", description="Weyl graphs, commuting graphs and their recognition.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("build", help="construct a graph and print it")
    s.add_argument("spec")
    s.add_argument("--format", choices=("json", "dot", "graph6"), default="json")
    s.set_defaults(fn=cmd_build)

    for name, fn, hlp in (("local", cmd_local, "local graph classes per color"),
                          ("check-f4", cmd_check_f4, "test for being locally like W(F4)"),
                          ("mu", cmd_mu, "common-neighbor profile of distance-2 pairs")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("spec")
        s.set_defaults(fn=fn)

    s = sub.add_parser("iso", help="isomorphism test with witness")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--ignore-colors", action="store_true")
    s.set_defaults(fn=cmd_iso)

    s = sub.add_parser("aut", help="automorphism group")
    s.add_argument("spec")
    s.add_argument("--ignore-colors", action="store_true")
    s.set_defaults(fn=cmd_aut)

    s = sub.add_parser("inflate", help="inflate a bipartite graph to one locally like W(F4)")
    s.add_argument("spec")
    s.add_argument("--lemma", choices=sorted(INFLATIONS), required=True,
                   help="34: input locally a 6-coclique; 35: input locally a 3-coclique")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=("json", "dot", "graph6"), default="json")
    s.set_defaults(fn=cmd_inflate)

    s = sub.add_parser("cosets", help="Todd-Coxeter enumeration over the trivial subgroup")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--diagram")
    src.add_argument("--presentation")
    s.add_argument("--max", type=int, default=1_000_000)
    s.set_defaults(fn=cmd_cosets)

    s = sub.add_parser("recognize", help="recognize a group from its commuting graph")
    s.add_argument("kind", choices=("sym", "f4"))
    s.add_argument("--group", required=True)
    s.add_argument("--n", type=int, default=None, help="target Sym(n+2); default degree - 2")
    s.set_defaults(fn=cmd_recognize)

    s = sub.add_parser("verify-appendix", help="run the appendix computations")
    s.set_defaults(fn=cmd_verify_appendix)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
