"""Weyl graphs, commuting graphs of reflections, and group recognition from them."""

from __future__ import annotations

from .errors import DomainError, ParseError, ResourceError
from .permgroup import Perm, PermGroup
from .rootsys import RootSystem, build_root_system, weyl_group
from .graph import BichromaticGraph, Graph
from .iso import automorphism_group, canonical_form, is_isomorphic, max_transitive_on_neighbors
from .weyl import (inflate_k3, inflate_k6, is_locally_like_f4, mu_profile, named_graph,
                   weyl_graph)
from .coxeter import (GroupPresentation, coset_enumerate, coxeter_matrix, coxeter_presentation,
                      parse_presentation)
from .recognize import RecognitionInput, RecognitionReport, recognize_f4, recognize_sym
from .graphspec import parse_graph_spec

__version__ = "0.1.0"

__all__ = [
    "DomainError", "ParseError", "ResourceError", "Perm", "PermGroup", "RootSystem",
    "build_root_system", "weyl_group", "BichromaticGraph", "Graph", "automorphism_group",
    "canonical_form", "is_isomorphic", "max_transitive_on_neighbors", "inflate_k3",
    "inflate_k6", "is_locally_like_f4", "mu_profile", "named_graph", "weyl_graph",
    "GroupPresentation", "coset_enumerate", "coxeter_matrix", "coxeter_presentation",
    "parse_presentation", "RecognitionInput", "RecognitionReport", "recognize_f4",
    "recognize_sym", "parse_graph_spec",
]
