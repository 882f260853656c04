"""Pairs of labels from ``{1..5}`` that cover every closed neighborhood.

Constructs such configurations on ``K_{1,6}``-free graphs of minimum degree
at least two, identifies the eight exceptional graphs, and checks results
against an exact backtracking oracle.
"""

from __future__ import annotations

from .graph import ExceptionalKind, Graph, build_graph, detect_exceptional, parse_edge_list
from .labeling import ALL_PAIRS, LabelPair, is_configuration, verify
from .oracle import BACKEND, exact_solve
from .results import SolveResult, Status
from .solver import make_r_configuration, solve

__all__ = [
    "ALL_PAIRS",
    "BACKEND",
    "ExceptionalKind",
    "Graph",
    "LabelPair",
    "SolveResult",
    "Status",
    "build_graph",
    "detect_exceptional",
    "exact_solve",
    "is_configuration",
    "make_r_configuration",
    "parse_edge_list",
    "solve",
    "verify",
]
