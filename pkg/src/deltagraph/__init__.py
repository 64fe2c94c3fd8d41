"""Free vertices, diameter and vertex connectivity of finite simple graphs.

``analyze`` computes the triple (f, d, k) of a graph, ``feasible`` decides
whether a connected non-complete graph on n vertices can realize a given
triple, and ``construct_witness`` builds one.
"""

from .graph import Graph, decode_graph6, encode_graph6
from .invariants import AnalysisReport, DeltaTriple, analyze
from .realizability import FeasibilityVerdict, Query, WitnessRecipe, construct_witness, feasible

__all__ = [
    "AnalysisReport",
    "DeltaTriple",
    "FeasibilityVerdict",
    "Graph",
    "Query",
    "WitnessRecipe",
    "analyze",
    "construct_witness",
    "decode_graph6",
    "encode_graph6",
    "feasible",
]
