"""Diagram constructions for the degree/diameter problem on surfaces.

The main entry points are :func:`family_diagram` (build a named family
member), :func:`expand` (turn a diagram into a graph), :func:`certify`
(verify order, degree, diameter and genus) and :func:`render_table`.
"""

from ._backend import BACKENDS, DEFAULT_BACKEND
from .diagram import ConditionReport, Diagram, DiagramEdge, Verdict, check_conditions, check_relaxed_pair, validate, weighted_distance
from .embedding import EmbeddingScheme, SurfaceSpec, euler_genus, expand_with_embedding, split_vertex, trace_faces
from .errors import InputError, ReconstructionUnavailable
from .expansion import CompoundGraph, build_pod, build_tree, expand, internal_count, pending_count
from .families import FamilySpec, family_diagram, generalized_q
from .formulas import BoundReport, bounds, family_order, improvement_ratio, moore
from .graph import DISCONNECTED, Graph, bfs, degree_profile, diameter_exact
from .search import search_labels
from .tables import VerificationCertificate, certify, render_table

__version__ = "0.1.0"

__all__ = [
    "BACKENDS", "DEFAULT_BACKEND", "DISCONNECTED",
    "BoundReport", "CompoundGraph", "ConditionReport", "Diagram", "DiagramEdge", "EmbeddingScheme",
    "FamilySpec", "Graph", "InputError", "ReconstructionUnavailable", "SurfaceSpec", "Verdict",
    "VerificationCertificate",
    "bfs", "bounds", "build_pod", "build_tree", "certify", "check_conditions", "check_relaxed_pair",
    "degree_profile", "diameter_exact", "euler_genus", "expand", "expand_with_embedding", "family_diagram",
    "family_order", "generalized_q", "improvement_ratio", "internal_count", "moore", "pending_count",
    "render_table", "search_labels", "split_vertex", "trace_faces", "validate", "weighted_distance",
]
