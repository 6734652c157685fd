"""Exact basic Betti numbers, Hodge diamonds and Delzant-type construction
data for symplectic toric quasifolds built from simple polytopes."""

from .delzant import build_construction, fiber_point, null_subgroup_closedness
from .invariants import betti_h, betti_morse, euler, h_vector, hodge_diamond
from .morse import build_morse, choose_generic, is_generic, min_vertex, partition_faces, vertex_index
from .pipeline import analyze
from .polytope import HRep, build_face_lattice, check_simple, edge_generators, enumerate_vertices, load_hrep
from .scalar import QQ, FieldSpec, Scalar, parse_scalar, render_scalar

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "QQ", "Scalar", "parse_scalar", "render_scalar",
    "HRep", "load_hrep", "enumerate_vertices", "check_simple", "build_face_lattice", "edge_generators",
    "build_morse", "choose_generic", "is_generic", "min_vertex", "partition_faces", "vertex_index",
    "h_vector", "betti_morse", "betti_h", "euler", "hodge_diamond",
    "build_construction", "null_subgroup_closedness", "fiber_point",
    "analyze",
]
