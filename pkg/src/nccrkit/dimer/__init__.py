"""Dimer models on the torus, their quivers, matchings and zigzags."""
from .hexagonal import all_faces_hexagonal, generate_hexagonal_dimer, hexagonal_raw
from .matchings import (
    LatticePolygon, PerfectMatching, convex_hull, describe_polygon, edge_normals,
    perfect_matchings, polygon_area, polygon_from_points, polygon_to_cone, toric_polygon,
)
from .model import BLACK, WHITE, DimerError, DimerModel, Edge, from_embedding, validate_dimer
from .quiver import (
    Arrow, Quiver, QuiverWithPotential, dual_quiver, find_quiver_isomorphism, mckay_quiver,
    quiver_isomorphic, to_dot,
)
from .report import DimerReport, steady_decision_dimer
from .zigzag import ZigzagPath, is_consistent, zigzag_paths

__all__ = [
    "BLACK", "WHITE", "Arrow", "DimerError", "DimerModel", "DimerReport", "Edge",
    "LatticePolygon", "PerfectMatching", "Quiver", "QuiverWithPotential", "ZigzagPath",
    "all_faces_hexagonal", "convex_hull", "describe_polygon", "dual_quiver", "edge_normals",
    "find_quiver_isomorphism", "from_embedding", "generate_hexagonal_dimer", "hexagonal_raw",
    "is_consistent", "mckay_quiver", "perfect_matchings", "polygon_area", "polygon_from_points",
    "polygon_to_cone", "quiver_isomorphic", "steady_decision_dimer", "to_dot", "toric_polygon",
    "validate_dimer", "zigzag_paths",
]
