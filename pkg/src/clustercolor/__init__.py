"""3-colorings of plane graphs whose monochromatic components stay small."""

from .bounds import final_bound
from .generators import (
    gk_family,
    random_near_triangulation,
    random_plane_graph,
    triangle_free_family,
    triangular_grid,
)
from .induction import color_near_triangulated, color_planar, color_rotation_system
from .oracle import SearchBudget, feasible, min_max_component
from .plane import PlaneGraph, build_plane_graph
from .triangulate import near_triangulate
from .verify import check_corollary_properties, check_theorem_properties, monochromatic_components

__all__ = [
    "PlaneGraph", "build_plane_graph", "near_triangulate",
    "color_near_triangulated", "color_planar", "color_rotation_system",
    "check_theorem_properties", "check_corollary_properties", "monochromatic_components",
    "feasible", "min_max_component", "SearchBudget", "final_bound",
    "triangular_grid", "gk_family", "triangle_free_family",
    "random_near_triangulation", "random_plane_graph",
]
