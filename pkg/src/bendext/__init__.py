"""Outerplanar chord drawing inside a fixed polygon, one bend per edge.

Given a biconnected outerplanar graph whose outer cycle is pre-drawn as a
simple polygon (at most one bend per outer edge), decide whether the interior
chords can be drawn inside the polygon with at most one bend each and no
crossings, and construct such a drawing when one exists.
"""

__version__ = "0.1.0"

from .drawing import ChordPath, Drawing, drawing_from_json, drawing_to_json
from .dualtree import DualTree, build_dual_tree, subtree_vertices
from .errors import BendExtError, InstanceError, InternalInvariantError
from .generator import FAMILIES, GenSpec, generate
from .geometry import Point, SimplePolygon, rational
from .instance import (
    Instance,
    instance_from_json,
    instance_to_json,
    validate_instance,
)
from .solver import (
    EdgeClass,
    RefinementState,
    bottom_up,
    classify_edge,
    choose_next_leaf,
    minimal_bend_reflex,
    solve,
    top_down,
)
from .svg import render_svg
from .verifier import (
    Membership,
    ValidationReport,
    grid_oracle,
    restricted_region_member,
    validate_drawing,
)
from .visibility import VisRegion, common_visibility, visibility_polygon

__all__ = [
    "__version__",
    "BendExtError", "InstanceError", "InternalInvariantError",
    "Point", "SimplePolygon", "rational",
    "Instance", "validate_instance", "instance_from_json", "instance_to_json",
    "DualTree", "build_dual_tree", "subtree_vertices",
    "ChordPath", "Drawing", "drawing_from_json", "drawing_to_json",
    "EdgeClass", "RefinementState", "classify_edge", "choose_next_leaf",
    "minimal_bend_reflex", "bottom_up", "top_down", "solve",
    "ValidationReport", "validate_drawing", "grid_oracle",
    "Membership", "restricted_region_member",
    "VisRegion", "visibility_polygon", "common_visibility",
    "GenSpec", "generate", "FAMILIES",
    "render_svg",
]
