"""Exact rational geometry: predicates, polygons, and boolean operations."""

from .numbers import Rational, rational, rational_from_json, rational_to_json
from .primitives import (
    CCW,
    COLLINEAR,
    CW,
    Point,
    SegRel,
    Segment,
    cross,
    dot,
    line_intersection,
    on_segment,
    orientation,
    seg_rel,
    segment_common_points,
    segment_intersect,
    strictly_inside_segment,
    vec_cross,
    vec_dot,
)
from .polygon import (
    Location,
    Ring,
    SimplePolygon,
    canonical_ring,
    convex_hull,
    ear_triangles,
    first_ear_centroid,
    normalize_ring,
    point_in_polygon,
    ring_bbox,
    ring_contains,
    ring_is_simple,
    segment_in_closure,
    signed_area2,
)
from .clip import clip_halfplane
from .overlay import (
    cut_along_path,
    pinch_split,
    polygon_intersection,
    polygon_union,
    split_by_path,
)

__all__ = [
    "CCW", "CW", "COLLINEAR",
    "Rational", "rational", "rational_from_json", "rational_to_json",
    "Point", "Segment", "SegRel",
    "cross", "dot", "vec_cross", "vec_dot",
    "orientation", "seg_rel", "segment_intersect", "segment_common_points",
    "on_segment", "strictly_inside_segment", "line_intersection",
    "Location", "Ring", "SimplePolygon",
    "canonical_ring", "convex_hull", "normalize_ring", "signed_area2", "ring_bbox",
    "ring_contains", "ring_is_simple", "point_in_polygon",
    "segment_in_closure", "ear_triangles", "first_ear_centroid",
    "clip_halfplane", "polygon_intersection", "polygon_union",
    "cut_along_path", "split_by_path", "pinch_split",
]
