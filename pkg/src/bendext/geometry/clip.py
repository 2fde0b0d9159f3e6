"""Closed half-plane clipping of a simple polygon.

Implemented as an exact intersection with a large convex clip polygon (the
half-plane restricted to a padded bounding box of the input), so multi-piece
results and shared-boundary degeneracies are all handled by the one overlay
engine.
"""

from __future__ import annotations

from typing import List, Tuple

from .numbers import rational
from .primitives import CCW, Point, line_intersection, orientation
from .polygon import SimplePolygon, signed_area2
from .overlay import polygon_intersection


def _halfplane_rect(poly: SimplePolygon, line: Tuple[Point, Point], keep: int) -> List[Point]:
    """Sutherland-Hodgman clip of a padded bbox rectangle by the half-plane.

    Convex input, convex clip region: SH is exact and single-piece here.
    """
    x0, y0, x1, y1 = poly.bbox
    pad = rational(1)
    rect = [
        Point(x0 - pad, y0 - pad),
        Point(x1 + pad, y0 - pad),
        Point(x1 + pad, y1 + pad),
        Point(x0 - pad, y1 + pad),
    ]
    a, b = line
    if keep != CCW:
        a, b = b, a  # keep the left side of the reversed line
    out: List[Point] = []
    k = len(rect)
    for i in range(k):
        p, q = rect[i], rect[(i + 1) % k]
        sp = orientation(a, b, p)
        sq = orientation(a, b, q)
        if sp >= 0:
            out.append(p)
        if sp * sq < 0:
            cut = line_intersection(p, q, a, b)
            assert cut is not None
            out.append(cut)
    return out


def clip_halfplane(poly: SimplePolygon, line: Tuple[Point, Point], keep: int = CCW) -> List[SimplePolygon]:
    """Pieces of poly in the closed half-plane on the `keep` side of the
    directed line (CCW = left). Zero-interior pieces are dropped."""
    if line[0] == line[1]:
        raise ValueError("half-plane line needs two distinct points")
    ring = _halfplane_rect(poly, line, keep)
    if len(ring) < 3 or signed_area2(ring) <= 0:
        return []
    return polygon_intersection(poly, SimplePolygon(ring))
