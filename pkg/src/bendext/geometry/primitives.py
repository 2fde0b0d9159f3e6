"""Points, orientation, and segment predicates over exact rationals.

Every predicate here is decided by exact integer/rational arithmetic; there
is no epsilon anywhere. Orientation results use the int constants CCW (+1),
CW (-1), COLLINEAR (0) so they can be combined by sign arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from .numbers import Rational, rational

CCW = 1
CW = -1
COLLINEAR = 0


class Point:
    """Immutable exact point; also used as a 2-vector where convenient."""

    __slots__ = ("x", "y", "_hash")

    def __init__(self, x, y):
        object.__setattr__(self, "x", x if type(x) is Rational else rational(x))
        object.__setattr__(self, "y", y if type(y) is Rational else rational(y))

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        # Computed on first use: most points are transient vector values
        # that are never hashed, and the rational hash is not cheap.
        try:
            return self._hash
        except AttributeError:
            h = hash((self.x, self.y))
            object.__setattr__(self, "_hash", h)
            return h

    def __lt__(self, other):
        return (self.x, self.y) < (other.x, other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, factor) -> "Point":
        factor = rational(factor)
        return Point(self.x * factor, self.y * factor)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point


class SegRel(enum.Enum):
    DISJOINT = "disjoint"
    ENDPOINT_TOUCH = "endpoint_touch"
    PROPER_CROSS = "proper_cross"
    OVERLAP = "overlap"


def cross(o: Point, a: Point, b: Point) -> Rational:
    """Exact cross product (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def dot(o: Point, a: Point, b: Point) -> Rational:
    """Exact dot product (a - o) . (b - o)."""
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)


def vec_cross(u: Point, v: Point) -> Rational:
    return u.x * v.y - u.y * v.x


def vec_dot(u: Point, v: Point) -> Rational:
    return u.x * v.x + u.y * v.y


def orientation(a: Point, b: Point, c: Point) -> int:
    value = cross(a, b, c)
    if value > 0:
        return CCW
    if value < 0:
        return CW
    return COLLINEAR


def collinear(a: Point, b: Point, c: Point) -> bool:
    return cross(a, b, c) == 0


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment ab (collinearity included in the test)."""
    if cross(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def strictly_inside_segment(p: Point, a: Point, b: Point) -> bool:
    return on_segment(p, a, b) and p != a and p != b


def along_param(a: Point, b: Point, p: Point) -> Rational:
    """Monotone parameter of p along the line a->b (0 at a, positive toward b).

    Only meaningful for p collinear with ab; used to sort cut points.
    """
    return dot(a, b, p)


def seg_rel(a: Point, b: Point, c: Point, d: Point) -> SegRel:
    """Classify how closed segments ab and cd meet."""
    # Bounding-box reject: comparisons are much cheaper than the four
    # orientation products below.
    if (max(a.x, b.x) < min(c.x, d.x) or max(c.x, d.x) < min(a.x, b.x)
            or max(a.y, b.y) < min(c.y, d.y) or max(c.y, d.y) < min(a.y, b.y)):
        return SegRel.DISJOINT
    d1 = orientation(c, d, a)
    d2 = orientation(c, d, b)
    d3 = orientation(a, b, c)
    d4 = orientation(a, b, d)

    if d1 != d2 and d3 != d4 and d1 != COLLINEAR and d2 != COLLINEAR \
            and d3 != COLLINEAR and d4 != COLLINEAR:
        return SegRel.PROPER_CROSS

    if d1 == 0 and d2 == 0 and d3 == 0 and d4 == 0:
        # Same supporting line: compare 1D intervals along it.
        axis_lo_ab, axis_hi_ab = sorted((along_param(a, b, a), along_param(a, b, b)))
        axis_lo_cd, axis_hi_cd = sorted((along_param(a, b, c), along_param(a, b, d)))
        lo = max(axis_lo_ab, axis_lo_cd)
        hi = min(axis_hi_ab, axis_hi_cd)
        if lo > hi:
            return SegRel.DISJOINT
        if lo == hi:
            return SegRel.ENDPOINT_TOUCH
        return SegRel.OVERLAP

    # At least one endpoint is collinear with the other segment; the
    # intersection, if any, is a single point at that endpoint.
    if (d1 == 0 and on_segment(a, c, d)) or (d2 == 0 and on_segment(b, c, d)) \
            or (d3 == 0 and on_segment(c, a, b)) or (d4 == 0 and on_segment(d, a, b)):
        return SegRel.ENDPOINT_TOUCH
    return SegRel.DISJOINT


def segment_intersect(s: Segment, t: Segment) -> SegRel:
    return seg_rel(s.a, s.b, t.a, t.b)


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> Optional[Point]:
    """Intersection point of the infinite lines ab and cd; None if parallel."""
    rx, ry = b.x - a.x, b.y - a.y
    sx, sy = d.x - c.x, d.y - c.y
    denom = rx * sy - ry * sx
    if denom == 0:
        return None
    t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom
    return Point(a.x + t * rx, a.y + t * ry)


def segment_common_points(a: Point, b: Point, c: Point, d: Point) -> Tuple[Point, ...]:
    """Endpoints of the (possibly degenerate) intersection of closed ab, cd.

    Proper cross and endpoint touch yield one point; collinear overlap yields
    the overlap's two distinct endpoints; disjoint yields nothing.
    """
    rel = seg_rel(a, b, c, d)
    if rel is SegRel.DISJOINT:
        return ()
    if rel is SegRel.PROPER_CROSS:
        p = line_intersection(a, b, c, d)
        assert p is not None
        return (p,)
    if rel is SegRel.ENDPOINT_TOUCH:
        for p in (a, b):
            if on_segment(p, c, d):
                return (p,)
        for p in (c, d):
            if on_segment(p, a, b):
                return (p,)
        raise AssertionError("endpoint touch without a touching endpoint")
    # Overlap: the shared interval's endpoints, sorted along ab.
    points = [p for p in (a, b, c, d) if on_segment(p, a, b) and on_segment(p, c, d)]
    points.sort(key=lambda p: along_param(a, b, p))
    lo, hi = points[0], points[-1]
    assert lo != hi
    return (lo, hi)
