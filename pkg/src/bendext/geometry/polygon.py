"""Simple polygons: normalization, validation, membership, boundary walks.

Rings are tuples of Points in counterclockwise order. SimplePolygon wraps a
ring that passed normalization (no duplicate or collinear-middle corners) and
validation (CCW, simple). Raw-ring helpers are module functions so the
overlay machinery can work on rings before they are known to be simple.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import NotSimplePolygon
from .numbers import Rational, rational
from .primitives import (
    CCW,
    COLLINEAR,
    CW,
    Point,
    SegRel,
    along_param,
    cross,
    on_segment,
    orientation,
    seg_rel,
    segment_common_points,
)

Ring = Tuple[Point, ...]


class Location(enum.Enum):
    INSIDE = "inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


def normalize_ring(points: Iterable[Point]) -> Ring:
    """Drop consecutive duplicates and collinear middle corners (cyclically).

    Only middles lying on the segment of their neighbors are dropped; a
    collinear spike (doubling back) is left in place for the simplicity
    check to reject.
    """
    ring = [p for p in points]
    changed = True
    while changed and len(ring) >= 3:
        changed = False
        out: List[Point] = []
        k = len(ring)
        for i, p in enumerate(ring):
            if p == ring[(i + 1) % k]:
                changed = True
                continue
            out.append(p)
        ring = out
        if len(ring) < 3:
            break
        out = []
        k = len(ring)
        for i, p in enumerate(ring):
            a, c = ring[i - 1], ring[(i + 1) % k]
            if a != c and cross(a, p, c) == 0 and on_segment(p, a, c):
                changed = True
                continue
            out.append(p)
        ring = out
    return tuple(ring)


def signed_area2(ring: Sequence[Point]) -> Rational:
    """Twice the signed area; positive for counterclockwise rings."""
    total = rational(0)
    k = len(ring)
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        total += a.x * b.y - a.y * b.x
    return total


def ring_bbox(ring: Sequence[Point]) -> Tuple[Rational, Rational, Rational, Rational]:
    xs = [p.x for p in ring]
    ys = [p.y for p in ring]
    return (min(xs), min(ys), max(xs), max(ys))


def ring_is_simple(ring: Sequence[Point]) -> bool:
    """Exact simplicity test with an x-interval sweep as prefilter.

    Adjacent edges must meet exactly at their shared corner; all other pairs
    must be disjoint.
    """
    k = len(ring)
    if k < 3:
        return False
    edges = []
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        if a == b:
            return False
        lox, hix = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
        loy, hiy = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
        edges.append((lox, hix, loy, hiy, a, b, i))
    edges.sort(key=lambda e: (e[0], e[1]))
    active: List[tuple] = []
    for e in edges:
        lox, hix, loy, hiy, a, b, i = e
        active = [f for f in active if f[1] >= lox]
        for f in active:
            if f[3] < loy or f[2] > hiy:
                continue
            j = f[6]
            rel = seg_rel(a, b, f[4], f[5])
            if abs(i - j) == 1 or abs(i - j) == k - 1:
                shared = ring[max(i, j)] if abs(i - j) == 1 else ring[0]
                if rel is not SegRel.ENDPOINT_TOUCH:
                    return False
                # The single shared point must be the common corner.
                pts = segment_common_points(a, b, f[4], f[5])
                if pts != (shared,):
                    return False
            elif rel is not SegRel.DISJOINT:
                return False
        active.append(e)
    return True


def ring_contains(ring: Sequence[Point], p: Point) -> Location:
    """Exact point location by crossing number, boundary special-cased."""
    k = len(ring)
    inside = False
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        if on_segment(p, a, b):
            return Location.ON_BOUNDARY
        if (a.y > p.y) != (b.y > p.y):
            # x coordinate of the edge at height p.y, compared exactly.
            t = (p.y - a.y) / (b.y - a.y)
            x_at = a.x + t * (b.x - a.x)
            if p.x < x_at:
                inside = not inside
    return Location.INSIDE if inside else Location.OUTSIDE


def segment_in_closure(ring: Sequence[Point], a: Point, b: Point) -> bool:
    """Whether the closed segment ab lies in the closed region of the ring.

    Brute predicate used as the visibility ground truth: cut the segment at
    every boundary intersection and test one midpoint per gap. Each open gap
    avoids the boundary entirely, so its midpoint classifies the whole gap.
    """
    if a == b:
        return ring_contains(ring, a) is not Location.OUTSIDE
    full = along_param(a, b, b)
    params = {rational(0), full}
    k = len(ring)
    for i in range(k):
        c, d = ring[i], ring[(i + 1) % k]
        for p in segment_common_points(a, b, c, d):
            params.add(along_param(a, b, p))
    cuts = sorted(params)
    dx, dy = b.x - a.x, b.y - a.y
    for t0, t1 in zip(cuts, cuts[1:]):
        tm = (t0 + t1) / (2 * full)
        mid = Point(a.x + tm * dx, a.y + tm * dy)
        if ring_contains(ring, mid) is Location.OUTSIDE:
            return False
    return True


def open_segment_in_interior(ring: Sequence[Point], a: Point, b: Point) -> bool:
    """Whether the open segment (a, b) lies strictly inside the ring.

    The endpoints themselves may lie on the boundary. Exact: the open segment
    must meet the boundary nowhere, and its midpoint must be interior.
    """
    if a == b:
        return False
    k = len(ring)
    for i in range(k):
        c, d = ring[i], ring[(i + 1) % k]
        for p in segment_common_points(a, b, c, d):
            if p != a and p != b:
                return False
    mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    return ring_contains(ring, mid) is Location.INSIDE


def _valid_ear(ring: Sequence[Point], i: int) -> bool:
    k = len(ring)
    a, b, c = ring[i - 1], ring[i], ring[(i + 1) % k]
    if orientation(a, b, c) != CCW:
        return False
    for j in range(k):
        p = ring[j]
        if p in (a, b, c):
            continue
        # Any other vertex inside or on the closed triangle blocks the ear.
        s1, s2, s3 = orientation(a, b, p), orientation(b, c, p), orientation(c, a, p)
        if s1 != CW and s2 != CW and s3 != CW:
            return False
    return True


def ear_triangles(ring: Sequence[Point]) -> List[Tuple[Point, Point, Point]]:
    """Full ear-clipping decomposition (deterministic first-valid-ear order)."""
    work = list(ring)
    out: List[Tuple[Point, Point, Point]] = []
    while len(work) > 3:
        k = len(work)
        clipped = False
        for i in range(k):
            a, b, c = work[i - 1], work[i], work[(i + 1) % k]
            if cross(a, b, c) == 0:
                del work[i]
                clipped = True
                break
            if _valid_ear(work, i):
                out.append((a, b, c))
                del work[i]
                clipped = True
                break
        if not clipped:
            raise NotSimplePolygon("ear clipping stuck; ring is not simple")
    if len(work) == 3 and cross(work[0], work[1], work[2]) != 0:
        out.append((work[0], work[1], work[2]))
    return out


def _centroid(a: Point, b: Point, c: Point) -> Point:
    third = rational(1, 3)
    return Point((a.x + b.x + c.x) * third, (a.y + b.y + c.y) * third)


def first_ear_centroid(ring: Sequence[Point]) -> Point:
    """A strictly interior point of the ring: centroid of its first ear."""
    work = list(ring)
    while True:
        k = len(work)
        if k < 3:
            raise NotSimplePolygon("no ear in degenerate ring")
        progressed = False
        for i in range(k):
            a, b, c = work[i - 1], work[i], work[(i + 1) % k]
            if cross(a, b, c) == 0:
                del work[i]
                progressed = True
                break
            if _valid_ear(work, i):
                return _centroid(a, b, c)
        if not progressed:
            raise NotSimplePolygon("no ear found; ring is not simple")


class SimplePolygon:
    """Validated CCW simple polygon."""

    __slots__ = ("corners", "_area2", "_bbox")

    def __init__(self, corners: Iterable[Point], validate: bool = True):
        ring = normalize_ring(corners)
        if len(ring) < 3:
            raise NotSimplePolygon("fewer than 3 corners after normalization")
        area2 = signed_area2(ring)
        if area2 <= 0:
            raise NotSimplePolygon("ring is clockwise or has zero area")
        if validate and not ring_is_simple(ring):
            raise NotSimplePolygon("ring self-intersects")
        object.__setattr__(self, "corners", ring)
        object.__setattr__(self, "_area2", area2)
        object.__setattr__(self, "_bbox", None)

    def __setattr__(self, name, value):
        raise AttributeError("SimplePolygon is immutable")

    def __eq__(self, other):
        if not isinstance(other, SimplePolygon):
            return NotImplemented
        return canonical_ring(self.corners) == canonical_ring(other.corners)

    def __hash__(self):
        return hash(canonical_ring(self.corners))

    def __repr__(self):
        return f"SimplePolygon({len(self.corners)} corners, area={self.area})"

    @property
    def area2(self) -> Rational:
        return self._area2

    @property
    def area(self) -> Rational:
        return self._area2 / 2

    @property
    def bbox(self):
        if self._bbox is None:
            object.__setattr__(self, "_bbox", ring_bbox(self.corners))
        return self._bbox

    def edges(self) -> Iterator[Tuple[Point, Point]]:
        k = len(self.corners)
        for i in range(k):
            yield self.corners[i], self.corners[(i + 1) % k]

    def contains(self, p: Point) -> Location:
        return ring_contains(self.corners, p)

    def is_convex(self) -> bool:
        k = len(self.corners)
        for i in range(k):
            if orientation(self.corners[i - 1], self.corners[i],
                           self.corners[(i + 1) % k]) != CCW:
                return False
        return True

    def locate_boundary(self, p: Point) -> Optional[int]:
        """Index i of the edge corners[i]->corners[i+1] carrying p.

        A corner is reported on its outgoing edge. None if p is not on the
        boundary.
        """
        k = len(self.corners)
        for i in range(k):
            if self.corners[i] == p:
                return i
        for i in range(k):
            if on_segment(p, self.corners[i], self.corners[(i + 1) % k]):
                return i
        return None

    def interval(self, a: Point, b: Point) -> Ring:
        """Boundary chain from a counterclockwise to b, endpoints included."""
        ia = self.locate_boundary(a)
        ib = self.locate_boundary(b)
        if ia is None or ib is None:
            raise NotSimplePolygon("interval endpoint not on boundary")
        if a == b:
            return (a,)
        k = len(self.corners)
        if ia == ib:
            pa = along_param(self.corners[ia], self.corners[(ia + 1) % k], a)
            pb = along_param(self.corners[ia], self.corners[(ia + 1) % k], b)
            if pa < pb:
                return (a, b)
        chain = [a]
        j = ia
        for _ in range(k + 1):
            j = (j + 1) % k
            corner = self.corners[j]
            if corner != chain[-1]:
                chain.append(corner)
            if corner == b:
                return tuple(chain)
            if on_segment(b, corner, self.corners[(j + 1) % k]):
                chain.append(b)
                return tuple(chain)
        raise NotSimplePolygon("interval walk failed to reach endpoint")

    def interior_point(self) -> Point:
        """Deterministic strictly interior point: centroid of the largest
        triangle of the ear-clipping fan (ties broken by clip order)."""
        best = None
        best_area = None
        for tri in ear_triangles(self.corners):
            area = cross(tri[0], tri[1], tri[2])
            if best_area is None or area > best_area:
                best_area = area
                best = tri
        assert best is not None
        return _centroid(*best)


def convex_hull(points: Sequence[Point]) -> Ring:
    """Hull corners counterclockwise (monotone chain); collinear boundary
    points dropped. Degenerate inputs give fewer than 3 points back."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def build(seq: Sequence[Point]) -> List[Point]:
        out: List[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(pts[::-1])
    hull = tuple(lower[:-1] + upper[:-1])
    return hull if len(hull) >= 3 else tuple(pts[:1] + pts[-1:])


def canonical_ring(ring: Sequence[Point]) -> Ring:
    """Rotate the ring to start at its lexicographically smallest corner."""
    lo = min(range(len(ring)), key=lambda i: (ring[i].x, ring[i].y))
    return tuple(ring[lo:]) + tuple(ring[:lo])


def point_in_polygon(p: Point, poly: SimplePolygon) -> Location:
    return poly.contains(p)
