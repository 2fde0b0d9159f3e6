"""Visibility regions in a simple polygon, by exact rotational sweep.

Visibility is closed: a point q is visible from p when the segment pq stays
in the closed polygon, so sightlines may run along the boundary. The sweep
rotates a ray counterclockwise around the viewpoint, keeping the edges it
crosses ordered by distance; region corners are emitted at event angles
(polygon corners grouped by exact direction). Edges collinear with the
viewpoint have zero angular span and cannot block a closed sightline, so
they are skipped outright.

For an interior viewpoint the sweep starts at a synthetic direction strictly
between two adjacent corner-direction groups (their vector sum), so no event
lies on the start ray and the wrap-around seam needs no special casing. For
a boundary viewpoint the sweep covers exactly the interior wedge, from the
direction of the next boundary point to the direction of the previous one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import List, Optional, Sequence, Tuple

from .errors import NoHit, NotSimplePolygon, PointOutside
from .geometry.numbers import Rational
from .geometry.polygon import (
    Location,
    SimplePolygon,
    canonical_ring,
    first_ear_centroid,
    normalize_ring,
    ring_contains,
    segment_in_closure,
    signed_area2,
)
from .geometry.overlay import pinch_split, polygon_intersection
from .geometry.primitives import Point, vec_cross, vec_dot


@dataclass(frozen=True)
class VisRegion:
    region: SimplePolygon
    viewpoint: Point


def _angle_cmp_from(base: Point):
    """Comparator of directions by counterclockwise angle from base, in
    [0, 2*pi). Equal directions (same ray) compare equal."""

    def half(v: Point) -> int:
        c = vec_cross(base, v)
        if c > 0:
            return 1
        if c < 0:
            return 3
        return 0 if vec_dot(base, v) > 0 else 2

    def cmp(a: Point, b: Point) -> int:
        ha, hb = half(a), half(b)
        if ha != hb:
            return -1 if ha < hb else 1
        if ha in (0, 2):
            return 0
        c = vec_cross(a, b)
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    return cmp


class _Sweep:
    """Rotational sweep state over a corner chain around viewpoint p."""

    def __init__(self, p: Point, chain: Sequence[Point]):
        # chain[0] may equal p (boundary mode); edges close the chain.
        self.p = p
        self.chain = list(chain)
        n = len(self.chain)
        self.edges: List[Tuple[Point, Point]] = [
            (self.chain[i], self.chain[(i + 1) % n]) for i in range(n)
        ]
        # Endpoint coordinates relative to p, precomputed: the ray queries
        # below run hot and should not churn through Point allocations.
        px, py = p.x, p.y
        self.rel = [(a.x - px, a.y - py, b.x - px, b.y - py)
                    for a, b in self.edges]
        self.radial = [ax * by - ay * bx == 0
                       for (ax, ay, bx, by) in self.rel]
        self.active: List[int] = []

    def _ray_point(self, edge_id: int, g: Point) -> Point:
        """Intersection of the active edge's line with the ray (p, g)."""
        ax, ay, bx, by = self.rel[edge_id]
        ca = g.x * ay - g.y * ax
        cb = g.x * by - g.y * bx
        denom = ca - cb
        assert denom != 0, "active edge parallel to sweep ray"
        s = ca / denom
        return Point(self.p.x + ax + s * (bx - ax),
                     self.p.y + ay + s * (by - ay))

    def _ray_param(self, edge_id: int, g: Point) -> Rational:
        ax, ay, bx, by = self.rel[edge_id]
        ca = g.x * ay - g.y * ax
        cb = g.x * by - g.y * bx
        denom = ca - cb
        assert denom != 0, "active edge parallel to sweep ray"
        s = ca / denom
        return g.x * (ax + s * (bx - ax)) + g.y * (ay + s * (by - ay))

    def nearest_point(self, g: Point) -> Optional[Point]:
        if not self.active:
            return None
        return self._ray_point(self.active[0], g)

    def init_straddlers(self, g: Point) -> None:
        """Activate edges properly crossing the open start ray."""
        found = []
        for eid, (ax, ay, bx, by) in enumerate(self.rel):
            if self.radial[eid]:
                continue
            ca = g.x * ay - g.y * ax
            cb = g.x * by - g.y * bx
            if (ca > 0 and cb < 0) or (ca < 0 and cb > 0):
                t = self._ray_param(eid, g)
                if t > 0:
                    found.append((t, eid))
        found.sort()
        self.active = [eid for _, eid in found]

    def process_corner(self, corner: Point, incident: List[int], g: Point) -> None:
        """Event rule: an active incident edge ends here and leaves; an
        inactive one enters only if it extends angularly ahead of the ray.
        (Backward-extending inactive edges occur only in a bounded-wedge
        sweep, where their far endpoint is never an event.)"""
        for eid in incident:
            if self.radial[eid]:
                continue
            if eid in self.active:
                self.active.remove(eid)
            else:
                a, b = self.edges[eid]
                ax, ay, bx, by = self.rel[eid]
                fx, fy = (bx, by) if a == corner else (ax, ay)
                if g.x * fy - g.y * fx > 0:
                    self._insert(eid, corner, g)

    def _insert(self, eid: int, corner: Point, g: Point) -> None:
        # Non-crossing edges keep one depth order for as long as both are
        # active, so the list is sorted along the current ray and the slot
        # can be found by binary search.
        t_new = vec_dot(g, corner - self.p)
        lo, hi = 0, len(self.active)
        while lo < hi:
            mid = (lo + hi) // 2
            other = self.active[mid]
            t_other = self._ray_param(other, g)
            if t_other < t_new:
                lo = mid + 1
            elif t_other > t_new:
                hi = mid
            else:
                # Both edges pass through `corner`: just after the group
                # angle, the nearer edge is the one whose far end makes the
                # larger counterclockwise angle with the ray.
                oa, ob = self.edges[other]
                far_other = ob if oa == corner else oa
                na, nb = self.edges[eid]
                far_new = nb if na == corner else na
                if vec_cross(far_other - corner, far_new - corner) > 0:
                    hi = mid
                else:
                    lo = mid + 1
        self.active.insert(lo, eid)


def _sweep_region(p: Point, chain: Sequence[Point], boundary_mode: bool) -> List[Point]:
    sweep = _Sweep(p, chain)
    n = len(sweep.chain)

    if boundary_mode:
        d_start = sweep.chain[1] - p
        d_end = sweep.chain[-1] - p
        event_ids = range(1, n)
    else:
        dirs = [c - p for c in sweep.chain]
        order = sorted(range(n), key=cmp_to_key(
            lambda i, j: _angle_cmp_from(Point(1, 0))(dirs[i], dirs[j])))
        groups: List[Point] = []
        base_cmp = _angle_cmp_from(Point(1, 0))
        for i in order:
            if not groups or base_cmp(groups[-1], dirs[i]) != 0:
                groups.append(dirs[i])
        if len(groups) < 2:
            raise NotSimplePolygon("interior viewpoint with collinear ring")
        d_start = groups[0] + groups[1]
        d_end = d_start
        event_ids = range(n)

    cmp = _angle_cmp_from(d_start)

    # Collect event corners within the sweep wedge, grouped by direction.
    events = []
    for i in event_ids:
        c = sweep.chain[i]
        d = c - p
        if boundary_mode and cmp(d, d_end) > 0:
            continue
        events.append((d, i))
    events.sort(key=cmp_to_key(lambda a, b: cmp(a[0], b[0])))

    grouped: List[List[int]] = []
    group_dirs: List[Point] = []
    for d, i in events:
        if group_dirs and cmp(group_dirs[-1], d) == 0:
            grouped[-1].append(i)
        else:
            group_dirs.append(d)
            grouped.append([i])
    for members in grouped:
        members.sort(key=lambda i: vec_dot(sweep.chain[i] - p, sweep.chain[i] - p))

    sweep.init_straddlers(d_start)

    out: List[Point] = []

    def emit(q: Optional[Point]) -> None:
        if q is not None and (not out or out[-1] != q):
            out.append(q)

    last = len(grouped) - 1
    for gi, members in enumerate(grouped):
        g = group_dirs[gi]
        before = sweep.nearest_point(g)
        for i in members:
            incident = [(i - 1) % n, i]
            sweep.process_corner(sweep.chain[i], incident, g)
        after = sweep.nearest_point(g)
        if not (boundary_mode and gi == 0):
            emit(before)
        if not (boundary_mode and gi == last):
            emit(after)

    if boundary_mode:
        ring = [p] + out
    else:
        ring = out
    if len(ring) > 1 and ring[0] == ring[-1]:
        ring.pop()
    return ring


def visibility_polygon(poly: SimplePolygon, p: Point) -> VisRegion:
    """Closed region of poly visible from p (inside or on the boundary)."""
    loc = poly.contains(p)
    if loc is Location.OUTSIDE:
        raise PointOutside(f"viewpoint {p!r} outside the polygon")
    if poly.is_convex():
        return VisRegion(poly, p)

    if loc is Location.ON_BOUNDARY:
        i = poly.locate_boundary(p)
        corners = poly.corners
        k = len(corners)
        if corners[i] == p:
            chain = list(corners[i:]) + list(corners[:i])
        else:
            chain = [p] + list(corners[i + 1:]) + list(corners[:i + 1])
        ring = _sweep_region(p, chain, boundary_mode=True)
    else:
        ring = _sweep_region(p, poly.corners, boundary_mode=False)

    norm = normalize_ring(ring)
    if len(norm) < 3 or signed_area2(norm) <= 0:
        raise NotSimplePolygon("degenerate visibility region")
    # The sweep emits corners in angular order around p, so the ring can
    # touch itself only at repeated vertices (two walls meeting at an
    # isolated pinch point); between its vertices it cannot cross itself.
    if len(set(norm)) == len(norm):
        region = SimplePolygon(norm, validate=False)
    else:
        # Region pinched at an isolated point: keep the piece holding p.
        for piece in pinch_split(norm):
            piece = normalize_ring(piece)
            if len(piece) >= 3 and signed_area2(piece) > 0 \
                    and ring_contains(piece, p) is not Location.OUTSIDE:
                region = SimplePolygon(piece, validate=False)
                break
        else:
            raise NotSimplePolygon("no pinch piece holds the viewpoint")
    return VisRegion(region, p)


def common_visibility(poly: SimplePolygon, u: Point, v: Point) -> List[SimplePolygon]:
    """Pieces of V(u) ∩ V(v), keeping only pieces usable as bend regions."""
    vis_u = visibility_polygon(poly, u).region
    vis_v = visibility_polygon(poly, v).region
    whole_u = vis_u.area2 == poly.area2
    whole_v = vis_v.area2 == poly.area2
    if whole_u and whole_v:
        return [SimplePolygon(canonical_ring(poly.corners), validate=False)]
    if whole_u:
        pieces = [SimplePolygon(canonical_ring(vis_v.corners), validate=False)]
    elif whole_v:
        pieces = [SimplePolygon(canonical_ring(vis_u.corners), validate=False)]
    else:
        pieces = polygon_intersection(vis_u, vis_v)
    kept = []
    for piece in pieces:
        q = first_ear_centroid(piece.corners)
        if segment_in_closure(poly.corners, u, q) and segment_in_closure(poly.corners, v, q):
            kept.append(piece)
    return kept


def _boundary_wedge(poly: SimplePolygon, pivot: Point) -> Tuple[Point, Point]:
    """Directions bounding the interior wedge at a boundary point, from the
    forward boundary direction counterclockwise to the backward one."""
    i = poly.locate_boundary(pivot)
    if i is None:
        raise PointOutside(f"pivot {pivot!r} not on the boundary")
    corners = poly.corners
    k = len(corners)
    if corners[i] == pivot:
        forward = corners[(i + 1) % k] - pivot
        backward = corners[i - 1] - pivot
    else:
        forward = corners[(i + 1) % k] - pivot
        backward = corners[i] - pivot
    return forward, backward


def rotate_ray_hit(poly: SimplePolygon, pivot: Point, start_dir: Point,
                   target: SimplePolygon, direction: str = "ccw") -> Point:
    """First point of target hit by a ray from pivot rotating from start_dir.

    Zero rotation (the start ray already meets target) returns the nearest
    intersection point on the ray. Otherwise the first contact happens at a
    target corner: take the corner of minimal rotation angle, ties broken by
    distance. Raises NoHit when the sweep would leave the pivot's interior
    wedge without touching target.
    """
    if direction not in ("ccw", "cw"):
        raise ValueError("direction must be 'ccw' or 'cw'")
    if start_dir.x == 0 and start_dir.y == 0:
        raise ValueError("start_dir must be nonzero")

    # Phase 1: intersections with the start ray itself.
    best: Optional[Tuple[Rational, Point]] = None
    ring = target.corners
    k = len(ring)
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        ca = vec_cross(start_dir, a - pivot)
        cb = vec_cross(start_dir, b - pivot)
        candidates: List[Point] = []
        if (ca > 0 and cb < 0) or (ca < 0 and cb > 0):
            s = ca / (ca - cb)
            candidates.append(Point(a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)))
        if ca == 0:
            candidates.append(a)
        if cb == 0:
            candidates.append(b)
        for q in candidates:
            t = vec_dot(start_dir, q - pivot)
            if t > 0 and (best is None or t < best[0]):
                best = (t, q)
    if best is not None:
        return best[1]

    # Phase 2: smallest rotation to a target corner. Any corner at rotation
    # zero would have been a phase-1 hit, so every candidate here needs a
    # strictly positive turn.
    base = _angle_cmp_from(start_dir)
    if direction == "ccw":
        cmp = base
    else:
        def cmp(a: Point, b: Point) -> int:
            return base(b, a)

    best_dir: Optional[Point] = None
    best_corner: Optional[Point] = None
    best_dist: Optional[Rational] = None
    for c in ring:
        if c == pivot:
            continue
        d = c - pivot
        dist = vec_dot(d, d)
        if best_dir is None:
            best_dir, best_corner, best_dist = d, c, dist
            continue
        rel = cmp(d, best_dir)
        if rel < 0 or (rel == 0 and dist < best_dist):
            best_dir, best_corner, best_dist = d, c, dist
    if best_corner is None:
        raise NoHit("target has no corners distinct from the pivot")

    # The rotation must not leave the pivot's interior wedge. Reaching the
    # wedge's far side exactly is fine; going past it is not.
    forward, backward = _boundary_wedge(poly, pivot)
    limit = backward if direction == "ccw" else forward
    if vec_cross(start_dir, limit) == 0 and vec_dot(start_dir, limit) > 0:
        raise NoHit("no room to rotate at the pivot")
    past = base(best_dir, limit) > 0 if direction == "ccw" \
        else base(best_dir, limit) < 0
    if past:
        raise NoHit("rotation left the interior wedge before the target")
    return best_corner
