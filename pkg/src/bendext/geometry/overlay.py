"""Exact overlay of polygon rings: intersection, union, and path splitting.

The engine builds the full arrangement of the input chains (closed rings or
an open path): every cross-input intersection point splits the edges, the
split edges are deduplicated into an undirected planar graph, and faces are
traced with the left-hand rule over angularly sorted darts. A face is
classified against an input by the direction its cycle traverses a tagged
sub-edge (the face sits left of its darts, a CCW input's interior left of its
own traversal); a cycle that never touches the input is settled by sampling
one dart midpoint, a point no input boundary can pass through because
sub-edges are split at every cross-input intersection. The midpoint rule
stays correct when one input nests strictly inside a traced cycle, where an
interior sample point could land in the nested region.

Faces are connected open regions, so a region touching itself at isolated
points comes out as separate faces (pinch_split covers the defensive cases).
No floating point anywhere.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Dict, List, Sequence, Set, Tuple

from ..errors import NotSimplePolygon, PathNotInside, PathSelfIntersects
from .primitives import (
    Point,
    SegRel,
    along_param,
    on_segment,
    seg_rel,
    segment_common_points,
    vec_cross,
    vec_dot,
)
from .polygon import (
    Location,
    Ring,
    SimplePolygon,
    canonical_ring,
    normalize_ring,
    ring_contains,
    signed_area2,
)

Dart = Tuple[int, int]


class _Chain:
    """One input: a closed ring or an open path, as a list of points."""

    __slots__ = ("points", "closed")

    def __init__(self, points: Sequence[Point], closed: bool):
        self.points = list(points)
        self.closed = closed

    def edges(self) -> List[Tuple[Point, Point]]:
        pts = self.points
        out = []
        last = len(pts) if self.closed else len(pts) - 1
        for i in range(last):
            a, b = pts[i], pts[(i + 1) % len(pts)]
            if a != b:
                out.append((a, b))
        return out


def _cross_input_cuts(edge_lists: List[List[Tuple[Point, Point]]]) -> Dict[Tuple[int, int], List[Point]]:
    """Intersection points between edges of different inputs, keyed by
    (input index, edge index). X-interval sweep prefilters the exact tests."""
    items = []
    for tag, edges in enumerate(edge_lists):
        for idx, (a, b) in enumerate(edges):
            lox, hix = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
            loy, hiy = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
            items.append((lox, hix, loy, hiy, a, b, tag, idx))
    items.sort(key=lambda e: (e[0], e[1]))
    cuts: Dict[Tuple[int, int], List[Point]] = {}
    active: List[tuple] = []
    for item in items:
        lox, hix, loy, hiy, a, b, tag, idx = item
        active = [f for f in active if f[1] >= lox]
        for f in active:
            if f[6] == tag or f[3] < loy or f[2] > hiy:
                continue
            for p in segment_common_points(a, b, f[4], f[5]):
                cuts.setdefault((tag, idx), []).append(p)
                cuts.setdefault((f[6], f[7]), []).append(p)
        active.append(item)
    return cuts


class Arrangement:
    """Planar subdivision induced by the input chains."""

    def __init__(self, chains: List[_Chain]):
        self.chains = chains
        edge_lists = [c.edges() for c in chains]
        cuts = _cross_input_cuts(edge_lists)

        # Split each edge at its cut points; deduplicate coincident sub-edges
        # across inputs (collinear shared boundary) into one undirected edge.
        # Each tag records whether it traverses the key first-to-second, which
        # face classification reads back.
        sub_edges: Dict[Tuple[Point, Point], Dict[int, bool]] = {}
        for tag, edges in enumerate(edge_lists):
            for idx, (a, b) in enumerate(edges):
                pts = {a, b} | set(cuts.get((tag, idx), ()))
                ordered = sorted(pts, key=lambda p: along_param(a, b, p))
                for u, v in zip(ordered, ordered[1:]):
                    key = (u, v) if u < v else (v, u)
                    sub_edges.setdefault(key, {})[tag] = (u == key[0])
        self.sub_edge_tags = sub_edges

        points = sorted({p for key in sub_edges for p in key})
        self.points: List[Point] = points
        self.point_id: Dict[Point, int] = {p: i for i, p in enumerate(points)}

        self.out_darts: Dict[int, List[Dart]] = {i: [] for i in range(len(points))}
        for (u, v) in sub_edges:
            ui, vi = self.point_id[u], self.point_id[v]
            self.out_darts[ui].append((ui, vi))
            self.out_darts[vi].append((vi, ui))

        def angle_cmp(d1: Dart, d2: Dart) -> int:
            p = points[d1[0]]
            a = points[d1[1]] - p
            b = points[d2[1]] - p
            ha = 0 if (a.y > 0 or (a.y == 0 and a.x > 0)) else 1
            hb = 0 if (b.y > 0 or (b.y == 0 and b.x > 0)) else 1
            if ha != hb:
                return -1 if ha < hb else 1
            c = vec_cross(a, b)
            if c > 0:
                return -1
            if c < 0:
                return 1
            return 0

        for darts in self.out_darts.values():
            darts.sort(key=cmp_to_key(angle_cmp))
        self._pos = {vid: {d: i for i, d in enumerate(darts)}
                     for vid, darts in self.out_darts.items()}

        # Trace faces with interior on the left: the dart after (u -> v) is
        # the clockwise predecessor of (v -> u) around v.
        self.faces: List[List[int]] = []
        visited: Set[Dart] = set()
        for vid in range(len(points)):
            for start in self.out_darts[vid]:
                if start in visited:
                    continue
                cycle: List[int] = []
                d = start
                while True:
                    visited.add(d)
                    cycle.append(d[0])
                    darts_at = self.out_darts[d[1]]
                    i = self._pos[d[1]][(d[1], d[0])]
                    d = darts_at[(i - 1) % len(darts_at)]
                    if d == start:
                        break
                self.faces.append(cycle)

    def face_ring(self, face: List[int]) -> Ring:
        return tuple(self.points[i] for i in face)


def pinch_split(ring: Sequence[Point]) -> List[Ring]:
    """Split a ring at repeated vertices into vertex-disjoint sub-rings."""
    ring = list(ring)
    seen: Dict[Point, int] = {}
    for i, p in enumerate(ring):
        if p in seen:
            j = seen[p]
            inner = ring[j:i]
            outer = ring[:j] + ring[i:]
            return pinch_split(inner) + pinch_split(outer)
        seen[p] = i
    return [tuple(ring)]


def _face_pieces(ring: Ring) -> List[Ring]:
    """Normalize and pinch-split one traced face ring into clean sub-rings."""
    out = []
    for sub in pinch_split(ring):
        norm = normalize_ring(sub)
        if len(norm) >= 3 and signed_area2(norm) > 0:
            out.append(norm)
    return out


def _cycle_inside(arr: Arrangement, face: List[int], tag: int, ring: Ring) -> bool:
    """Whether the region left of this traced cycle lies inside the tagged
    input. Works for negative cycles too, where the left side is the region
    surrounding the cycle's component."""
    k = len(face)
    for i in range(k):
        u = arr.points[face[i]]
        v = arr.points[face[(i + 1) % k]]
        key = (u, v) if u < v else (v, u)
        dirs = arr.sub_edge_tags[key]
        if tag in dirs:
            return dirs[tag] == (u == key[0])
    u, v = arr.points[face[0]], arr.points[face[1]]
    mid = Point((u.x + v.x) / 2, (u.y + v.y) / 2)
    loc = ring_contains(ring, mid)
    assert loc is not Location.ON_BOUNDARY, "sub-edge not split at a crossing"
    return loc is Location.INSIDE


def _sorted_pieces(rings: List[Ring]) -> List[SimplePolygon]:
    # Simple by construction: traced faces only meet at arrangement points
    # (every crossing was cut), and pinch_split removed repeated vertices.
    canon = [canonical_ring(r) for r in rings]
    canon.sort(key=lambda r: [(p.x, p.y) for p in r])
    return [SimplePolygon(r, validate=False) for r in canon]


def polygon_intersection(a: SimplePolygon, b: SimplePolygon) -> List[SimplePolygon]:
    """Positive-area pieces of a ∩ b, deterministically ordered."""
    ax0, ay0, ax1, ay1 = a.bbox
    bx0, by0, bx1, by1 = b.bbox
    if ax1 < bx0 or bx1 < ax0 or ay1 < by0 or by1 < ay0:
        return []
    if canonical_ring(a.corners) == canonical_ring(b.corners):
        return [SimplePolygon(canonical_ring(a.corners), validate=False)]
    arr = Arrangement([_Chain(a.corners, True), _Chain(b.corners, True)])
    kept: List[Ring] = []
    for face in arr.faces:
        ring = arr.face_ring(face)
        if signed_area2(ring) <= 0:
            continue
        if (_cycle_inside(arr, face, 0, a.corners)
                and _cycle_inside(arr, face, 1, b.corners)):
            kept.extend(_face_pieces(ring))
    return _sorted_pieces(kept)


def polygon_union(polys: Sequence[SimplePolygon]) -> Tuple[List[SimplePolygon], List[Ring]]:
    """Union of the inputs: (outer pieces, hole rings).

    Assembled by walking the darts that border a kept face on the left and a
    dropped face on the right; positive cycles are outer boundaries, negative
    cycles are holes.
    """
    if not polys:
        return [], []
    if len(polys) == 1:
        return [SimplePolygon(canonical_ring(polys[0].corners), validate=False)], []
    rings = [p.corners for p in polys]
    arr = Arrangement([_Chain(r, True) for r in rings])

    dart_in_union: Dict[Dart, bool] = {}
    for face in arr.faces:
        inside = any(_cycle_inside(arr, face, t, r) for t, r in enumerate(rings))
        k = len(face)
        for i in range(k):
            dart_in_union[(face[i], face[(i + 1) % k])] = inside

    boundary = {d for d, flag in dart_in_union.items()
                if flag and not dart_in_union.get((d[1], d[0]), False)}
    outers: List[Ring] = []
    holes: List[Ring] = []
    visited: Set[Dart] = set()
    for start in sorted(boundary):
        if start in visited:
            continue
        cycle: List[Point] = []
        d = start
        guard = 0
        while True:
            visited.add(d)
            cycle.append(arr.points[d[0]])
            darts_at = arr.out_darts[d[1]]
            i = arr._pos[d[1]][(d[1], d[0])]
            for step in range(1, len(darts_at) + 1):
                cand = darts_at[(i - step) % len(darts_at)]
                if cand in boundary:
                    d = cand
                    break
            else:
                raise NotSimplePolygon("union boundary walk dead-ended")
            guard += 1
            if guard > len(boundary) + 1:
                raise NotSimplePolygon("union boundary walk cycled")
            if d == start:
                break
        area = signed_area2(cycle)
        if area > 0:
            outers.extend(_face_pieces(tuple(cycle)))
        elif area < 0:
            holes.append(tuple(cycle))
    return _sorted_pieces(outers), holes


def _validate_path(path: Sequence[Point]) -> None:
    if len(path) < 2:
        raise PathNotInside("path needs at least two points")
    for a, b in zip(path, path[1:]):
        if a == b:
            raise PathSelfIntersects("zero-length path segment")
    k = len(path) - 1
    for i in range(k):
        for j in range(i + 1, k):
            rel = seg_rel(path[i], path[i + 1], path[j], path[j + 1])
            if j == i + 1:
                if rel is not SegRel.ENDPOINT_TOUCH:
                    raise PathSelfIntersects("consecutive path segments overlap")
            elif rel is not SegRel.DISJOINT:
                raise PathSelfIntersects("path segments intersect")


def cut_along_path(poly: SimplePolygon, path: Sequence[Point]) -> Tuple[List[SimplePolygon], List[SimplePolygon]]:
    """Pieces of poly on the left and on the right of the directed path.

    Tolerant core: path vertices may lie on the boundary and the cut may
    pinch. A face's side comes from the direction its boundary traverses path
    sub-edges (a face whose boundary runs a path sub-edge forward lies LEFT
    of the path); faces touching the path at vertices only are assigned by
    the angular wedge rule at a shared vertex.
    """
    _validate_path(path)
    arr = Arrangement([_Chain(poly.corners, True), _Chain(list(path), False)])

    # Path sub-edges, oriented along the path direction.
    path_darts: Set[Dart] = set()
    for a, b in zip(path, path[1:]):
        pts = {a, b}
        for (u, v), tags in arr.sub_edge_tags.items():
            if 1 in tags and on_segment(u, a, b) and on_segment(v, a, b):
                pts.add(u)
                pts.add(v)
        ordered = sorted(pts, key=lambda p: along_param(a, b, p))
        for u, v in zip(ordered, ordered[1:]):
            path_darts.add((arr.point_id[u], arr.point_id[v]))

    left: List[Ring] = []
    right: List[Ring] = []
    for face in arr.faces:
        ring = arr.face_ring(face)
        if signed_area2(ring) <= 0:
            continue
        pieces = _face_pieces(ring)
        if not pieces:
            continue
        if not _cycle_inside(arr, face, 0, poly.corners):
            continue
        side = _face_side(arr, face, path_darts, path)
        (left if side == "left" else right).extend(pieces)
    return _sorted_pieces(left), _sorted_pieces(right)


def _face_side(arr: Arrangement, face: List[int], path_darts: Set[Dart], path: Sequence[Point]) -> str:
    k = len(face)
    for i in range(k):
        d = (face[i], face[(i + 1) % k])
        if d in path_darts:
            return "left"
        if (d[1], d[0]) in path_darts:
            return "right"
    # The face touches the path at vertices only. At a vertex the path passes
    # through, the face's wedge lies strictly between the outgoing path dart
    # and the reversed incoming one on exactly one side.
    path_ids = {arr.point_id[p] for p in path if p in arr.point_id}
    for i in range(k):
        vid = face[i]
        if vid not in path_ids:
            continue
        incoming = [d for d in path_darts if d[1] == vid]
        outgoing = [d for d in path_darts if d[0] == vid]
        if not incoming or not outgoing:
            continue
        p = arr.points[vid]
        d_out = arr.points[outgoing[0][1]] - p
        d_in_rev = arr.points[incoming[0][0]] - p
        w = arr.points[face[(i + 1) % k]] - p
        return "left" if _ccw_between(d_out, w, d_in_rev) else "right"
    raise PathNotInside("face shares nothing with the cutting path")


def _ccw_between(start: Point, probe: Point, end: Point) -> bool:
    """probe direction strictly inside the CCW wedge from start to end."""
    c_se = vec_cross(start, end)
    c_sp = vec_cross(start, probe)
    c_pe = vec_cross(probe, end)
    if c_se > 0:
        return c_sp > 0 and c_pe > 0
    if c_se < 0:
        return c_sp > 0 or c_pe > 0
    # start and end collinear: zero wedge (same direction) or a half turn.
    if vec_dot(start, end) > 0:
        return False
    return c_sp > 0


def split_by_path(poly: SimplePolygon, path: Sequence[Point]) -> Tuple[SimplePolygon, SimplePolygon]:
    """Strict two-piece split: endpoints on the boundary, interior strictly
    inside, no self-intersection. Returns (left piece, right piece)."""
    _validate_path(path)
    if poly.locate_boundary(path[0]) is None or poly.locate_boundary(path[-1]) is None:
        raise PathNotInside("path endpoints must lie on the boundary")
    for p in path[1:-1]:
        if poly.contains(p) is not Location.INSIDE:
            raise PathNotInside(f"path point {p!r} not strictly inside")
    for a, b in zip(path, path[1:]):
        mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
        if poly.contains(mid) is Location.OUTSIDE:
            raise PathNotInside("path segment leaves the polygon")
    left, right = cut_along_path(poly, path)
    if len(left) != 1 or len(right) != 1:
        raise PathNotInside(
            f"path does not split the polygon into two pieces "
            f"(got {len(left)} left, {len(right)} right)")
    return left[0], right[0]
