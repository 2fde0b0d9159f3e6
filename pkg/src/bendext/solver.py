"""Decides chord drawability by polygon refinement, then places the bends.

The decision runs bottom-up over the dual tree: each non-root face's chord is
classified CONVEX or REFLEX against the current polygon, and the polygon is
refined by cutting away the region that any valid drawing of that chord would
obstruct. Reflex chords cut along their unique minimal elbow; convex chords
cut along the wall of the common visibility region. The instance is a YES
exactly when every face can be processed this way.

The construction then replays the refinement log in reverse: every chord gets
a concrete polyline (straight, or one bend) inside the region its parent's
drawn edge left available, so paths of different chords can never cross.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from .drawing import ChordPath, Drawing
from .dualtree import DualTree, build_dual_tree
from .errors import (
    AssemblyNotSimple,
    DegeneratePinch,
    EmptyRefinement,
    EmptyVisibility,
    NoMinimalPoint,
    PlacementFailed,
)
from .geometry import (
    CCW,
    COLLINEAR,
    CW,
    Location,
    Point,
    Ring,
    SegRel,
    SimplePolygon,
    canonical_ring,
    clip_halfplane,
    convex_hull,
    cut_along_path,
    orientation,
    polygon_intersection,
    polygon_union,
    rational,
    seg_rel,
    segment_common_points,
    segment_in_closure,
    signed_area2,
    split_by_path,
)
from .geometry.polygon import (
    normalize_ring,
    open_segment_in_interior,
    ring_contains,
)
from .instance import Instance, _norm_chord, validate_instance
from .visibility import common_visibility, rotate_ray_hit

SHRINK_HALVINGS = 128


class EdgeClass(enum.Enum):
    CONVEX = "convex"
    REFLEX = "reflex"


@dataclass
class _VisEntry:
    """Cached per-chord classification, stamped with a polygon version.

    pieces is None for the pocket fast path: when the chord cuts off a convex
    pocket, the pocket itself is commonly visible and nothing gets obstructed,
    so the expensive visibility sweep is skipped entirely.
    """

    version: int
    edge_class: EdgeClass
    pieces: Optional[Tuple[SimplePolygon, ...]]
    hull: Optional[Ring]
    straight_ok: bool


@dataclass(frozen=True)
class StepRecord:
    """One bottom-up refinement step, kept for the placement pass."""

    step: int
    face: int
    chord: Tuple[int, int]
    edge_class: EdgeClass
    bend: Optional[Point]
    prev_polygon: SimplePolygon
    new_polygon: SimplePolygon
    vis_pieces: Optional[Tuple[SimplePolygon, ...]]


class RefinementState:
    """Current polygon plus everything the placement pass will need."""

    def __init__(self, inst: Instance, dt: DualTree, use_vis_cache: bool = True):
        self.instance = inst
        self.dt = dt
        self.polygon = inst.polygon()
        self.processed: Set[int] = set()
        self.version = 0
        self.use_vis_cache = use_vis_cache
        self.vis_cache: Dict[int, _VisEntry] = {}
        self.reflex_minimal: Dict[int, Point] = {}
        self.log: List[StepRecord] = []
        # Number of full visibility computations, for performance assertions.
        self.vis_computations = 0
        self._face_of: Dict[Tuple[int, int], int] = {
            _norm_chord(dt.tree_edge[f]): f
            for f in range(len(dt.faces)) if f != dt.root
        }

    def face_of(self, chord: Tuple[int, int]) -> int:
        return self._face_of[_norm_chord(chord)]

    def chord_points(self, face: int) -> Tuple[int, int, Point, Point]:
        u, v = self.dt.tree_edge[face]
        return u, v, self.instance.vertex_point(u), self.instance.vertex_point(v)


def _sorted_by_area(pieces: Sequence[SimplePolygon]) -> List[SimplePolygon]:
    return sorted(pieces, key=lambda q: (-q.area2, canonical_ring(q.corners)))


def _rings_clear_hull(hull: Optional[Ring], removals: Sequence[Ring]) -> bool:
    """True only when every removed region provably avoids the hull.

    Both containment probes are sound because the segment tests already ruled
    out any boundary contact between the hull and the removal ring.
    """
    if hull is None or len(hull) < 3:
        return False
    hx0 = min(p.x for p in hull)
    hx1 = max(p.x for p in hull)
    hy0 = min(p.y for p in hull)
    hy1 = max(p.y for p in hull)
    for ring in removals:
        # Disjoint bounding boxes already rule out contact and containment.
        if max(p.x for p in ring) < hx0 or min(p.x for p in ring) > hx1 \
                or max(p.y for p in ring) < hy0 or min(p.y for p in ring) > hy1:
            continue
        k = len(ring)
        h = len(hull)
        for i in range(k):
            a, b = ring[i], ring[(i + 1) % k]
            if a == b:
                continue
            for j in range(h):
                if seg_rel(a, b, hull[j], hull[(j + 1) % h]) is not SegRel.DISJOINT:
                    return False
        if ring_contains(ring, hull[0]) is not Location.OUTSIDE:
            return False
        if ring_contains(hull, ring[0]) is not Location.OUTSIDE:
            return False
    return True


def _ensure_entry(state: RefinementState, face: int) -> _VisEntry:
    entry = state.vis_cache.get(face)
    if entry is not None and entry.version == state.version:
        return entry
    P = state.polygon
    u, v, pu, pv = state.chord_points(face)

    # Pocket fast path: chord strictly interior and the piece it cuts off is
    # convex. Then that piece is commonly visible from u and v, every point
    # of it can serve as a bend, and no point of the polygon is obstructed.
    if open_segment_in_interior(P.corners, pu, pv):
        ring = normalize_ring(P.interval(pu, pv))
        if len(ring) >= 3 and signed_area2(ring) > 0:
            pocket = SimplePolygon(ring, validate=False)
            if pocket.is_convex():
                entry = _VisEntry(state.version, EdgeClass.CONVEX, None,
                                  convex_hull(ring), True)
                state.vis_cache[face] = entry
                return entry

    state.vis_computations += 1
    pieces = common_visibility(P, pu, pv)
    if not pieces:
        err = EmptyVisibility(
            f"chord ({u}, {v}): endpoints share no visible region")
        err.face = face
        err.chord = (u, v)
        raise err
    straight_ok = segment_in_closure(P.corners, pu, pv)
    if straight_ok:
        cls = EdgeClass.CONVEX
    else:
        # The cut side is to the right of the directed chord; a visibility
        # region with interior on that side admits a convex elbow.
        strict_side = any(orientation(pu, pv, c) == CW
                          for piece in pieces for c in piece.corners)
        cls = EdgeClass.CONVEX if strict_side else EdgeClass.REFLEX
    hull_pts: List[Point] = [pu, pv]
    for piece in pieces:
        hull_pts.extend(piece.corners)
    entry = _VisEntry(state.version, cls, tuple(_sorted_by_area(pieces)),
                      convex_hull(hull_pts), straight_ok)
    state.vis_cache[face] = entry
    return entry


def classify_edge(state: RefinementState, chord: Tuple[int, int]) -> EdgeClass:
    """CONVEX when the chord can be drawn with a straight segment or with an
    elbow pointing into the region it cuts off; REFLEX otherwise."""
    return _ensure_entry(state, state.face_of(chord)).edge_class


def choose_next_leaf(state: RefinementState, dt: DualTree) -> int:
    """Next face to process: reflex leaves first (smallest label), otherwise
    the deepest convex leaf (ties again by smallest label)."""
    leaves = sorted(
        f for f in range(len(dt.faces))
        if f != dt.root and f not in state.processed
        and all(c in state.processed for c in dt.children[f]))
    if not leaves:
        raise AssemblyNotSimple("no processable leaf although faces remain")
    for f in leaves:
        if _ensure_entry(state, f).edge_class is EdgeClass.REFLEX:
            return f
    return min(leaves, key=lambda f: (-dt.depth[f], f))


def _obstructed_ring(arc: Ring, b: Point) -> Ring:
    """Ring of the region a bend at b walls off: the cut-side boundary arc
    closed by the elbow path back from v through b to u."""
    return tuple(arc) + (b,)


def minimal_bend_reflex(state: RefinementState, chord: Tuple[int, int]) -> Point:
    """The visibility-region corner whose elbow obstructs least.

    Candidates are the corners of the common visibility pieces (each corner
    sees both endpoints by construction, so the elbow through it stays inside
    the polygon). The winner must wall off a region contained in every other
    candidate's; containment is checked exactly by testing the winner's elbow
    against each competitor's walled-off ring.
    """
    face = state.face_of(chord)
    entry = _ensure_entry(state, face)
    assert entry.edge_class is EdgeClass.REFLEX and entry.pieces is not None
    P = state.polygon
    u, v, pu, pv = state.chord_points(face)
    arc = P.interval(pu, pv)

    candidates: List[Point] = []
    seen: Set[Point] = set()
    for piece in entry.pieces:
        for c in piece.corners:
            if c in seen or c == pu or c == pv:
                continue
            seen.add(c)
            candidates.append(c)
    if not candidates:
        err = NoMinimalPoint(
            f"chord ({u}, {v}): no usable elbow corner on the visibility "
            f"boundary")
        err.face = face
        err.chord = (u, v)
        raise err

    scored = sorted((signed_area2(_obstructed_ring(arc, b)), b)
                    for b in candidates)
    best_area, best = scored[0]
    if best_area < 0:
        raise AssemblyNotSimple(
            f"chord ({u}, {v}): negatively oriented obstructed region")
    if best_area == 0:
        # The elbow runs along the cut-side arc and obstructs nothing, so it
        # is contained in every competitor's region.  The path-containment
        # test below only characterises containment for nonempty regions.
        state.reflex_minimal[face] = best
        return best
    for area, other in scored[1:]:
        ring = _obstructed_ring(arc, other)
        if not (segment_in_closure(ring, pu, best)
                and segment_in_closure(ring, best, pv)):
            err = NoMinimalPoint(
                f"chord ({u}, {v}): elbows at {best!r} and {other!r} wall "
                f"off incomparable regions")
            err.face = face
            err.chord = (u, v)
            raise err
    state.reflex_minimal[face] = best
    return best


def _remaining_vertices(state: RefinementState, face: int) -> Set[int]:
    """Graph vertices still on the polygon once this face's step is done:
    the vertices of every face not yet processed. Earlier steps may already
    have cut away vertices outside this face's own subtree."""
    done = state.processed | {face}
    out: Set[int] = set()
    for f, verts in enumerate(state.dt.faces):
        if f not in done:
            out.update(verts)
    return out


def _apply_step(state: RefinementState, face: int, cls: EdgeClass,
                bend: Optional[Point], vis_pieces: Optional[Tuple[SimplePolygon, ...]],
                new_polygon: SimplePolygon, removal_rings: Sequence[Ring]) -> None:
    prev = state.polygon
    if new_polygon is not prev and new_polygon.area2 == prev.area2 \
            and canonical_ring(new_polygon.corners) == canonical_ring(prev.corners):
        new_polygon = prev
    if new_polygon is not prev:
        if new_polygon.area2 > prev.area2:
            raise AssemblyNotSimple(
                f"face {face}: refinement grew the polygon")
        remaining = _remaining_vertices(state, face)
        for w in remaining:
            if new_polygon.locate_boundary(state.instance.vertex_point(w)) is None:
                raise AssemblyNotSimple(
                    f"face {face}: vertex {w} fell off the boundary")
    state.log.append(StepRecord(len(state.log), face, state.dt.tree_edge[face],
                                cls, bend, prev, new_polygon, vis_pieces))
    state.processed.add(face)
    state.vis_cache.pop(face, None)
    if new_polygon is prev:
        return
    state.polygon = new_polygon
    state.version += 1
    removals = [r for r in (normalize_ring(ring) for ring in removal_rings)
                if len(r) >= 3 and signed_area2(r) != 0]
    if state.use_vis_cache:
        for entry in state.vis_cache.values():
            if entry.version == state.version - 1 \
                    and _rings_clear_hull(entry.hull, removals):
                entry.version = state.version


def refine_reflex(state: RefinementState, chord: Tuple[int, int],
                  b: Point) -> None:
    """Cut the polygon along the elbow u -> b -> v, keeping the side that
    carries the rest of the graph."""
    face = state.face_of(chord)
    entry = _ensure_entry(state, face)
    P = state.polygon
    u, v, pu, pv = state.chord_points(face)
    kept_pieces, cut_pieces = cut_along_path(P, [pu, b, pv])
    removal = [q.corners for q in cut_pieces]
    if not kept_pieces:
        err = EmptyRefinement(
            f"chord ({u}, {v}): elbow leaves no room for the rest of the "
            f"graph")
        err.face = face
        err.chord = (u, v)
        raise err
    if len(kept_pieces) == 1:
        kept = kept_pieces[0]
    else:
        remaining = _remaining_vertices(state, face)
        pts = [state.instance.vertex_point(w) for w in remaining]
        carriers = [q for q in kept_pieces
                    if all(q.locate_boundary(p) is not None for p in pts)]
        if len(carriers) != 1:
            raise DegeneratePinch(
                f"chord ({u}, {v}): cut pinched the polygon into pieces and "
                f"no single piece carries the remaining vertices")
        kept = carriers[0]
        removal.extend(q.corners for q in kept_pieces if q is not kept)
    _apply_step(state, face, EdgeClass.REFLEX, b, entry.pieces, kept, removal)


def _cut_side_neighbor_dir(P: SimplePolygon, p: Point, forward: bool) -> Point:
    """Direction from a boundary point toward its neighbor along the cut-side
    arc: the next corner counterclockwise (forward) or the previous one."""
    i = P.locate_boundary(p)
    assert i is not None
    corners = P.corners
    k = len(corners)
    if forward:
        return corners[(i + 1) % k] - p
    if corners[i] == p:
        return corners[i - 1] - p
    return corners[i] - p


def refine_convex(state: RefinementState, chord: Tuple[int, int]) -> None:
    """Cut away everything no single convex elbow can keep unobstructed.

    Piece by piece, the polygon is cut along the chain u -> p_u -> (wall of
    the visibility piece) -> p_v -> v, where p_u is the chord endpoint itself
    when it touches the piece and otherwise the first point of the piece hit
    by a ray rotating off the cut-side arc direction. What survives is the
    union of the kept sides over all pieces: a point survives if some single
    elbow in some piece leaves it unobstructed.
    """
    face = state.face_of(chord)
    entry = _ensure_entry(state, face)
    assert entry.edge_class is EdgeClass.CONVEX
    P = state.polygon
    u, v, pu, pv = state.chord_points(face)

    if entry.pieces is None:
        # Convex pocket: nothing is obstructed, the polygon is unchanged.
        _apply_step(state, face, EdgeClass.CONVEX, None, None, P, [])
        return

    kept_parts: List[SimplePolygon] = []
    removal: List[Ring] = []
    for W in entry.pieces:
        if W.contains(pu) is not Location.OUTSIDE:
            p_u = pu
        else:
            p_u = rotate_ray_hit(P, pu, _cut_side_neighbor_dir(P, pu, True),
                                 W, "ccw")
        if W.contains(pv) is not Location.OUTSIDE:
            p_v = pv
        else:
            p_v = rotate_ray_hit(P, pv, _cut_side_neighbor_dir(P, pv, False),
                                 W, "cw")
        walk = W.interval(p_u, p_v)
        path: List[Point] = [pu]
        for q in tuple(walk) + (pv,):
            if q != path[-1]:
                path.append(q)
        if len(path) < 2:
            raise AssemblyNotSimple(f"chord ({u}, {v}): degenerate wall")
        kept_w, cut_w = cut_along_path(P, path)
        kept_parts.extend(kept_w)
        # With several pieces this overstates the removed region (each cut
        # is taken alone), which only makes cache retention more cautious.
        removal.extend(q.corners for q in cut_w)

    if not kept_parts:
        err = EmptyRefinement(
            f"chord ({u}, {v}): wall leaves no room for the rest of the "
            f"graph")
        err.face = face
        err.chord = (u, v)
        raise err
    if len(kept_parts) == 1:
        kept = kept_parts[0]
    else:
        outers, holes = polygon_union(kept_parts)
        if len(outers) != 1 or holes:
            raise AssemblyNotSimple(
                f"chord ({u}, {v}): kept region fell apart "
                f"({len(outers)} pieces, {len(holes)} holes)")
        kept = outers[0]
    _apply_step(state, face, EdgeClass.CONVEX, None, entry.pieces, kept,
                removal)


@dataclass
class BottomUpResult:
    verdict: str
    state: RefinementState
    witness: Optional[Dict[str, Any]] = None


def _witness(kind: str, err: Exception) -> Dict[str, Any]:
    out: Dict[str, Any] = {"kind": kind, "detail": str(err)}
    if hasattr(err, "face"):
        out["face"] = err.face
    if hasattr(err, "chord"):
        out["chord"] = list(err.chord)
    return out


def bottom_up(inst: Instance, dt: DualTree,
              use_vis_cache: bool = True) -> BottomUpResult:
    """Process every non-root face leaf-to-root, refining the polygon.

    YES means every chord found room; the final polygon is where the last
    chord's bend will live. NO carries a witness naming the chord that could
    not be drawn: empty common visibility, no minimal elbow, or a refinement
    that left no region at all.
    """
    state = RefinementState(inst, dt, use_vis_cache)
    try:
        while len(state.processed) < dt.m:
            face = choose_next_leaf(state, dt)
            chord = dt.tree_edge[face]
            entry = _ensure_entry(state, face)
            if entry.edge_class is EdgeClass.REFLEX:
                b = minimal_bend_reflex(state, chord)
                refine_reflex(state, chord, b)
            else:
                refine_convex(state, chord)
    except EmptyVisibility as e:
        return BottomUpResult("no", state, _witness("empty_visibility", e))
    except NoMinimalPoint as e:
        return BottomUpResult("no", state, _witness("no_minimal_point", e))
    except EmptyRefinement as e:
        return BottomUpResult("no", state, _witness("empty_refinement", e))
    return BottomUpResult("yes", state)


def _paths_clear(path: Sequence[Point],
                 labels: Tuple[int, int],
                 others: Sequence[Tuple[Tuple[int, int], Tuple[Point, ...]]],
                 pos: Sequence[Point]) -> bool:
    """True when the polyline meets every other polyline only at the point of
    a chord vertex the two chords share."""
    u, v = labels
    for (labels2, path2) in others:
        shared = {pos[w] for w in {u, v} & set(labels2)}
        for a, b in zip(path, path[1:]):
            for c, d in zip(path2, path2[1:]):
                rel = seg_rel(a, b, c, d)
                if rel is SegRel.DISJOINT:
                    continue
                if rel is not SegRel.ENDPOINT_TOUCH:
                    return False
                for p in segment_common_points(a, b, c, d):
                    if p not in shared:
                        return False
    return True


def _path_ok(path: Sequence[Point], region: SimplePolygon,
             placed: Sequence[Tuple[Tuple[int, int], Tuple[Point, ...]]],
             labels: Tuple[int, int], pos: Sequence[Point]) -> bool:
    """A polyline is acceptable when every segment runs strictly inside the
    available region (endpoints aside), any bend is strictly interior, and it
    meets previously placed polylines only at shared chord endpoints."""
    for a, b in zip(path, path[1:]):
        if a == b:
            return False
        if not open_segment_in_interior(region.corners, a, b):
            return False
    for bendpt in path[1:-1]:
        if region.contains(bendpt) is not Location.INSIDE:
            return False
    return _paths_clear(path, labels, placed, pos)


def _avail_pieces(region: SimplePolygon,
                  pu: Point, pv: Point) -> List[SimplePolygon]:
    """Bend regions for a chord inside its placement region. Visibility is
    recomputed in the region itself: a point that saw both endpoints at the
    chord's own bottom-up step can lose its sightlines once later cuts and
    the parent's drawn edge carve the region down."""
    return _sorted_by_area(common_visibility(region, pu, pv))


def _shrink_candidates(anchor: Point, target: Point) -> List[Point]:
    step = target - anchor
    return [anchor + step.scaled(rational(1, 1 << k))
            for k in range(1, SHRINK_HALVINGS + 1)]


SNAP_DOUBLINGS = 256


def _dyadic_round(q: Any, den: int) -> Any:
    num, d0 = q.numerator, q.denominator
    return rational(int((2 * num * den + d0) // (2 * d0)), den)


def _snap_side_guard(edge_class: EdgeClass, pu: Point, pv: Point,
                     b: Point) -> Any:
    """Snapping must not move a bend across the chord line: a convex elbow
    stays weakly on the cut side, and a reflex elbow stays on whichever side
    it was accepted on."""
    if edge_class is EdgeClass.CONVEX:
        return lambda c: orientation(pu, pv, c) is not CCW
    side = orientation(pu, pv, b)
    if side is COLLINEAR:
        return lambda c: True
    bad = CCW if side is CW else CW
    return lambda c: orientation(pu, pv, c) is not bad


def _snap_bend(b: Point, ok: Any) -> Point:
    """Coarsest dyadic point near an accepted bend that still passes.

    The bend becomes a corner of every descendant's placement region, so its
    coordinate length compounds through all later splits; ladder candidates
    can carry hundreds of bits. Valid bends form an open set, so once the
    grid is fine enough a grid neighbour of b passes; b itself is the
    fallback."""
    den = 1
    for _ in range(SNAP_DOUBLINGS):
        cand = Point(_dyadic_round(b.x, den), _dyadic_round(b.y, den))
        if cand == b:
            return b
        if ok(cand):
            return cand
        den <<= 1
    return b


def _place_chord(rec: StepRecord, region: SimplePolygon,
                 placed: Sequence[Tuple[Tuple[int, int], Tuple[Point, ...]]],
                 pos: Sequence[Point],
                 careful: bool = False) -> Tuple[Point, ...]:
    """Place one chord inside its region with an elbow.

    Reflex chords get a bend close to their minimal bend point; convex
    chords get a bend weakly on the cut side of the chord line, so the elbow
    makes a convex corner of the kept region. Both rules matter: they keep
    every placed path out of the territory that siblings and descendants
    still need, which is what guarantees a valid bend always exists here.
    The straight segment is deliberately not tried; it would obstruct the
    maximal cut-side region and can strangle a descendant. Straightening
    happens afterwards, when every path is known.

    The reflex ladder normally starts away from the minimal bend, keeping
    coordinates small. careful reverses it, hugging the minimal bend as the
    existence guarantee assumes, at the price of huge denominators.
    """
    u, v = rec.chord
    pu, pv = pos[u], pos[v]
    avail = _avail_pieces(region, pu, pv)
    bends: List[Point] = []
    if rec.edge_class is EdgeClass.REFLEX:
        assert rec.bend is not None
        targets = [piece.interior_point() for piece in avail]
        if not targets:
            targets = [region.interior_point()]
        for c in targets:
            ladder = _shrink_candidates(rec.bend, c)
            if careful:
                ladder.reverse()
            bends.extend(ladder)
            bends.append(c)
    else:
        # Only the part of each piece weakly on the cut side of the chord
        # line holds convex-corner bends; the piece's own interior point is
        # often on the wrong side, and its boundary corners fail the strict
        # interiority the path check demands.
        for piece in avail:
            for part in clip_halfplane(piece, (pu, pv), keep=CW):
                anchor = part.interior_point()
                bends.append(anchor)
                for c in part.corners:
                    if c == pu or c == pv:
                        continue
                    bends.extend(_shrink_candidates(c, anchor))
                    bends.append(c)
        # Degenerate convex chords can straighten only in the closure: the
        # segment grazes the boundary, so every real elbow bends into the
        # kept side. Hug the chord line from there, the way the reflex rule
        # hugs its minimal elbow.
        mid = Point((pu.x + pv.x) / 2, (pu.y + pv.y) / 2)
        for piece in avail:
            anchors = [c for c in piece.corners
                       if c != pu and c != pv
                       and orientation(pu, pv, c) is COLLINEAR]
            if piece.contains(mid) is not Location.OUTSIDE:
                anchors.append(mid)
            target = piece.interior_point()
            for a in anchors:
                ladder = _shrink_candidates(a, target)
                if careful:
                    ladder.reverse()
                bends.extend(ladder)
            bends.append(target)
    seen: Set[Point] = set()
    for b in bends:
        if b in seen:
            continue
        seen.add(b)
        path = (pu, b, pv)
        if _path_ok(path, region, placed, rec.chord, pos):
            if careful:
                return path
            guard = _snap_side_guard(rec.edge_class, pu, pv, b)
            snapped = _snap_bend(b, lambda c: guard(c) and _path_ok(
                (pu, c, pv), region, placed, rec.chord, pos))
            return (pu, snapped, pv)
    raise PlacementFailed(
        f"chord ({u}, {v}): no valid bend out of {len(bends)} candidates")


def top_down(inst: Instance, dt: DualTree, state: RefinementState,
             careful: bool = False) -> Drawing:
    """Replay the refinement log backwards, drawing each chord inside the
    region its parent's drawn edge left it, so paths can never cross."""
    pos = inst.vertex_points()
    placed: List[Tuple[Tuple[int, int], Tuple[Point, ...]]] = []
    region_for: Dict[int, SimplePolygon] = {}
    paths: Dict[int, Tuple[Point, ...]] = {}
    for rec in reversed(state.log):
        f = rec.face
        parent = dt.parent[f]
        region = state.polygon if parent == dt.root else region_for[parent]
        path = _place_chord(rec, region, placed, pos, careful)
        paths[f] = path
        placed.append((rec.chord, path))
        if dt.children[f]:
            try:
                _, right = split_by_path(rec.prev_polygon, list(path))
            except Exception as e:
                raise PlacementFailed(
                    f"chord {rec.chord}: drawn path does not split its "
                    f"polygon cleanly: {e}") from None
            region_for[f] = right

    # Straightening pass. During placement the straight segment is off
    # limits because it obstructs the maximal cut-side region, but with
    # every path realized it is safe wherever it stays strictly inside the
    # polygon and clear of the other paths. Parents go first so children
    # straighten against the retreated parent.
    boundary = inst.polygon()
    for rec in reversed(state.log):
        f = rec.face
        if len(paths[f]) == 2:
            continue
        u, v = rec.chord
        pu, pv = pos[u], pos[v]
        if not open_segment_in_interior(boundary.corners, pu, pv):
            continue
        others = [(dt.tree_edge[g], p) for g, p in paths.items() if g != f]
        if _paths_clear((pu, pv), rec.chord, others, pos):
            paths[f] = (pu, pv)

    chord_paths = []
    for a, b in inst.chords:
        f = state.face_of((a, b))
        path = paths[f] if dt.tree_edge[f] == (a, b) else paths[f][::-1]
        chord_paths.append(ChordPath((a, b), path))
    return Drawing("yes", tuple(chord_paths))


def solve(inst: Instance, root_choice: Optional[int] = None,
          use_vis_cache: bool = True, self_check: bool = True) -> Drawing:
    """Full pipeline: validate, build the dual tree, decide bottom-up, and
    construct the drawing top-down on YES. The result is verified against
    the drawing validator before it is returned."""
    validate_instance(inst)
    dt = build_dual_tree(inst, root_choice)
    result = bottom_up(inst, dt, use_vis_cache)
    if result.verdict == "no":
        return Drawing("no", (), result.witness)
    try:
        drawing = top_down(inst, dt, result.state)
    except PlacementFailed:
        drawing = top_down(inst, dt, result.state, careful=True)
    if self_check:
        from .verifier import validate_drawing
        report = validate_drawing(inst, drawing)
        if not report.ok:
            raise PlacementFailed(
                f"constructed drawing failed validation: {report.violations}")
    return drawing
