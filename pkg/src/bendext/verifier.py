"""Independent checks: drawing validation, brute-force search, region probes.

Nothing here calls the solver; the validator and the grid oracle only share
the exact-geometry layer with it. That independence is what makes the
soundness and one-sided-completeness test evidence meaningful.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from .drawing import ChordPath, Drawing
from .dualtree import build_dual_tree
from .errors import InternalInvariantError, ResolutionTooLarge
from .geometry import (
    Location,
    Point,
    SegRel,
    SimplePolygon,
    seg_rel,
    segment_common_points,
)
from .geometry.polygon import normalize_ring, ring_contains
from .instance import Instance, _norm_chord
from .visibility import common_visibility

DEFAULT_ORACLE_BUDGET = 10_000_000
ORACLE_BUDGET_ENV = "BENDEXT_ORACLE_BUDGET"


class ViolationKind(enum.Enum):
    CROSSING = "crossing"
    OUTSIDE_POLYGON = "outside_polygon"
    BEND_COUNT = "bend_count"
    ENDPOINT_MISMATCH = "endpoint_mismatch"
    TOUCHES_BOUNDARY_IMPROPERLY = "touches_boundary_improperly"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: ViolationKind, detail: str) -> None:
        self.violations.append(Violation(kind, detail))


def _check_segment_against_boundary(P: SimplePolygon, a: Point, b: Point,
                                    label: str, report: ValidationReport) -> None:
    """One path segment: boundary contact only at its own endpoints, and the
    open part strictly inside."""
    corners = P.corners
    k = len(corners)
    clean = True
    for i in range(k):
        c, d = corners[i], corners[(i + 1) % k]
        rel = seg_rel(a, b, c, d)
        if rel is SegRel.DISJOINT:
            continue
        if rel is SegRel.OVERLAP:
            report.add(ViolationKind.TOUCHES_BOUNDARY_IMPROPERLY,
                       f"{label}: segment runs along the polygon boundary")
            return
        for p in segment_common_points(a, b, c, d):
            if p != a and p != b:
                report.add(ViolationKind.TOUCHES_BOUNDARY_IMPROPERLY,
                           f"{label}: segment meets the boundary at {p!r}")
                clean = False
    if not clean:
        return
    mid = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    if P.contains(mid) is Location.OUTSIDE:
        report.add(ViolationKind.OUTSIDE_POLYGON,
                   f"{label}: segment leaves the polygon")


def _check_path_alone(inst: Instance, P: SimplePolygon, cp: ChordPath,
                      report: ValidationReport) -> None:
    u, v = cp.edge
    label = f"chord ({u}, {v})"
    pu, pv = inst.vertex_point(u), inst.vertex_point(v)
    if cp.path[0] != pu or cp.path[-1] != pv:
        report.add(ViolationKind.ENDPOINT_MISMATCH,
                   f"{label}: path does not join the vertex positions")
        return
    for a, b in zip(cp.path, cp.path[1:]):
        if a == b:
            report.add(ViolationKind.BEND_COUNT,
                       f"{label}: zero-length segment")
            return
    bend = cp.bend
    if bend is not None:
        loc = P.contains(bend)
        if loc is Location.OUTSIDE:
            report.add(ViolationKind.OUTSIDE_POLYGON,
                       f"{label}: bend {bend!r} outside the polygon")
            return
        if loc is Location.ON_BOUNDARY:
            report.add(ViolationKind.TOUCHES_BOUNDARY_IMPROPERLY,
                       f"{label}: bend {bend!r} on the polygon boundary")
            return
    for a, b in zip(cp.path, cp.path[1:]):
        _check_segment_against_boundary(P, a, b, label, report)


def _check_pair(inst: Instance, cp1: ChordPath, cp2: ChordPath,
                report: ValidationReport) -> None:
    shared = {inst.vertex_point(w)
              for w in set(cp1.edge) & set(cp2.edge)}
    label = f"chords ({cp1.edge[0]}, {cp1.edge[1]}) and ({cp2.edge[0]}, {cp2.edge[1]})"
    for a, b in zip(cp1.path, cp1.path[1:]):
        for c, d in zip(cp2.path, cp2.path[1:]):
            rel = seg_rel(a, b, c, d)
            if rel is SegRel.DISJOINT:
                continue
            if rel is SegRel.OVERLAP:
                report.add(ViolationKind.CROSSING,
                           f"{label}: paths overlap along a segment")
                return
            for p in segment_common_points(a, b, c, d):
                if p not in shared:
                    report.add(ViolationKind.CROSSING,
                               f"{label}: paths meet at {p!r}")
                    return


def validate_drawing(inst: Instance, d: Drawing) -> ValidationReport:
    """Full check of a drawing against its instance.

    The paths must join the right vertex positions with at most one bend,
    stay strictly inside the polygon except at their endpoints, and meet
    each other only at shared graph vertices. The report lists every
    violation found; ok means none.
    """
    report = ValidationReport()
    P = inst.polygon()
    by_chord: Dict[Tuple[int, int], ChordPath] = {}
    for cp in d.chords:
        key = _norm_chord(cp.edge)
        if key in by_chord:
            report.add(ViolationKind.ENDPOINT_MISMATCH,
                       f"chord {cp.edge}: more than one path")
            continue
        by_chord[key] = cp
    wanted = {_norm_chord(c) for c in inst.chords}
    for key in sorted(wanted - set(by_chord)):
        report.add(ViolationKind.ENDPOINT_MISMATCH,
                   f"chord {key}: no path in the drawing")
    for key in sorted(set(by_chord) - wanted):
        report.add(ViolationKind.ENDPOINT_MISMATCH,
                   f"chord {key}: not a chord of the instance")
    paths = [by_chord[k] for k in sorted(by_chord) if k in wanted]
    for cp in paths:
        _check_path_alone(inst, P, cp, report)
    for i in range(len(paths)):
        for j in range(i + 1, len(paths)):
            _check_pair(inst, paths[i], paths[j], report)
    return report


def _paths_compatible(inst: Instance, cp1: ChordPath, cp2: ChordPath) -> bool:
    probe = ValidationReport()
    _check_pair(inst, cp1, cp2, probe)
    return probe.ok


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResolutionTooLarge(
                f"grid oracle exceeded its budget of {self.limit} expansions")


def _grid_points(P: SimplePolygon, resolution: int) -> List[Point]:
    x0, y0, x1, y1 = P.bbox
    out = []
    for i in range(resolution + 1):
        x = x0 + (x1 - x0) * i / resolution
        for j in range(resolution + 1):
            y = y0 + (y1 - y0) * j / resolution
            p = Point(x, y)
            if P.contains(p) is Location.INSIDE:
                out.append(p)
    return out


def grid_oracle(inst: Instance, resolution: int,
                budget: Optional[int] = None) -> Optional[Drawing]:
    """Brute-force search for a drawing; None means nothing was found.

    Candidate paths per chord are the straight segment plus one bend at each
    bounding-box grid point that lies strictly inside the polygon. Chords are
    tried deepest dual-tree face first, backtracking over pairwise conflicts.
    A found drawing proves YES; exhaustion proves nothing.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    if budget is None:
        budget = int(os.environ.get(ORACLE_BUDGET_ENV, DEFAULT_ORACLE_BUDGET))
    spent = _Budget(budget)
    P = inst.polygon()
    if not inst.chords:
        return Drawing("yes", ())
    dt = build_dual_tree(inst)
    order = sorted((f for f in range(len(dt.faces)) if f != dt.root),
                   key=lambda f: (-dt.depth[f], f))
    chords = [dt.tree_edge[f] for f in order]
    grid = _grid_points(P, resolution)

    def candidates(chord: Tuple[int, int]) -> List[ChordPath]:
        u, v = chord
        pu, pv = inst.vertex_point(u), inst.vertex_point(v)
        out = []
        for path in [(pu, pv)] + [(pu, b, pv) for b in grid]:
            spent.spend()
            probe = ValidationReport()
            _check_path_alone(inst, P, ChordPath(chord, path), probe)
            if probe.ok:
                out.append(ChordPath(chord, path))
        return out

    pools = [candidates(c) for c in chords]

    chosen: List[ChordPath] = []

    def search(idx: int) -> bool:
        if idx == len(pools):
            return True
        for cp in pools[idx]:
            spent.spend()
            if all(_paths_compatible(inst, cp, prev) for prev in chosen):
                chosen.append(cp)
                if search(idx + 1):
                    return True
                chosen.pop()
        return False

    if not search(0):
        return None

    by_chord = {_norm_chord(cp.edge): cp for cp in chosen}
    ordered = []
    for a, b in inst.chords:
        cp = by_chord[_norm_chord((a, b))]
        path = cp.path if cp.edge == (a, b) else cp.path[::-1]
        ordered.append(ChordPath((a, b), path))
    found = Drawing("yes", tuple(ordered))
    report = validate_drawing(inst, found)
    if not report.ok:
        raise InternalInvariantError(
            f"grid oracle assembled an invalid drawing: {report.violations}")
    return found


class Membership(enum.Enum):
    IN = "in"
    OUT = "out"
    UNDECIDED = "undecided"


def restricted_region_member(inst: Instance,
                             state: Union[SimplePolygon, object],
                             chord: Tuple[int, int], r: Point,
                             bend_samples: int = 400) -> Membership:
    """Sampled membership of r in the chord's restricted region.

    The restricted region is the part of the chord-side pocket that some
    valid bend obstructs and some other valid bend does not. Sampling bends
    from the common visibility region witnesses membership (IN needs one
    obstructing and one non-obstructing sample); points outside the pocket
    or on which all samples agree are OUT; borderline contact makes the
    answer honestly UNDECIDED.
    """
    P = state if isinstance(state, SimplePolygon) else state.polygon
    u, v = chord
    pu, pv = inst.vertex_point(u), inst.vertex_point(v)
    arc = P.interval(pu, pv)
    pocket = normalize_ring(arc)
    if len(pocket) < 3 or ring_contains(pocket, r) is not Location.INSIDE:
        return Membership.OUT
    pieces = common_visibility(P, pu, pv)
    if not pieces:
        return Membership.OUT

    res = max(1, math.isqrt(max(1, bend_samples - 1)))
    samples: List[Point] = []
    for piece in pieces:
        x0, y0, x1, y1 = piece.bbox
        for i in range(res + 1):
            x = x0 + (x1 - x0) * i / res
            for j in range(res + 1):
                y = y0 + (y1 - y0) * j / res
                b = Point(x, y)
                if piece.contains(b) is Location.INSIDE:
                    samples.append(b)
        if len(samples) >= bend_samples:
            break
    samples = samples[:bend_samples]
    if not samples:
        return Membership.UNDECIDED

    obstructed = free = border = 0
    for b in samples:
        loc = ring_contains(tuple(arc) + (b,), r)
        if loc is Location.INSIDE:
            obstructed += 1
        elif loc is Location.OUTSIDE:
            free += 1
        else:
            border += 1
    if obstructed and free:
        return Membership.IN
    if border:
        return Membership.UNDECIDED
    return Membership.OUT
