"""Shared fixtures and brute-force oracles.

The oracles re-derive geometric facts from first principles (ray casting,
gap midpoints along a segment) so that library functions are checked against
code sharing only the exact predicates with them, not the algorithms.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

import pytest

from bendext import Instance, Point, SimplePolygon, validate_instance
from bendext.generator import FAMILIES, GenSpec, generate
from bendext.geometry import Location, SegRel, seg_rel, segment_common_points
from bendext.geometry.primitives import along_param, on_segment

Ring = Tuple[Point, ...]


# ------------------------------------------------------------------ oracles


def brute_point_in(ring: Sequence[Point], p: Point) -> Location:
    """Independent ray-cast membership test."""
    k = len(ring)
    for i in range(k):
        if on_segment(p, ring[i], ring[(i + 1) % k]):
            return Location.ON_BOUNDARY
    inside = False
    for i in range(k):
        a, b = ring[i], ring[(i + 1) % k]
        if (a.y > p.y) != (b.y > p.y):
            t = (p.y - a.y) / (b.y - a.y)
            if a.x + t * (b.x - a.x) > p.x:
                inside = not inside
    return Location.INSIDE if inside else Location.OUTSIDE


def brute_segment_in_closure(ring: Sequence[Point], a: Point, b: Point) -> bool:
    """Whether segment ab stays in the closed region bounded by ring.

    Collect every contact point with the boundary, then demand that the
    midpoint of each gap between consecutive contacts is not outside. No
    crossing analysis needed: leaving the region makes some gap midpoint
    land outside.
    """
    if a == b:
        return brute_point_in(ring, a) is not Location.OUTSIDE
    cuts = {a, b}
    k = len(ring)
    for i in range(k):
        c, d = ring[i], ring[(i + 1) % k]
        if seg_rel(a, b, c, d) is SegRel.DISJOINT:
            continue
        cuts.update(segment_common_points(a, b, c, d))
    ordered = sorted(cuts, key=lambda q: along_param(a, b, q))
    for u, v in zip(ordered, ordered[1:]):
        mid = Point((u.x + v.x) / 2, (u.y + v.y) / 2)
        if brute_point_in(ring, mid) is Location.OUTSIDE:
            return False
    return True


def brute_visible(ring: Sequence[Point], p: Point, q: Point) -> bool:
    return (brute_point_in(ring, q) is not Location.OUTSIDE
            and brute_segment_in_closure(ring, p, q))


def grid_samples(poly: SimplePolygon, res: int) -> List[Point]:
    """res x res inclusive grid over the polygon's bounding box."""
    x0, y0, x1, y1 = poly.bbox
    pts = []
    for i in range(res):
        x = x0 + (x1 - x0) * i / (res - 1)
        for j in range(res):
            y = y0 + (y1 - y0) * j / (res - 1)
            pts.append(Point(x, y))
    return pts


# ------------------------------------------------------------------- corpus


def ring_of(coords: Sequence[Tuple[int, int]]) -> Ring:
    return tuple(Point(x, y) for x, y in coords)


def l_shape(scale: int = 1, swap: bool = False) -> SimplePolygon:
    pts = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
    if swap:
        pts = [(y, x) for x, y in pts]
        pts.reverse()
    return SimplePolygon([Point(x * scale, y * scale) for x, y in pts])


def comb_shape(teeth: int, height: int = 3, scale: int = 1) -> SimplePolygon:
    """Base slab of height 1 with `teeth` unit-wide teeth on top."""
    assert teeth >= 2
    w = 2 * teeth - 1
    pts = [(0, 0), (w, 0), (w, 1 + height)]
    x = w
    # walk leftwards along the teeth tops and the gaps between them
    for t in range(teeth - 1):
        pts.append((x - 1, 1 + height))
        pts.append((x - 1, 1))
        pts.append((x - 2, 1))
        pts.append((x - 2, 1 + height))
        x -= 2
    pts.append((0, 1 + height))
    return SimplePolygon([Point(px * scale, py * scale) for px, py in pts])


def corpus_polygons() -> List[Tuple[str, SimplePolygon]]:
    """Fixed 50-polygon corpus: convex, L-shaped, spiral, and comb shapes."""
    out: List[Tuple[str, SimplePolygon]] = []
    for k in range(12):
        inst = generate(GenSpec("CONVEX", 5 + k, 0, seed=100 + k))
        out.append(("convex", inst.polygon()))
    for scale, swap in [(1, False), (1, True), (2, False), (2, True),
                        (3, False), (3, True), (5, False), (5, True),
                        (7, False), (7, True)]:
        out.append(("l-shape", l_shape(scale, swap)))
    for k in range(12):
        inst = generate(GenSpec("SPIRAL", 8 + k, 0, seed=200 + k))
        out.append(("spiral", inst.polygon()))
    for teeth in (2, 3, 4, 5):
        for height, scale in [(2, 1), (4, 1), (3, 2), (6, 1)]:
            out.append(("comb", comb_shape(teeth, height, scale)))
    assert len(out) == 50
    return out


# ---------------------------------------------------------------- instances


def mk_instance(coords: Sequence[Tuple[int, int]],
                vertex_corners: Sequence[int] = None,
                chords: Sequence[Tuple[int, int]] = ()) -> Instance:
    boundary = ring_of(coords)
    vc = tuple(range(len(boundary))) if vertex_corners is None \
        else tuple(vertex_corners)
    inst = Instance(boundary, vc, tuple(chords))
    return validate_instance(inst)


@pytest.fixture
def square_chord() -> Instance:
    return mk_instance([(0, 0), (4, 0), (4, 4), (0, 4)], chords=[(0, 2)])


@pytest.fixture
def fan6() -> Instance:
    """Fan in a convex hexagon: a path of 4 dual faces."""
    return mk_instance([(4, 0), (8, 2), (8, 6), (4, 8), (0, 6), (0, 2)],
                       chords=[(0, 2), (0, 3), (0, 4)])


@pytest.fixture
def two_prong_no() -> Instance:
    """Two tall prongs on a shallow bar: the prong tips see disjoint parts
    of the interior, so the single chord between them needs two bends."""
    return mk_instance(
        [(0, 0), (7, 0), (7, 8), (6, 8), (6, 1), (1, 1), (1, 8), (0, 8)],
        chords=[(3, 6)])


def mixed_corpus(count: int, n_max: int, seed0: int = 0) -> List[Instance]:
    """Deterministic generated instances cycling through every family."""
    out = []
    i = 0
    while len(out) < count:
        family = FAMILIES[i % len(FAMILIES)]
        n = 6 + (seed0 + i * 7) % (n_max - 5)
        m = max(0, min(n - 3, (i * 3) % (n - 2)))
        out.append(generate(GenSpec(family, n, m, seed=seed0 + i)))
        i += 1
    return out
