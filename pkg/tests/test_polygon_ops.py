"""Polygon membership, clipping, splitting, and boolean overlays.

Membership and closure tests are cross-checked against the brute-force
oracles in conftest on dense grids.
"""

from __future__ import annotations

import pytest

from conftest import (brute_point_in, brute_segment_in_closure, comb_shape,
                      grid_samples, l_shape, ring_of)

from bendext.errors import (NotSimplePolygon, PathNotInside,
                            PathSelfIntersects)
from bendext.geometry import Location, Point, SimplePolygon
from bendext.geometry.clip import clip_halfplane
from bendext.geometry.overlay import (cut_along_path, polygon_intersection,
                                      polygon_union, split_by_path)
from bendext.geometry.polygon import (canonical_ring, convex_hull,
                                      normalize_ring, ring_contains,
                                      ring_is_simple, segment_in_closure,
                                      signed_area2)
from bendext.geometry.primitives import CW


def P(x, y) -> Point:
    return Point(x, y)


SQUARE = ring_of([(0, 0), (4, 0), (4, 4), (0, 4)])


class TestRingContains:
    def test_inside(self):
        assert ring_contains(SQUARE, P(2, 2)) is Location.INSIDE

    def test_outside(self):
        assert ring_contains(SQUARE, P(5, 2)) is Location.OUTSIDE

    def test_edge(self):
        assert ring_contains(SQUARE, P(2, 0)) is Location.ON_BOUNDARY

    def test_vertex(self):
        assert ring_contains(SQUARE, P(4, 4)) is Location.ON_BOUNDARY

    def test_concave_notch(self):
        ring = l_shape().corners
        assert ring_contains(ring, P(3, 3)) is Location.OUTSIDE
        assert ring_contains(ring, P(1, 3)) is Location.INSIDE

    def test_matches_oracle_on_grids(self):
        for poly in (l_shape(), comb_shape(3), l_shape(2, swap=True)):
            ring = poly.corners
            for p in grid_samples(poly, 12):
                assert ring_contains(ring, p) is brute_point_in(ring, p)


class TestAreaAndNormalize:
    def test_square_area(self):
        assert signed_area2(SQUARE) == 32

    def test_clockwise_negative(self):
        assert signed_area2(SQUARE[::-1]) == -32

    def test_normalize_drops_pass_through(self):
        ring = ring_of([(0, 0), (2, 0), (4, 0), (4, 4), (0, 4)])
        assert normalize_ring(ring) == SQUARE

    def test_canonical_rotation_invariant(self):
        assert canonical_ring(SQUARE) == canonical_ring(SQUARE[2:] + SQUARE[:2])

    def test_simple(self):
        assert ring_is_simple(SQUARE)

    def test_bowtie_not_simple(self):
        assert not ring_is_simple(ring_of([(0, 0), (4, 4), (4, 0), (0, 4)]))

    def test_convex_hull(self):
        pts = [P(0, 0), P(4, 0), P(2, 1), P(4, 4), P(0, 4), P(2, 2)]
        assert set(convex_hull(pts)) == set(SQUARE)


class TestSegmentInClosure:
    def test_straight_across_convex(self):
        assert segment_in_closure(SQUARE, P(0, 0), P(4, 4))

    def test_blocked_by_notch(self):
        from bendext.geometry.numbers import rational
        ring = l_shape().corners
        h = rational(3, 2)
        assert not segment_in_closure(ring, P(3, h), P(h, 3))
        assert segment_in_closure(ring, P(1, 1), P(1, 3))

    def test_graze_reflex_corner_allowed(self):
        # touching the reflex corner at a single point never leaves closure
        assert segment_in_closure(l_shape().corners, P(3, 1), P(1, 3))

    def test_along_boundary(self):
        assert segment_in_closure(SQUARE, P(1, 0), P(3, 0))

    def test_matches_oracle(self):
        poly = comb_shape(3, height=2)
        pts = grid_samples(poly, 6)
        ring = poly.corners
        for a in pts[::3]:
            if brute_point_in(ring, a) is Location.OUTSIDE:
                continue
            for b in pts[1::4]:
                if brute_point_in(ring, b) is Location.OUTSIDE or a == b:
                    continue
                assert segment_in_closure(ring, a, b) == \
                    brute_segment_in_closure(ring, a, b)


class TestSimplePolygon:
    def test_rejects_clockwise(self):
        with pytest.raises(NotSimplePolygon):
            SimplePolygon(SQUARE[::-1])

    def test_rejects_self_intersection(self):
        with pytest.raises(NotSimplePolygon):
            SimplePolygon(ring_of([(0, 0), (4, 4), (4, 0), (0, 4)]))

    def test_rejects_degenerate(self):
        with pytest.raises(NotSimplePolygon):
            SimplePolygon(ring_of([(0, 0), (2, 0), (4, 0)]))

    def test_interior_point_is_inside(self):
        for poly in (SimplePolygon(SQUARE), l_shape(), comb_shape(4)):
            assert poly.contains(poly.interior_point()) is Location.INSIDE

    def test_bbox(self):
        assert l_shape().bbox == (0, 0, 4, 4)

    def test_is_convex(self):
        assert SimplePolygon(SQUARE).is_convex
        assert not l_shape().is_convex


class TestClipHalfplane:
    def test_square_left_of_vertical(self):
        # keep side of the upward line x=2 is x <= 2
        pieces = clip_halfplane(SimplePolygon(SQUARE), (P(2, 0), P(2, 4)))
        assert len(pieces) == 1
        assert pieces[0].area2 == 16
        assert set(pieces[0].corners) == set(ring_of(
            [(0, 0), (2, 0), (2, 4), (0, 4)]))

    def test_keep_other_side(self):
        pieces = clip_halfplane(SimplePolygon(SQUARE), (P(2, 0), P(2, 4)),
                                keep=CW)
        assert len(pieces) == 1
        assert set(pieces[0].corners) == set(ring_of(
            [(2, 0), (4, 0), (4, 4), (2, 4)]))

    def test_empty_when_line_misses(self):
        assert clip_halfplane(SimplePolygon(SQUARE),
                              (P(-1, 0), P(-1, 4))) == []

    def test_u_shape_two_pieces(self):
        # clipping the comb below the teeth roots leaves one piece per tooth
        poly = comb_shape(2, height=3)
        pieces = clip_halfplane(poly, (P(0, 1), P(5, 1)), keep=CW)
        assert len(pieces) == 1
        pieces = clip_halfplane(poly, (P(5, 1), P(0, 1)), keep=CW)
        assert len(pieces) == 2

    def test_membership_agreement(self):
        poly = l_shape()
        line = (P(0, 0), P(3, 4))
        pieces = clip_halfplane(poly, line)
        from bendext.geometry.primitives import CCW, orientation
        for p in grid_samples(poly, 10):
            in_poly = poly.contains(p) is Location.INSIDE
            on_keep = orientation(line[0], line[1], p) is CCW
            in_pieces = any(q.contains(p) is Location.INSIDE for q in pieces)
            if in_poly and on_keep:
                assert in_pieces
            elif not in_poly or not on_keep:
                # boundary-grazing samples may fall either way; interior
                # samples strictly off the keep side must be excluded
                if poly.contains(p) is Location.INSIDE and \
                        orientation(line[0], line[1], p) is CW:
                    assert not in_pieces


class TestSplitByPath:
    def test_diagonal(self):
        left, right = split_by_path(SimplePolygon(SQUARE),
                                    (P(0, 0), P(4, 4)))
        assert set(left.corners) == set(ring_of([(0, 0), (4, 4), (0, 4)]))
        assert set(right.corners) == set(ring_of([(0, 0), (4, 0), (4, 4)]))

    def test_area_conserved(self):
        poly = l_shape()
        left, right = split_by_path(poly, (P(2, 2), P(0, 0)))
        assert left.area2 + right.area2 == poly.area2

    def test_bent_path(self):
        poly = SimplePolygon(SQUARE)
        left, right = split_by_path(poly, (P(0, 0), P(3, 2), P(4, 4)))
        assert left.area2 + right.area2 == poly.area2
        assert P(3, 2) in left.corners and P(3, 2) in right.corners

    def test_path_leaving_interior_rejected(self):
        with pytest.raises(PathNotInside):
            split_by_path(l_shape(), (P(4, 2), P(2, 4)))

    def test_self_crossing_path_rejected(self):
        with pytest.raises(PathSelfIntersects):
            split_by_path(SimplePolygon(SQUARE),
                          (P(0, 0), P(4, 4), P(4, 0), P(0, 4)))


class TestCutAlongPath:
    def test_chord_through_square(self):
        left, right = cut_along_path(SimplePolygon(SQUARE),
                                     (P(0, 2), P(4, 2)))
        assert sum(p.area2 for p in left) == 16
        assert sum(p.area2 for p in right) == 16

    def test_cut_comb_inner_wall(self):
        # a horizontal cut above the base splits each tooth off separately
        poly = comb_shape(3, height=2)
        left, right = cut_along_path(poly, (P(0, 1), P(5, 1)))
        assert len(left) == 3
        assert len(right) == 1


class TestPolygonIntersection:
    def test_identical(self):
        sq = SimplePolygon(SQUARE)
        pieces = polygon_intersection(sq, sq)
        assert len(pieces) == 1 and pieces[0].area2 == sq.area2

    def test_disjoint(self):
        a = SimplePolygon(SQUARE)
        b = SimplePolygon(ring_of([(5, 0), (9, 0), (9, 4), (5, 4)]))
        assert polygon_intersection(a, b) == []

    def test_touching_edges_no_area(self):
        a = SimplePolygon(SQUARE)
        b = SimplePolygon(ring_of([(4, 0), (8, 0), (8, 4), (4, 4)]))
        assert polygon_intersection(a, b) == []

    def test_partial_overlap(self):
        a = SimplePolygon(SQUARE)
        b = SimplePolygon(ring_of([(2, 2), (6, 2), (6, 6), (2, 6)]))
        pieces = polygon_intersection(a, b)
        assert len(pieces) == 1
        assert set(pieces[0].corners) == set(ring_of(
            [(2, 2), (4, 2), (4, 4), (2, 4)]))

    def test_nested(self):
        big = SimplePolygon(SQUARE)
        small = SimplePolygon(ring_of([(1, 1), (2, 1), (2, 2), (1, 2)]))
        pieces = polygon_intersection(big, small)
        assert len(pieces) == 1 and pieces[0].area2 == small.area2

    def test_concave_two_pieces(self):
        # a bar across the comb teeth intersects in one piece per tooth
        comb = comb_shape(2, height=3)
        bar = SimplePolygon(ring_of([(0, 2), (3, 2), (3, 3), (0, 3)]))
        pieces = polygon_intersection(comb, bar)
        assert len(pieces) == 2
        assert all(p.area2 == 2 for p in pieces)

    def test_commutative(self):
        a = l_shape()
        b = SimplePolygon(ring_of([(1, 1), (5, 1), (5, 3), (1, 3)]))
        pa = polygon_intersection(a, b)
        pb = polygon_intersection(b, a)
        assert sum(p.area2 for p in pa) == sum(p.area2 for p in pb)

    def test_membership_agreement(self):
        a = l_shape()
        b = SimplePolygon(ring_of([(1, 1), (5, 1), (5, 5), (1, 5)]))
        pieces = polygon_intersection(a, b)
        for p in grid_samples(SimplePolygon(SQUARE), 14):
            in_both = (a.contains(p) is Location.INSIDE
                       and b.contains(p) is Location.INSIDE)
            in_pieces = any(q.contains(p) is Location.INSIDE for q in pieces)
            if in_both:
                assert in_pieces
            if in_pieces:
                assert a.contains(p) is not Location.OUTSIDE \
                    and b.contains(p) is not Location.OUTSIDE


class TestPolygonUnion:
    def test_disjoint(self):
        a = SimplePolygon(SQUARE)
        b = SimplePolygon(ring_of([(6, 0), (8, 0), (8, 2), (6, 2)]))
        pieces, holes = polygon_union([a, b])
        assert len(pieces) == 2 and holes == []

    def test_overlapping(self):
        a = SimplePolygon(SQUARE)
        b = SimplePolygon(ring_of([(2, 2), (6, 2), (6, 6), (2, 6)]))
        pieces, holes = polygon_union([a, b])
        assert len(pieces) == 1 and holes == []
        assert pieces[0].area2 == a.area2 + b.area2 - 8

    def test_frame_has_hole(self):
        rects = [
            SimplePolygon(ring_of([(0, 0), (4, 0), (4, 1), (0, 1)])),
            SimplePolygon(ring_of([(3, 0), (4, 0), (4, 4), (3, 4)])),
            SimplePolygon(ring_of([(0, 3), (4, 3), (4, 4), (0, 4)])),
            SimplePolygon(ring_of([(0, 0), (1, 0), (1, 4), (0, 4)])),
        ]
        pieces, holes = polygon_union(rects)
        assert len(pieces) == 1
        assert len(holes) == 1
        assert abs(signed_area2(holes[0])) == 8  # the 2x2 inner window
