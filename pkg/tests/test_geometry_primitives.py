"""Exact predicates: orientation, segment relations, rational round-trips."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bendext.geometry import Point
from bendext.geometry.numbers import (rational, rational_from_json,
                                      rational_to_json)
from bendext.geometry.primitives import (CCW, COLLINEAR, CW, Segment, SegRel,
                                         along_param, collinear,
                                         line_intersection, on_segment,
                                         orientation, seg_rel,
                                         segment_common_points,
                                         segment_intersect,
                                         strictly_inside_segment)

coords = st.integers(min_value=-50, max_value=50)
points = st.builds(Point, coords, coords)


def P(x, y) -> Point:
    return Point(x, y)


class TestOrientation:
    def test_ccw(self):
        assert orientation(P(0, 0), P(1, 0), P(0, 1)) == CCW

    def test_cw(self):
        assert orientation(P(0, 0), P(0, 1), P(1, 0)) == CW

    def test_collinear(self):
        assert orientation(P(0, 0), P(2, 2), P(5, 5)) == COLLINEAR
        assert collinear(P(0, 0), P(2, 2), P(5, 5))

    def test_exact_near_degenerate(self):
        # floats would misjudge this; rationals must not
        a = P(rational(0), rational(0))
        b = P(rational(10**12), rational(1))
        c = P(rational(2 * 10**12), rational(2))
        assert orientation(a, b, c) == COLLINEAR

    @given(points, points, points)
    def test_swap_flips_sign(self, a, b, c):
        assert orientation(a, b, c) == -orientation(a, c, b)

    @given(points, points, points)
    def test_cyclic_invariance(self, a, b, c):
        assert orientation(a, b, c) == orientation(b, c, a)


class TestOnSegment:
    def test_interior(self):
        assert on_segment(P(1, 1), P(0, 0), P(2, 2))
        assert strictly_inside_segment(P(1, 1), P(0, 0), P(2, 2))

    def test_endpoint(self):
        assert on_segment(P(0, 0), P(0, 0), P(2, 2))
        assert not strictly_inside_segment(P(0, 0), P(0, 0), P(2, 2))

    def test_off_line(self):
        assert not on_segment(P(1, 2), P(0, 0), P(2, 2))

    def test_beyond_end(self):
        assert not on_segment(P(3, 3), P(0, 0), P(2, 2))

    @given(points, points, st.integers(0, 8))
    def test_convex_combination_lies_on(self, a, b, k):
        t = rational(k, 8)
        p = Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
        assert on_segment(p, a, b)


class TestAlongParam:
    def test_orders_points(self):
        a, b = P(0, 0), P(4, 0)
        ts = [along_param(a, b, P(x, 0)) for x in (0, 1, 3, 4)]
        assert ts == sorted(ts)
        assert ts[0] == 0


class TestSegRel:
    def test_proper_cross(self):
        assert seg_rel(P(0, 0), P(2, 2), P(0, 2), P(2, 0)) \
            is SegRel.PROPER_CROSS

    def test_disjoint(self):
        assert seg_rel(P(0, 0), P(1, 0), P(0, 1), P(1, 1)) is SegRel.DISJOINT

    def test_shared_endpoint(self):
        assert seg_rel(P(0, 0), P(1, 1), P(1, 1), P(2, 0)) \
            is SegRel.ENDPOINT_TOUCH

    def test_t_touch(self):
        # endpoint of one in the interior of the other
        assert seg_rel(P(0, 0), P(2, 0), P(1, 0), P(1, 2)) \
            is SegRel.ENDPOINT_TOUCH

    def test_collinear_overlap(self):
        assert seg_rel(P(0, 0), P(3, 0), P(1, 0), P(5, 0)) is SegRel.OVERLAP

    def test_collinear_apart(self):
        assert seg_rel(P(0, 0), P(1, 0), P(2, 0), P(3, 0)) is SegRel.DISJOINT

    def test_collinear_point_touch(self):
        # collinear segments meeting at a single shared endpoint only touch
        assert seg_rel(P(0, 0), P(1, 0), P(1, 0), P(3, 0)) \
            is SegRel.ENDPOINT_TOUCH

    @given(points, points, points, points)
    def test_symmetry(self, a, b, c, d):
        assert seg_rel(a, b, c, d) is seg_rel(c, d, a, b)
        assert seg_rel(a, b, c, d) is seg_rel(b, a, d, c)

    @given(points, points, points, points)
    def test_common_points_match_relation(self, a, b, c, d):
        rel = seg_rel(a, b, c, d)
        pts = segment_common_points(a, b, c, d)
        if rel is SegRel.DISJOINT:
            assert pts == ()
        elif rel in (SegRel.PROPER_CROSS, SegRel.ENDPOINT_TOUCH):
            assert len(pts) == 1
            p = pts[0]
            assert on_segment(p, a, b) and on_segment(p, c, d)
        else:
            assert len(pts) == 2
            for p in pts:
                assert on_segment(p, a, b) and on_segment(p, c, d)


class TestLineIntersection:
    def test_crossing_lines(self):
        p = line_intersection(P(0, 0), P(4, 4), P(0, 4), P(4, 0))
        assert p == P(2, 2)

    def test_parallel(self):
        assert line_intersection(P(0, 0), P(1, 0), P(0, 1), P(1, 1)) is None

    def test_segment_intersect_cross(self):
        s = Segment(P(0, 0), P(2, 2))
        t = Segment(P(0, 2), P(2, 0))
        assert segment_intersect(s, t) is SegRel.PROPER_CROSS


class TestRationalJson:
    def test_integer_compact(self):
        assert rational_to_json(rational(4)) == "4"

    def test_fraction(self):
        assert rational_to_json(rational(1, 3)) == "1/3"

    def test_negative(self):
        assert rational_from_json("-7/2") == rational(-7, 2)

    def test_int_accepted(self):
        assert rational_from_json(5) == rational(5)

    def test_float_rejected(self):
        with pytest.raises((ValueError, TypeError)):
            rational_from_json(0.5)

    def test_bool_rejected(self):
        with pytest.raises((ValueError, TypeError)):
            rational_from_json(True)

    @given(st.fractions(max_denominator=10**6))
    def test_round_trip(self, q):
        r = rational(q.numerator, q.denominator)
        assert rational_from_json(rational_to_json(r)) == r


class TestPoint:
    def test_equality_and_hash(self):
        assert P(1, 2) == Point(rational(2, 2), rational(4, 2))
        assert hash(P(1, 2)) == hash(Point(rational(2, 2), rational(4, 2)))

    def test_vector_ops(self):
        assert P(3, 4) - P(1, 1) == P(2, 3)
        assert P(1, 1) + P(2, 3) == P(3, 4)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            P(0, 0).x = rational(1)
