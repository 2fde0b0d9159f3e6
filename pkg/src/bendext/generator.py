"""Deterministic random instance generator.

Five boundary families on integer coordinates:

- CONVEX: strictly convex polygon (random vector-sum construction).
- STAR: star-shaped polygon; the kernel point is recorded in metadata.
- SPIRAL: a thickened rectangular spiral strip, one long reflex channel.
- NOTCHED: a rectangle with rectangular notches cut into its top edge.
- RANDOM_SIMPLE: random points polygonized by angular sweep about the
  bottom-most point.

Chords are sampled from the diagonals of one random triangulation of the
vertex cycle, so any subset is automatically non-crossing. Outer-edge bend
corners are made by perturbing edge midpoints sideways by a random dyadic
fraction of the edge length, retrying while the boundary would lose
simplicity and dropping the bend after 100 failed tries.

Everything is drawn from a single `random.Random(seed)` stream using integer
arithmetic only (no floats, no trigonometry), so a spec generates the same
instance byte for byte on any platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import InfeasibleSpec, InternalInvariantError, InstanceError
from .geometry.numbers import (
    RAT0,
    RAT1,
    rational,
    rational_from_json,
    rational_to_json,
)
from .geometry.polygon import ring_is_simple, signed_area2
from .geometry.primitives import Point, SegRel, seg_rel
from .instance import Instance, validate_instance

FAMILIES = ("CONVEX", "STAR", "SPIRAL", "NOTCHED", "RANDOM_SIMPLE")

BEND_RETRIES = 100
# Bend offsets are multiples of 1/2^12; together with the half-integer edge
# midpoints every coordinate denominator stays at most 2^13, far under the
# 2^20 cap the instance format promises.
_OFFSET_DENOM = 1 << 12

IntPt = Tuple[int, int]


@dataclass(frozen=True)
class GenSpec:
    """What to generate: family, vertex count, chord count, bend probability
    per outer edge, and the seed."""

    family: str
    n: int
    m: int
    outer_bend_prob: Any = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(
                f"unknown family {self.family!r}; expected one of {FAMILIES}")
        for label, value in (("n", self.n), ("m", self.m), ("seed", self.seed)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{label} must be an integer")
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if self.m > self.n - 3:
            raise InfeasibleSpec(
                f"m={self.m} chords do not fit an n={self.n} cycle: a "
                f"triangulation has only n-3={self.n - 3} diagonals")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError("seed must fit in 64 bits")
        if isinstance(self.outer_bend_prob, float):
            raise ValueError("outer_bend_prob must be exact, not a float")
        try:
            prob = rational_from_json(self.outer_bend_prob) \
                if isinstance(self.outer_bend_prob, (int, str)) \
                else rational(self.outer_bend_prob)
        except (ValueError, TypeError, ZeroDivisionError):
            raise ValueError(
                f"bad outer_bend_prob {self.outer_bend_prob!r}") from None
        if not RAT0 <= prob <= RAT1:
            raise ValueError("outer_bend_prob must lie in [0, 1]")
        object.__setattr__(self, "outer_bend_prob", prob)


def _triangulation_diagonals(rng: random.Random, n: int) -> List[Tuple[int, int]]:
    """Diagonals of one random triangulation of the n-cycle (exactly n-3)."""
    diags: List[Tuple[int, int]] = []
    stack = [(0, n - 1)]
    while stack:
        a, b = stack.pop()
        if b - a < 2:
            continue
        k = rng.randrange(a + 1, b)
        if k - a > 1:
            diags.append((a, k))
        if b - k > 1:
            diags.append((k, b))
        stack.append((k, b))
        stack.append((a, k))
    return diags


def _vec_half(v: IntPt) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2*pi), measured from east.
    dx, dy = v
    return 0 if dy > 0 or (dy == 0 and dx > 0) else 1


def _vec_cmp(a: IntPt, b: IntPt) -> int:
    ha, hb = _vec_half(a), _vec_half(b)
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _monotone_deltas(rng: random.Random, vals: List[int]) -> List[int]:
    """Split sorted values into two monotone chains; return the signed steps
    (one chain walked forward, the other backward). Steps sum to zero."""
    lo, hi = vals[0], vals[-1]
    up_last, down_last = lo, lo
    deltas: List[int] = []
    for v in vals[1:-1]:
        if rng.randrange(2):
            deltas.append(v - up_last)
            up_last = v
        else:
            deltas.append(down_last - v)
            down_last = v
    deltas.append(hi - up_last)
    deltas.append(down_last - hi)
    return deltas


def _convex_corners(rng: random.Random, n: int) -> List[IntPt]:
    """Random strictly convex polygon: pair up monotone x and y step
    sequences, sort the vectors by angle, and walk them."""
    span = max(1 << 12, 8 * n)
    while True:
        xs = sorted(rng.randrange(span + 1) for _ in range(n))
        ys = sorted(rng.randrange(span + 1) for _ in range(n))
        dys = _monotone_deltas(rng, ys)
        rng.shuffle(dys)
        vecs = list(zip(_monotone_deltas(rng, xs), dys))
        if any(dx == 0 and dy == 0 for dx, dy in vecs):
            continue
        vecs.sort(key=cmp_to_key(_vec_cmp))
        # Equal-angle vectors would give collinear vertex triples; chords
        # between such vertices could not be drawn straight, so reject.
        if any(_vec_cmp(vecs[i], vecs[(i + 1) % n]) == 0 for i in range(n)):
            continue
        pts: List[IntPt] = []
        x = y = 0
        for dx, dy in vecs:
            pts.append((x, y))
            x += dx
            y += dy
        shift_x = -min(p[0] for p in pts)
        shift_y = -min(p[1] for p in pts)
        return [(px + shift_x, py + shift_y) for px, py in pts]


def _square_dir(s: int, half: int) -> IntPt:
    """Point s of the counterclockwise walk around the square of half-side
    `half`; increasing s means strictly increasing angle."""
    if s < 2 * half:
        return (s - half, -half)
    if s < 4 * half:
        return (half, s - 3 * half)
    if s < 6 * half:
        return (5 * half - s, half)
    return (-half, 7 * half - s)


def _star_corners(rng: random.Random, n: int) -> Tuple[List[IntPt], IntPt]:
    """Random star-shaped polygon with the origin-shifted kernel point
    returned alongside: directions in strictly increasing angular order with
    every gap under half a turn, arbitrary radii."""
    half = 1 << 10
    while 8 * half < 2 * n:
        half *= 2
    while True:
        dirs = [_square_dir(s, half)
                for s in sorted(rng.sample(range(8 * half), n))]
        if any(dirs[i][0] * dirs[(i + 1) % n][1]
               - dirs[i][1] * dirs[(i + 1) % n][0] <= 0 for i in range(n)):
            continue  # some angular gap reached half a turn; resample
        radii = [rng.randrange(2, 9) for _ in range(n)]
        shift = 8 * half
        pts = [(r * dx + shift, r * dy + shift)
               for (dx, dy), r in zip(dirs, radii)]
        return pts, (shift, shift)


_SPIRAL_DIRS: Tuple[IntPt, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _spiral_corners(rng: random.Random, n: int) -> List[IntPt]:
    """Thickened rectangular spiral strip with exactly n corners: offset a
    shrinking left-turning spine to both sides and cap the two ends. Odd n
    gets one extra corner from a pushed-out midpoint on the inner cap."""
    if n == 3:
        a = 4 + rng.randrange(8)
        b = 4 + rng.randrange(8)
        return [(0, 0), (a, 0), (0, b)]
    odd = n % 2
    segs = (n - 2 - odd) // 2
    w = 2
    gap = 2 + 2 * rng.randrange(3)
    step = 2 * w + gap
    start = rng.randrange(4)

    spine: List[IntPt] = [(0, 0)]
    dirs: List[IntPt] = []
    x = y = 0
    for k in range(segs):
        d = _SPIRAL_DIRS[(start + k) % 4]
        length = step * (segs - k + 1)
        x += d[0] * length
        y += d[1] * length
        spine.append((x, y))
        dirs.append(d)

    def wall(side: int) -> List[IntPt]:
        # side +1 = left of travel (inner wall), -1 = right (outer wall).
        normals = [(-d[1] * side, d[0] * side) for d in dirs]
        pts = [(spine[0][0] + w * normals[0][0],
                spine[0][1] + w * normals[0][1])]
        for k in range(1, segs):
            mx = normals[k - 1][0] + normals[k][0]
            my = normals[k - 1][1] + normals[k][1]
            pts.append((spine[k][0] + w * mx, spine[k][1] + w * my))
        pts.append((spine[segs][0] + w * normals[segs - 1][0],
                    spine[segs][1] + w * normals[segs - 1][1]))
        return pts

    outer = wall(-1)
    inner = wall(1)
    ring = outer + inner[::-1]
    if odd:
        d = dirs[-1]
        ring = outer + [(spine[segs][0] + d[0], spine[segs][1] + d[1])] \
            + inner[::-1]
    dx = rng.randrange(32)
    dy = rng.randrange(32)
    return [(px + dx, py + dy) for px, py in ring]


def _notched_corners(rng: random.Random, n: int) -> List[IntPt]:
    """Rectangle with (n-4)//4 unit-wide notches in the top edge; the
    remainder mod 4 is spent chamfering rectangle corners (one extra corner
    each)."""
    if n == 3:
        a = 4 + rng.randrange(8)
        b = 4 + rng.randrange(8)
        return [(0, 0), (a, 0), (0, b)]
    notches = (n - 4) // 4
    chamfers = n - 4 - 4 * notches
    width = max(3 * notches + 4, 8) + rng.randrange(6)
    height = 4 + rng.randrange(5)
    if notches:
        base = sorted(rng.sample(range(2, width - 3 - 2 * (notches - 1)),
                                 notches))
        slots = [b + 2 * i for i, b in enumerate(base)]
        depths = [2 + rng.randrange(height - 3) for _ in range(notches)]
    else:
        slots, depths = [], []
    cut = set(rng.sample(range(4), chamfers)) if chamfers else set()

    ring: List[IntPt] = []
    ring.extend([(0, 1), (1, 0)] if 0 in cut else [(0, 0)])
    ring.extend([(width - 1, 0), (width, 1)] if 1 in cut else [(width, 0)])
    ring.extend([(width, height - 1), (width - 1, height)]
                if 2 in cut else [(width, height)])
    for x, d in sorted(zip(slots, depths), reverse=True):
        ring.extend([(x + 1, height), (x + 1, height - d),
                     (x, height - d), (x, height)])
    ring.extend([(1, height), (0, height - 1)] if 3 in cut else [(0, height)])
    return ring


def _random_simple_corners(rng: random.Random, n: int) -> List[IntPt]:
    """Random distinct points polygonized by angular sweep about the
    bottom-most point; collinear runs keep the sweep simple by walking the
    last ray inward."""
    span = max(64, 6 * n)
    while True:
        seen = set()
        while len(seen) < n:
            seen.add((rng.randrange(span + 1), rng.randrange(span + 1)))
        pts = sorted(seen)
        anchor = min(pts, key=lambda p: (p[1], p[0]))
        rest = [p for p in pts if p != anchor]

        def cmp(a: IntPt, b: IntPt) -> int:
            va = (a[0] - anchor[0], a[1] - anchor[1])
            vb = (b[0] - anchor[0], b[1] - anchor[1])
            c = va[0] * vb[1] - va[1] * vb[0]
            if c:
                return -1 if c > 0 else 1
            return (va[0] ** 2 + va[1] ** 2) - (vb[0] ** 2 + vb[1] ** 2)

        rest.sort(key=cmp_to_key(cmp))
        # The sweep leaves each collinear ray walked outward, which is fine
        # everywhere except the very last ray: the closing edge back to the
        # anchor must not run over the nearer ray points, so walk it inward.
        last = rest[-1]
        k = len(rest) - 1
        while k > 0 and _collinear(anchor, rest[k - 1], last) and \
                (rest[k - 1][0] - anchor[0]) * (last[0] - anchor[0]) \
                + (rest[k - 1][1] - anchor[1]) * (last[1] - anchor[1]) > 0:
            k -= 1
        rest[k:] = rest[k:][::-1]
        ring = [anchor] + rest
        raw = tuple(Point(rational(px), rational(py)) for px, py in ring)
        if signed_area2(raw) > 0 and ring_is_simple(raw):
            return ring


def _collinear(o: IntPt, a: IntPt, b: IntPt) -> bool:
    return (a[0] - o[0]) * (b[1] - o[1]) == (a[1] - o[1]) * (b[0] - o[0])


def _boundary_corners(rng: random.Random,
                      spec: GenSpec) -> Tuple[List[IntPt], Dict[str, Any]]:
    meta: Dict[str, Any] = {"family": spec.family}
    if spec.family == "CONVEX":
        return _convex_corners(rng, spec.n), meta
    if spec.family == "STAR":
        pts, kernel = _star_corners(rng, spec.n)
        meta["kernel"] = {"x": rational_to_json(kernel[0]),
                          "y": rational_to_json(kernel[1])}
        return pts, meta
    if spec.family == "SPIRAL":
        return _spiral_corners(rng, spec.n), meta
    if spec.family == "NOTCHED":
        return _notched_corners(rng, spec.n), meta
    return _random_simple_corners(rng, spec.n), meta


def _bend_fits(boundary: Sequence[Point], edge: int, bend: Point) -> bool:
    """Would replacing edge (edge, edge+1) with the elbow through `bend`
    keep the boundary simple? Checks the two new segments against every
    other edge; the only allowed contact is sharing the corner p or q with
    a neighboring edge."""
    b = len(boundary)
    p = boundary[edge]
    q = boundary[(edge + 1) % b]
    if bend == p or bend == q:
        return False
    for i in range(b):
        if i == edge:
            continue
        a0 = boundary[i]
        a1 = boundary[(i + 1) % b]
        for s, t in ((p, bend), (bend, q)):
            rel = seg_rel(a0, a1, s, t)
            if rel is SegRel.DISJOINT:
                continue
            # Two segments with a shared endpoint can only meet there, so
            # an ENDPOINT_TOUCH with a shared old corner is that corner.
            shared = ({s, t} & {a0, a1}) - {bend}
            if rel is SegRel.ENDPOINT_TOUCH and shared:
                continue
            return False
    return True


def _insert_outer_bends(rng: random.Random, corners: Sequence[IntPt],
                        prob) -> Tuple[List[Point], List[int]]:
    """Perturb edge midpoints sideways into bend corners with probability
    `prob` per edge, keeping the boundary simple (at most 100 tries per
    edge, then the edge stays straight)."""
    ring: List[Point] = [Point(rational(x), rational(y)) for x, y in corners]
    n = len(ring)
    scale = 1 << 30
    bends: List[Optional[Point]] = [None] * n
    for i in range(n):
        if rational(rng.randrange(scale)) >= prob * scale:
            continue
        p = ring[i]
        q = ring[(i + 1) % n]
        dx = q.x - p.x
        dy = q.y - p.y
        for _ in range(BEND_RETRIES):
            f = rational(rng.randrange(1, 1 << 10), _OFFSET_DENOM)
            side = 1 if rng.randrange(2) else -1
            cand = Point((p.x + q.x) / 2 - side * f * dy,
                         (p.y + q.y) / 2 + side * f * dx)
            if _bend_fits(_current_ring(ring, bends), _edge_index(bends, i),
                          cand):
                bends[i] = cand
                break
    boundary: List[Point] = []
    vertex_corners: List[int] = []
    for i in range(n):
        vertex_corners.append(len(boundary))
        boundary.append(ring[i])
        if bends[i] is not None:
            boundary.append(bends[i])
    return boundary, vertex_corners


def _current_ring(ring: Sequence[Point],
                  bends: Sequence[Optional[Point]]) -> List[Point]:
    out: List[Point] = []
    for i, p in enumerate(ring):
        out.append(p)
        if bends[i] is not None:
            out.append(bends[i])
    return out


def _edge_index(bends: Sequence[Optional[Point]], i: int) -> int:
    # Position of vertex i inside the ring with the bends placed so far;
    # edge i has no bend yet, so its start is the vertex itself.
    return i + sum(1 for b in bends[:i] if b is not None)


def generate(spec: GenSpec) -> Instance:
    """Generate a validated instance; a pure function of the spec."""
    rng = random.Random(spec.seed)
    for _ in range(64):
        corners, meta = _boundary_corners(rng, spec)
        raw = tuple(Point(rational(x), rational(y)) for x, y in corners)
        if len(set(raw)) != len(raw) or signed_area2(raw) <= 0 \
                or not ring_is_simple(raw):
            continue
        diagonals = _triangulation_diagonals(rng, spec.n)
        chords = tuple(sorted(rng.sample(diagonals, spec.m)))
        boundary, vertex_corners = _insert_outer_bends(
            rng, corners, spec.outer_bend_prob)
        inst = Instance(tuple(boundary), tuple(vertex_corners), chords,
                        metadata=meta)
        try:
            return validate_instance(inst)
        except InstanceError:
            continue
    raise InternalInvariantError(
        f"could not generate a valid instance for {spec!r}")
