"""Input model: a pre-drawn outer cycle plus the chords to draw inside it.

An instance is the boundary polygon as drawn (graph vertices and outer-edge
bend corners, counterclockwise), a list marking which boundary corners are
graph vertices, and the chord list. Chord endpoints are vertex labels, i.e.
positions in `vertex_corners`, not raw boundary indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from .errors import (
    ChordIsOuterEdge,
    CrossingChords,
    DuplicateChord,
    InstanceError,
    NotSimplePolygon,
    TooManyOuterBends,
)
from .geometry.numbers import rational_from_json, rational_to_json
from .geometry.polygon import SimplePolygon, ring_is_simple, signed_area2
from .geometry.primitives import Point


@dataclass(frozen=True)
class Instance:
    boundary: Tuple[Point, ...]
    vertex_corners: Tuple[int, ...]
    chords: Tuple[Tuple[int, int], ...]
    metadata: Mapping[str, Any] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.vertex_corners)

    @property
    def m(self) -> int:
        return len(self.chords)

    def vertex_point(self, label: int) -> Point:
        return self.boundary[self.vertex_corners[label]]

    def vertex_points(self) -> Tuple[Point, ...]:
        return tuple(self.boundary[i] for i in self.vertex_corners)

    def polygon(self) -> SimplePolygon:
        # Collinear bend corners vanish under normalization; graph vertices
        # stay on the boundary either way.
        return SimplePolygon(self.boundary)


def _norm_chord(c: Tuple[int, int]) -> Tuple[int, int]:
    return (c[0], c[1]) if c[0] < c[1] else (c[1], c[0])


def _check_noncrossing(n: int, chords: Sequence[Tuple[int, int]]) -> None:
    """Stack scan over the cyclic order; two chords cross iff their endpoint
    pairs interleave."""
    opens: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    closes: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for c in chords:
        u, v = _norm_chord(c)
        opens[u].append((u, v))
        closes[v].append((u, v))
    for u in range(n):
        opens[u].sort(key=lambda c: c[1], reverse=True)
        closes[u].sort(key=lambda c: c[0], reverse=True)
    stack: List[Tuple[int, int]] = []
    for x in range(n):
        for c in closes[x]:
            if not stack or stack[-1] != c:
                other = stack[-1] if stack else None
                raise CrossingChords(f"chords {c} and {other} cross")
            stack.pop()
        stack.extend(opens[x])
    assert not stack


def validate_instance(inst: Instance) -> Instance:
    """Return the instance unchanged if it is well formed, else raise."""
    b = len(inst.boundary)
    n = inst.n
    if n < 3:
        raise InstanceError("need at least 3 graph vertices")
    if b < n:
        raise InstanceError("vertex corners exceed boundary corners")
    seen_idx = set()
    for i in inst.vertex_corners:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < b:
            raise InstanceError(f"vertex corner index {i!r} out of range")
        seen_idx.add(i)
    if list(inst.vertex_corners) != sorted(seen_idx) or len(seen_idx) != n:
        raise InstanceError("vertex corners must be strictly increasing")

    vc = inst.vertex_corners
    for k in range(n):
        gap = (vc[(k + 1) % n] - vc[k] - 1) % b
        if gap > 1:
            raise TooManyOuterBends(
                f"outer edge ({k}, {(k + 1) % n}) has {gap} bend corners")

    ring = inst.boundary
    for i in range(b):
        if ring[i] == ring[(i + 1) % b]:
            raise NotSimplePolygon(f"repeated boundary corner at index {i}")
    if signed_area2(ring) <= 0:
        raise NotSimplePolygon("boundary must be counterclockwise")
    if not ring_is_simple(ring):
        raise NotSimplePolygon("boundary crosses itself")

    seen_chords = set()
    for c in inst.chords:
        if len(c) != 2:
            raise InstanceError(f"chord {c!r} is not a pair")
        u, v = c
        for w in (u, v):
            if not isinstance(w, int) or isinstance(w, bool) or not 0 <= w < n:
                raise InstanceError(f"chord endpoint {w!r} out of range")
        if u == v:
            raise InstanceError(f"chord {c!r} has equal endpoints")
        lo, hi = _norm_chord(c)
        if hi - lo == 1 or (lo == 0 and hi == n - 1):
            raise ChordIsOuterEdge(f"chord {c!r} duplicates an outer edge")
        if (lo, hi) in seen_chords:
            raise DuplicateChord(f"chord {c!r} appears twice")
        seen_chords.add((lo, hi))

    _check_noncrossing(n, inst.chords)
    return inst


def instance_from_json(obj: Any) -> Instance:
    if not isinstance(obj, dict):
        raise InstanceError("instance must be a JSON object")
    try:
        raw_boundary = obj["boundary"]
        raw_vc = obj["vertex_corners"]
        raw_chords = obj["chords"]
    except KeyError as e:
        raise InstanceError(f"missing field {e.args[0]!r}") from None
    if not isinstance(raw_boundary, list) or not isinstance(raw_vc, list) \
            or not isinstance(raw_chords, list):
        raise InstanceError("boundary, vertex_corners, chords must be arrays")
    boundary = []
    for pt in raw_boundary:
        if not isinstance(pt, dict) or set(pt) != {"x", "y"}:
            raise InstanceError(f"bad boundary point {pt!r}")
        try:
            boundary.append(Point(rational_from_json(pt["x"]),
                                  rational_from_json(pt["y"])))
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise InstanceError(f"bad coordinate in {pt!r}: {e}") from None
    chords = []
    for c in raw_chords:
        if not isinstance(c, list) or len(c) != 2:
            raise InstanceError(f"bad chord {c!r}")
        chords.append((c[0], c[1]))
    metadata = obj.get("metadata", {})
    if not isinstance(metadata, dict):
        raise InstanceError("metadata must be an object")
    inst = Instance(tuple(boundary), tuple(raw_vc), tuple(chords), metadata)
    return validate_instance(inst)


def instance_to_json(inst: Instance) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "boundary": [{"x": rational_to_json(p.x), "y": rational_to_json(p.y)}
                     for p in inst.boundary],
        "vertex_corners": list(inst.vertex_corners),
        "chords": [[u, v] for u, v in inst.chords],
    }
    if inst.metadata:
        out["metadata"] = dict(inst.metadata)
    return out
