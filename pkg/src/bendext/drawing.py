"""Output drawings: one polyline per chord, at most one interior bend.

A Drawing is either a YES answer carrying the chord polylines, or a NO answer
carrying a witness record naming the chord that cannot be drawn.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from .errors import DrawingError
from .geometry import Point
from .geometry.numbers import rational_from_json, rational_to_json


def point_to_json(p: Point) -> Dict[str, Any]:
    return {"x": rational_to_json(p.x), "y": rational_to_json(p.y)}


def point_from_json(obj: Any) -> Point:
    if not isinstance(obj, dict) or set(obj) != {"x", "y"}:
        raise DrawingError(f"bad point {obj!r}")
    try:
        return Point(rational_from_json(obj["x"]), rational_from_json(obj["y"]))
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise DrawingError(f"bad coordinate in {obj!r}: {e}") from None


@dataclass(frozen=True)
class ChordPath:
    """Polyline for one chord: 2 points (straight) or 3 (one bend)."""

    edge: Tuple[int, int]
    path: Tuple[Point, ...]

    def __post_init__(self):
        if len(self.path) not in (2, 3):
            raise DrawingError(
                f"chord {self.edge} path must have 2 or 3 points, "
                f"got {len(self.path)}")

    @property
    def bend(self) -> Optional[Point]:
        return self.path[1] if len(self.path) == 3 else None


@dataclass(frozen=True)
class Drawing:
    """Solver output: verdict plus chord polylines (YES) or witness (NO)."""

    verdict: str
    chords: Tuple[ChordPath, ...] = ()
    witness: Optional[Dict[str, Any]] = field(default=None)

    def __post_init__(self):
        if self.verdict not in ("yes", "no"):
            raise DrawingError(f"verdict must be 'yes' or 'no', got {self.verdict!r}")
        if self.verdict == "no" and self.witness is None:
            raise DrawingError("a 'no' drawing needs a witness")

    def path_of(self, chord: Tuple[int, int]) -> Tuple[Point, ...]:
        u, v = chord
        for cp in self.chords:
            if cp.edge == (u, v):
                return cp.path
            if cp.edge == (v, u):
                return cp.path[::-1]
        raise KeyError(f"no path for chord {chord}")


def drawing_to_json(d: Drawing) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "verdict": d.verdict,
        "chords": [
            {"edge": [cp.edge[0], cp.edge[1]],
             "path": [point_to_json(p) for p in cp.path]}
            for cp in d.chords
        ],
    }
    if d.witness is not None:
        out["witness"] = d.witness
    return out


def drawing_from_json(obj: Any) -> Drawing:
    if not isinstance(obj, dict):
        raise DrawingError("drawing must be a JSON object")
    verdict = obj.get("verdict")
    raw_chords = obj.get("chords", [])
    if not isinstance(raw_chords, list):
        raise DrawingError("chords must be an array")
    chords = []
    for rc in raw_chords:
        if not isinstance(rc, dict) or "edge" not in rc or "path" not in rc:
            raise DrawingError(f"bad chord record {rc!r}")
        edge = rc["edge"]
        if not isinstance(edge, list) or len(edge) != 2 \
                or not all(isinstance(w, int) and not isinstance(w, bool) for w in edge):
            raise DrawingError(f"bad chord edge {edge!r}")
        path = tuple(point_from_json(p) for p in rc["path"])
        chords.append(ChordPath((edge[0], edge[1]), path))
    witness = obj.get("witness")
    if witness is not None and not isinstance(witness, dict):
        raise DrawingError("witness must be an object")
    return Drawing(verdict, tuple(chords), witness)
