"""Layered SVG rendering of instances, drawings, and solver artifacts.

Everything is built by string concatenation into one self-contained document:
a boundary layer, optional visibility-region and refinement layers, a chord
layer with marked bend dots, and a witness layer for NO verdicts. Exactness
lives in the JSON formats; here coordinates are decimal approximations of the
rationals at 20 significant digits, which is presentation-only. The y axis is
flipped so the picture matches the mathematical orientation.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from typing import List, Optional, Sequence, Tuple

from .drawing import Drawing
from .geometry import Point, SimplePolygon, rational
from .instance import Instance

PRECISION = 20
MARGIN_FRACTION = 24

_BOUNDARY_STYLE = 'fill="#f5f2e8" stroke="#333333"'
_CHORD_STYLE = 'fill="none" stroke="#b03030"'
_VIS_FILLS = ("#4878a8", "#48a878", "#a87848", "#7848a8")
_STEP_STROKE = "#2a6f4e"
_WITNESS_STYLE = 'fill="none" stroke="#b03030" stroke-dasharray="4,3"'


def _dec(value) -> str:
    with localcontext() as ctx:
        ctx.prec = PRECISION
        d = Decimal(int(value.numerator)) / Decimal(int(value.denominator))
    s = format(d, "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return s if s not in ("", "-0") else "0"


class _Canvas:
    """Accumulates SVG elements in a flipped-y coordinate frame."""

    def __init__(self, polys: Sequence[SimplePolygon]):
        xs = [p.x for poly in polys for p in poly.corners]
        ys = [p.y for poly in polys for p in poly.corners]
        x0, x1 = min(xs), max(xs)
        y0, y1 = min(ys), max(ys)
        span = max(x1 - x0, y1 - y0, 1)
        margin = span / MARGIN_FRACTION
        self._x0 = x0 - margin
        self._y1 = y1 + margin
        self.width = (x1 - x0) + 2 * margin
        self.height = (y1 - y0) + 2 * margin
        self.stroke = span / 220
        self.dot = span / 90
        self.parts: List[str] = []

    def map(self, p: Point) -> Tuple[str, str]:
        return _dec(p.x - self._x0), _dec(self._y1 - p.y)

    def points_attr(self, pts: Sequence[Point]) -> str:
        return " ".join(f"{x},{y}" for x, y in map(self.map, pts))

    def polygon(self, poly: SimplePolygon, style: str) -> None:
        self.parts.append(
            f'<polygon points="{self.points_attr(poly.corners)}" {style} '
            f'stroke-width="{_dec(self.stroke)}"/>')

    def polyline(self, pts: Sequence[Point], style: str, cls: str) -> None:
        self.parts.append(
            f'<polyline class="{cls}" points="{self.points_attr(pts)}" '
            f'{style} stroke-width="{_dec(self.stroke)}"/>')

    def circle(self, p: Point, r, fill: str, cls: str) -> None:
        x, y = self.map(p)
        self.parts.append(
            f'<circle class="{cls}" cx="{x}" cy="{y}" r="{_dec(r)}" '
            f'fill="{fill}"/>')

    def open_group(self, gid: str, cls: Optional[str] = None) -> None:
        at = f' class="{cls}"' if cls else ""
        self.parts.append(f'<g id="{gid}"{at}>')

    def close_group(self) -> None:
        self.parts.append("</g>")

    def document(self) -> str:
        body = "\n".join(self.parts)
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="0 0 {_dec(self.width)} {_dec(self.height)}">\n'
            f"{body}\n</svg>\n")


def _witness_artifacts(inst: Instance,
                       drawing: Drawing) -> Tuple[List[SimplePolygon],
                                                  Optional[Tuple[Point, Point]]]:
    """Endpoint visibility regions and the straight segment of the chord a
    NO witness names, the picture of why the instance was rejected."""
    witness = drawing.witness or {}
    chord = witness.get("chord")
    if chord is None:
        return [], None
    from .visibility import visibility_polygon

    P = inst.polygon()
    u, v = chord
    pu, pv = inst.vertex_point(u), inst.vertex_point(v)
    regions = [visibility_polygon(P, pu).region,
               visibility_polygon(P, pv).region]
    return regions, (pu, pv)


def render_svg(inst: Instance,
               drawing: Optional[Drawing] = None,
               vis_regions: Optional[Sequence[SimplePolygon]] = None,
               refinement_trace: Optional[Sequence[SimplePolygon]] = None) -> str:
    """Render the instance with whatever artifacts are supplied.

    Layer order is back to front: boundary, visibility regions, refinement
    polygons (one layer per step, opacity fading with depth), chord paths
    with bend dots, then the witness overlay when the drawing is a NO with
    a named chord.
    """
    P = inst.polygon()
    vis = list(vis_regions or ())
    steps = list(refinement_trace or ())
    witness_regions: List[SimplePolygon] = []
    witness_segment: Optional[Tuple[Point, Point]] = None
    if drawing is not None and drawing.verdict == "no":
        witness_regions, witness_segment = _witness_artifacts(inst, drawing)

    canvas = _Canvas([P] + vis + steps + witness_regions)

    canvas.open_group("boundary")
    canvas.polygon(P, _BOUNDARY_STYLE)
    for label in range(inst.n):
        canvas.circle(inst.vertex_point(label), canvas.dot, "#333333", "vertex")
    canvas.close_group()

    if vis:
        canvas.open_group("vis-regions")
        for i, region in enumerate(vis):
            fill = _VIS_FILLS[i % len(_VIS_FILLS)]
            canvas.polygon(
                region,
                f'class="vis" fill="{fill}" fill-opacity="0.3" stroke="{fill}"')
        canvas.close_group()

    if steps:
        canvas.open_group("refinement")
        for i, poly in enumerate(steps):
            # Later steps sit on top; keep every outline visible through the
            # stack by fading the fill, not the stroke.
            opacity = _dec(rational(i + 1, 2 * len(steps) + 2))
            canvas.open_group(f"step-{i}", "step")
            canvas.polygon(
                poly,
                f'fill="{_STEP_STROKE}" fill-opacity="{opacity}" '
                f'stroke="{_STEP_STROKE}"')
            canvas.close_group()
        canvas.close_group()

    if drawing is not None and drawing.verdict == "yes":
        canvas.open_group("chords")
        for cp in drawing.chords:
            canvas.polyline(cp.path, _CHORD_STYLE, "chord")
            if len(cp.path) == 3:
                canvas.circle(cp.path[1], canvas.dot, "#b03030", "bend")
        canvas.close_group()

    if witness_regions or witness_segment:
        canvas.open_group("witness")
        for i, region in enumerate(witness_regions):
            fill = _VIS_FILLS[i % len(_VIS_FILLS)]
            canvas.polygon(
                region,
                f'class="witness-vis" fill="{fill}" fill-opacity="0.35" '
                f'stroke="{fill}"')
        if witness_segment is not None:
            canvas.polyline(witness_segment, _WITNESS_STYLE, "witness-chord")
        canvas.close_group()

    return canvas.document()
