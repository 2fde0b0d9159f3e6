"""Command-line front end: solve, verify, oracle, gen, and vis.

Thin wrappers over the library with file based JSON input and output. Exit
codes: 0 for YES / valid / found, 1 for NO / invalid / not found, 2 for input
errors (including malformed JSON, reported with line and column), 3 for
internal invariant failures, which indicate a bug and not a bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .drawing import Drawing, drawing_from_json, drawing_to_json, point_to_json
from .dualtree import build_dual_tree
from .errors import BendExtError, InstanceError, InternalInvariantError, \
    GeometryError, PlacementFailed, ResolutionTooLarge
from .generator import FAMILIES, GenSpec, generate
from .instance import Instance, instance_from_json, instance_to_json
from .solver import RefinementState, bottom_up, top_down
from .svg import render_svg
from .verifier import grid_oracle, validate_drawing
from .visibility import common_visibility, visibility_polygon

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class _InputError(Exception):
    """Anything wrong with what the user handed us."""


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _InputError(
            f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}") from exc


def _write_json(obj: Any, path: Optional[str]) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_text(text: str, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_instance(path: str) -> Instance:
    # instance_from_json runs full validation on the way in.
    return instance_from_json(_read_json(path))


def _solve_with_state(inst: Instance) -> Tuple[Drawing, RefinementState]:
    """The solve pipeline, keeping the refinement state for trace and SVG
    output. YES drawings are re-checked against the independent validator."""
    dt = build_dual_tree(inst)
    result = bottom_up(inst, dt)
    if result.verdict == "no":
        return Drawing("no", (), result.witness), result.state
    try:
        drawing = top_down(inst, dt, result.state)
    except PlacementFailed:
        drawing = top_down(inst, dt, result.state, careful=True)
    report = validate_drawing(inst, drawing)
    if not report.ok:
        raise PlacementFailed(
            f"constructed drawing failed validation: {report.violations}")
    return drawing, result.state


def _trace_records(state: RefinementState) -> List[Dict[str, Any]]:
    records = []
    for rec in state.log:
        entry: Dict[str, Any] = {
            "step": rec.step,
            "face": rec.face,
            "class": rec.edge_class.name,
            "polygon_corners": [point_to_json(p)
                                for p in rec.new_polygon.corners],
        }
        if rec.bend is not None:
            entry["bend"] = point_to_json(rec.bend)
        records.append(entry)
    return records


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = _load_instance(args.input)
    drawing, state = _solve_with_state(inst)
    _write_json(drawing_to_json(drawing), args.output)
    if args.trace is not None:
        _write_json(_trace_records(state), args.trace)
    if args.svg is not None:
        steps = [rec.new_polygon for rec in state.log] if args.trace else None
        _write_text(render_svg(inst, drawing=drawing,
                               refinement_trace=steps), args.svg)
    return EXIT_YES if drawing.verdict == "yes" else EXIT_NO


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    drawing = drawing_from_json(_read_json(args.drawing))
    report = validate_drawing(inst, drawing)
    _write_json({
        "ok": report.ok,
        "violations": [{"kind": v.kind.value, "detail": v.detail}
                       for v in report.violations],
    }, None)
    return EXIT_YES if report.ok else EXIT_NO


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    found = grid_oracle(inst, args.resolution, budget=args.budget)
    if found is None:
        _write_json({"found": False}, None)
        return EXIT_NO
    _write_json({"found": True, "drawing": drawing_to_json(found)}, None)
    return EXIT_YES


def _cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(family=args.family, n=args.n, m=args.m,
                   outer_bend_prob=args.outer_bend_prob, seed=args.seed)
    inst = generate(spec)
    _write_json(instance_to_json(inst), args.output)
    return EXIT_YES


def _parse_chord(text: str) -> Tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise _InputError(f"chord must be 'u,v', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise _InputError(f"chord endpoints must be integers, got {text!r}") \
            from None


def _cmd_vis(args: argparse.Namespace) -> int:
    inst = _load_instance(args.instance)
    u, v = _parse_chord(args.chord)
    for label in (u, v):
        if not 0 <= label < inst.n:
            raise _InputError(f"vertex {label} out of range 0..{inst.n - 1}")
    P = inst.polygon()
    pu, pv = inst.vertex_point(u), inst.vertex_point(v)
    regions = [visibility_polygon(P, pu).region,
               visibility_polygon(P, pv).region]
    regions.extend(common_visibility(P, pu, pv))
    _write_text(render_svg(inst, vis_regions=regions), args.svg)
    return EXIT_YES


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bendext",
        description="Decide and construct 1-bend drawings of chords inside "
                    "a pre-drawn polygon.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--input", required=True, help="instance JSON file")
    p.add_argument("--output", help="drawing JSON file (default: stdout)")
    p.add_argument("--svg", help="render the result to this SVG file")
    p.add_argument("--trace",
                   help="write refinement step records to this JSON file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="validate a drawing against an instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--drawing", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="brute-force grid search for a drawing")
    p.add_argument("--instance", required=True)
    p.add_argument("--resolution", type=int, required=True)
    p.add_argument("--budget", type=int,
                   help="node expansion budget (default: env "
                        "BENDEXT_ORACLE_BUDGET or 10^7)")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--outer-bend-prob", default="0",
                   help="rational like 1/4; probability of bending each "
                        "outer edge")
    p.add_argument("--output", help="instance JSON file (default: stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("vis", help="render visibility regions of a chord")
    p.add_argument("--instance", required=True)
    p.add_argument("--chord", required=True, metavar="u,v")
    p.add_argument("--svg", required=True)
    p.set_defaults(func=_cmd_vis)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InstanceError, ResolutionTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GeometryError as exc:
        # Geometry rejections of user supplied data (non-simple boundary,
        # degenerate pinch) are input errors, not bugs.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BendExtError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
