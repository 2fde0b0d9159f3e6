"""HTTP service wrapping the solver, verifier, oracle, and generator.

One FastAPI app with five POST endpoints mirroring the CLI subcommands plus
a health probe. Payloads reuse the canonical JSON formats: rationals travel
as "p" or "p/q" strings, points as {"x", "y"} objects. Domain rejections
(bad instances, infeasible generator specs, out-of-range viewpoints) map to
422; internal invariant failures map to 500 because they are bugs, not bad
requests.
"""

from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from fastapi import FastAPI, HTTPException
from fastapi.requests import Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .drawing import Drawing, drawing_from_json, drawing_to_json, point_to_json
from .errors import BendExtError, InternalInvariantError
from .generator import GenSpec, generate
from .instance import Instance, instance_from_json, instance_to_json
from .solver import solve
from .verifier import grid_oracle, validate_drawing
from .visibility import common_visibility, visibility_polygon

Coordinate = Union[int, str]


class PointModel(BaseModel):
    x: Coordinate
    y: Coordinate


class InstanceModel(BaseModel):
    boundary: List[PointModel]
    vertex_corners: List[int]
    chords: List[Tuple[int, int]] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    def to_instance(self) -> Instance:
        return instance_from_json(self.model_dump(mode="json"))

    @classmethod
    def from_instance(cls, inst: Instance) -> "InstanceModel":
        return cls.model_validate(instance_to_json(inst))


class ChordPathModel(BaseModel):
    edge: Tuple[int, int]
    path: List[PointModel]


class DrawingModel(BaseModel):
    verdict: Literal["yes", "no"]
    chords: List[ChordPathModel] = Field(default_factory=list)
    witness: Optional[Dict[str, Any]] = None

    def to_drawing(self) -> Drawing:
        return drawing_from_json(self.model_dump(mode="json"))

    @classmethod
    def from_drawing(cls, d: Drawing) -> "DrawingModel":
        return cls.model_validate(drawing_to_json(d))


class SolveRequest(BaseModel):
    instance: InstanceModel


class VerifyRequest(BaseModel):
    instance: InstanceModel
    drawing: DrawingModel


class ViolationModel(BaseModel):
    kind: str
    detail: str


class VerifyResponse(BaseModel):
    ok: bool
    violations: List[ViolationModel]


class OracleRequest(BaseModel):
    instance: InstanceModel
    resolution: int = Field(ge=2)
    budget: Optional[int] = Field(default=None, ge=1)


class OracleResponse(BaseModel):
    found: bool
    drawing: Optional[DrawingModel] = None


class GenerateRequest(BaseModel):
    family: str
    n: int
    m: int
    outer_bend_prob: Coordinate = "0"
    seed: int = 0


class VisibilityRequest(BaseModel):
    instance: InstanceModel
    chord: Tuple[int, int]


class VisibilityResponse(BaseModel):
    u_region: List[PointModel]
    v_region: List[PointModel]
    common: List[List[PointModel]]


def _ring_json(corners) -> List[Dict[str, str]]:
    return [point_to_json(p) for p in corners]


def create_app() -> FastAPI:
    app = FastAPI(
        title="bendext",
        version=__version__,
        description="1-bend extension of chord drawings inside a fixed "
                    "polygon.")

    @app.exception_handler(BendExtError)
    async def _domain_error(request: Request, exc: BendExtError) -> JSONResponse:
        status = 500 if isinstance(exc, InternalInvariantError) else 422
        return JSONResponse(
            status_code=status,
            content={"detail": str(exc), "kind": type(exc).__name__})

    @app.get("/health")
    def health() -> Dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.post("/solve", response_model=DrawingModel,
              response_model_exclude_none=True)
    def solve_endpoint(req: SolveRequest) -> DrawingModel:
        drawing = solve(req.instance.to_instance())
        return DrawingModel.from_drawing(drawing)

    @app.post("/verify", response_model=VerifyResponse)
    def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
        report = validate_drawing(req.instance.to_instance(),
                                  req.drawing.to_drawing())
        return VerifyResponse(
            ok=report.ok,
            violations=[ViolationModel(kind=v.kind.value, detail=v.detail)
                        for v in report.violations])

    @app.post("/oracle", response_model=OracleResponse,
              response_model_exclude_none=True)
    def oracle_endpoint(req: OracleRequest) -> OracleResponse:
        found = grid_oracle(req.instance.to_instance(), req.resolution,
                            budget=req.budget)
        if found is None:
            return OracleResponse(found=False)
        return OracleResponse(found=True,
                              drawing=DrawingModel.from_drawing(found))

    @app.post("/generate", response_model=InstanceModel)
    def generate_endpoint(req: GenerateRequest) -> InstanceModel:
        try:
            spec = GenSpec(family=req.family, n=req.n, m=req.m,
                           outer_bend_prob=req.outer_bend_prob, seed=req.seed)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return InstanceModel.from_instance(generate(spec))

    @app.post("/visibility", response_model=VisibilityResponse)
    def visibility_endpoint(req: VisibilityRequest) -> VisibilityResponse:
        inst = req.instance.to_instance()
        u, v = req.chord
        for label in (u, v):
            if not 0 <= label < inst.n:
                raise HTTPException(
                    status_code=422,
                    detail=f"vertex {label} out of range 0..{inst.n - 1}")
        P = inst.polygon()
        pu, pv = inst.vertex_point(u), inst.vertex_point(v)
        return VisibilityResponse(
            u_region=_ring_json(visibility_polygon(P, pu).region.corners),
            v_region=_ring_json(visibility_polygon(P, pv).region.corners),
            common=[_ring_json(piece.corners)
                    for piece in common_visibility(P, pu, pv)])

    return app


app = create_app()
