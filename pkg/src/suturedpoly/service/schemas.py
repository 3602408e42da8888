"""Pydantic request/response models for the HTTP service and the CLI client.

These mirror the on-disk JSON formats: rationals travel as ``p/q`` strings
or integers, lattice data as plain integer lists.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

RationalLike = int | str


class LabelDoc(BaseModel):
    point: list[int]
    rank: int
    is_z: bool = False


class PolytopeDoc(BaseModel):
    dim: int
    points: list[list[RationalLike]]
    labels: list[LabelDoc] | None = None


class ConeDoc(BaseModel):
    label: int
    rays: list[list[int]]
    halfspaces: list[list[int]]


class ConeSystemDoc(BaseModel):
    cones: list[ConeDoc]


class FacetDoc(BaseModel):
    normal: list[int]
    offset: RationalLike
    vertices: list[int]


class HalfspaceDoc(BaseModel):
    normal: list[RationalLike]
    bound: RationalLike


class SurfaceComponentDoc(BaseModel):
    chi: int
    n: int = 0
    beta: int = 0


class SurfaceDataDoc(BaseModel):
    components: list[SurfaceComponentDoc]


class SummandDoc(BaseModel):
    chi: int
    index: RationalLike = 0
    rotation: int = 0


# --- requests ---------------------------------------------------------------


class HullRequest(BaseModel):
    points: PolytopeDoc


class FacetsRequest(BaseModel):
    polytope: PolytopeDoc


class DualConesRequest(BaseModel):
    polytope: PolytopeDoc
    fan_samples: int = 0
    seed: int = 0


class FoliationConesRequest(BaseModel):
    polytope: PolytopeDoc


class SupportRequest(BaseModel):
    polytope: PolytopeDoc
    at: list[RationalLike]
    sense: Literal["minimize", "maximize"] = "minimize"


class NormRequest(BaseModel):
    kind: Literal["yt", "y", "z", "chi-minus", "chi-beta", "chi-s", "c-s-t"]
    polytope: PolytopeDoc | None = None
    at: list[RationalLike] | None = None
    center: bool = False
    surfaces: SurfaceDataDoc | None = None
    summand: SummandDoc | None = None


class BallRequest(BaseModel):
    polytope: PolytopeDoc
    center: bool = False


class FoxRequest(BaseModel):
    text: str
    jacobian: bool = False
    lspace: bool = False


class VerifyRequest(BaseModel):
    example: str | None = None
    seed: int = 0


class RenderRequest(BaseModel):
    target: Literal["polytope", "cones"] = "polytope"
    polytope: PolytopeDoc
    axes: tuple[int, int] = (0, 1)
    radius: float = 3.0


# --- responses --------------------------------------------------------------


class HullResponse(BaseModel):
    polytope: PolytopeDoc
    vertex_count: int
    affine_dim: int


class FacetsResponse(BaseModel):
    facets: list[FacetDoc]


class FanReportDoc(BaseModel):
    covers: bool
    disjoint: bool
    witnesses: list[list[RationalLike]]
    samples: int
    seed: int


class DualConesResponse(BaseModel):
    system: ConeSystemDoc
    fan: FanReportDoc | None = None


class FoliationConesResponse(BaseModel):
    system: ConeSystemDoc
    selected_labels: list[int]
    hypothesis_warning: bool


class SupportResponse(BaseModel):
    value: RationalLike
    face_vertices: list[int]
    face_dim: int


class NormResponse(BaseModel):
    kind: str
    value: RationalLike


class BallResponse(BaseModel):
    bounded: bool
    polytope: PolytopeDoc | None = None
    halfspaces: list[HalfspaceDoc] | None = None


class PolynomialDoc(BaseModel):
    terms: list[dict[str, Any]]


class FoxResponse(BaseModel):
    polynomial: PolynomialDoc
    newton_polytope: PolytopeDoc
    hypothesis_warning: bool = False


class CheckDoc(BaseModel):
    name: str
    ok: bool
    details: dict[str, Any] = Field(default_factory=dict)


class VerifyResponse(BaseModel):
    ok: bool
    seed: int
    checks: list[CheckDoc]
    text: str


class RenderResponse(BaseModel):
    svg: str


class ExampleSummary(BaseModel):
    name: str
    provenance: str
    vertex_count: int
    ambient_dim: int


class ExampleResponse(BaseModel):
    name: str
    provenance: str
    polytope: PolytopeDoc
    expected_cones: ConeSystemDoc | None = None


class ErrorDoc(BaseModel):
    code: str
    message: str
    details: dict[str, Any] | None = None
