"""FastAPI application wrapping the exact-geometry core.

All endpoints are stateless POSTs over the shared wire documents; the
computations are pure, so any number of clients can hit a single process.
Domain errors map to 422, parse errors to 400, both with the library's
machine-readable payloads.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import ParseError, SuturedPolyError
from . import handlers
from . import schemas as s


def create_app() -> FastAPI:
    app = FastAPI(
        title="suturedpoly",
        description=(
            "Exact rational polytopes, dual vertex cones, support seminorms "
            "and Fox-calculus pipelines."
        ),
        version="0.1.0",
    )

    @app.exception_handler(SuturedPolyError)
    async def _error_handler(request: Request, exc: SuturedPolyError) -> JSONResponse:
        status = 400 if isinstance(exc, ParseError) else 422
        return JSONResponse(status_code=status, content=exc.payload())

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok"}

    @app.post("/hull", response_model=s.HullResponse)
    def hull(req: s.HullRequest) -> s.HullResponse:
        return handlers.hull(req)

    @app.post("/facets", response_model=s.FacetsResponse)
    def facets(req: s.FacetsRequest) -> s.FacetsResponse:
        return handlers.facet_list(req)

    @app.post("/dual-cones", response_model=s.DualConesResponse)
    def dual_cones(req: s.DualConesRequest) -> s.DualConesResponse:
        return handlers.dual_cone_system(req)

    @app.post("/foliation-cones", response_model=s.FoliationConesResponse)
    def foliation_cones(req: s.FoliationConesRequest) -> s.FoliationConesResponse:
        return handlers.foliation_cone_set(req)

    @app.post("/support", response_model=s.SupportResponse)
    def support(req: s.SupportRequest) -> s.SupportResponse:
        return handlers.support(req)

    @app.post("/norm", response_model=s.NormResponse)
    def norm(req: s.NormRequest) -> s.NormResponse:
        return handlers.norm(req)

    @app.post("/ball", response_model=s.BallResponse)
    def ball(req: s.BallRequest) -> s.BallResponse:
        return handlers.ball(req)

    @app.post("/fox", response_model=s.FoxResponse)
    def fox(req: s.FoxRequest) -> s.FoxResponse:
        return handlers.fox(req)

    @app.post("/verify", response_model=s.VerifyResponse)
    def verify(req: s.VerifyRequest) -> s.VerifyResponse:
        return handlers.verify(req)

    @app.post("/render", response_model=s.RenderResponse)
    def render(req: s.RenderRequest) -> s.RenderResponse:
        return handlers.render(req)

    @app.get("/examples", response_model=list[s.ExampleSummary])
    def examples() -> list[s.ExampleSummary]:
        return handlers.examples()

    @app.get("/examples/{name}", response_model=s.ExampleResponse)
    def example_detail(name: str) -> s.ExampleResponse:
        return handlers.example_detail(name)

    return app


app = create_app()
