"""Command-line client for the suturedpoly service.

Every verb builds the same request document the HTTP endpoint accepts and
dispatches it either in-process (default: no server required, output is a
pure function of the inputs) or to a running service via ``--url``.

Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification
mismatch.  Errors are emitted as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from pydantic import BaseModel, ValidationError

from .errors import DomainError, ParseError, SuturedPolyError
from .service import handlers
from .service import schemas as s

OUTDIR_ENV = "SUTUREDPOLY_OUTDIR"

EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3


def _read_json_file(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _read_text_file(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _parse_tuple(text: str, what: str) -> list[str]:
    parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
    if not parts:
        raise ParseError(f"empty {what}: {text!r}")
    return parts


def _polytope_doc(path: str) -> s.PolytopeDoc:
    try:
        return s.PolytopeDoc.model_validate(_read_json_file(path))
    except ValidationError as exc:
        raise ParseError(f"{path} is not a polytope document: {exc}") from exc


class _Remote:
    """Minimal HTTP dispatch mirroring the in-process handlers."""

    def __init__(self, base_url: str):
        self.base_url = base_url.rstrip("/")

    def post(self, path: str, request: BaseModel, response_model: type[BaseModel]) -> BaseModel:
        import httpx

        response = httpx.post(
            f"{self.base_url}/{path}", json=request.model_dump(mode="json"), timeout=120.0
        )
        if response.status_code >= 400:
            try:
                payload = response.json()
            except json.JSONDecodeError:
                payload = {"code": "http_error", "message": response.text}
            if payload.get("code") == "parse_error":
                raise ParseError(payload.get("message", "parse error"))
            raise DomainError(payload.get("message", "domain error"), **(payload.get("details") or {}))
        return response_model.model_validate(response.json())


def _dispatch(args, path: str, request: BaseModel, response_model: type[BaseModel]) -> Any:
    if args.url:
        return _Remote(args.url).post(path, request, response_model)
    handler = {
        "hull": handlers.hull,
        "facets": handlers.facet_list,
        "dual-cones": handlers.dual_cone_system,
        "foliation-cones": handlers.foliation_cone_set,
        "support": handlers.support,
        "norm": handlers.norm,
        "ball": handlers.ball,
        "fox": handlers.fox,
        "verify": handlers.verify,
        "render": handlers.render,
    }[path]
    return handler(request)


def _emit(args, response: BaseModel, human: str) -> None:
    if args.json:
        print(json.dumps(response.model_dump(mode="json"), sort_keys=True))
    else:
        print(human, end="" if human.endswith("\n") else "\n")


# --- verb implementations ----------------------------------------------------


def _cmd_hull(args) -> int:
    req = s.HullRequest(points=_polytope_doc(args.points))
    resp = _dispatch(args, "hull", req, s.HullResponse)
    lines = [f"vertices: {resp.vertex_count}   affine dim: {resp.affine_dim}"]
    for point in resp.polytope.points:
        lines.append("  (" + ", ".join(str(c) for c in point) + ")")
    _emit(args, resp, "\n".join(lines))
    return 0


def _cmd_facets(args) -> int:
    req = s.FacetsRequest(polytope=_polytope_doc(args.polytope))
    resp = _dispatch(args, "facets", req, s.FacetsResponse)
    lines = [f"facets: {len(resp.facets)}"]
    for f in resp.facets:
        normal = "(" + ", ".join(str(c) for c in f.normal) + ")"
        lines.append(f"  normal {normal}  offset {f.offset}  vertices {f.vertices}")
    _emit(args, resp, "\n".join(lines))
    return 0


def _cmd_dual_cones(args) -> int:
    req = s.DualConesRequest(
        polytope=_polytope_doc(args.polytope),
        fan_samples=args.fan_samples,
        seed=args.seed,
    )
    resp = _dispatch(args, "dual-cones", req, s.DualConesResponse)
    lines = [f"cones: {len(resp.system.cones)}"]
    for cone in resp.system.cones:
        rays = " ".join("(" + ",".join(map(str, r)) + ")" for r in cone.rays)
        lines.append(f"  Q{cone.label}: rays {rays}")
    if resp.fan is not None:
        lines.append(f"fan: covers={resp.fan.covers} disjoint={resp.fan.disjoint}")
    _emit(args, resp, "\n".join(lines))
    return 0


def _cmd_foliation_cones(args) -> int:
    req = s.FoliationConesRequest(polytope=_polytope_doc(args.polytope))
    resp = _dispatch(args, "foliation-cones", req, s.FoliationConesResponse)
    lines = [
        f"selected cones: {resp.selected_labels} of {len(resp.system.cones)}",
    ]
    if resp.hypothesis_warning:
        lines.append("warning: some support ranks contradict the rank-one hypothesis")
    _emit(args, resp, "\n".join(lines))
    return 0


def _cmd_support(args) -> int:
    req = s.SupportRequest(
        polytope=_polytope_doc(args.polytope),
        at=_parse_tuple(args.at, "direction"),
        sense=args.sense,
    )
    resp = _dispatch(args, "support", req, s.SupportResponse)
    _emit(
        args,
        resp,
        f"value: {resp.value}   face: vertices {resp.face_vertices} dim {resp.face_dim}",
    )
    return 0


def _cmd_norm(args) -> int:
    summand = None
    if args.summand:
        parts = _parse_tuple(args.summand, "summand")
        if len(parts) != 3:
            raise ParseError("--summand needs 'chi,index,rotation'")
        try:
            summand = s.SummandDoc(chi=int(parts[0]), index=parts[1], rotation=int(parts[2]))
        except ValueError as exc:
            raise ParseError(f"bad summand {args.summand!r}") from exc
    surfaces = None
    if args.surfaces:
        try:
            surfaces = s.SurfaceDataDoc.model_validate(_read_json_file(args.surfaces))
        except ValidationError as exc:
            raise ParseError(f"{args.surfaces} is not a surface document: {exc}") from exc
    req = s.NormRequest(
        kind=args.kind,
        polytope=_polytope_doc(args.polytope) if args.polytope else None,
        at=_parse_tuple(args.at, "direction") if args.at else None,
        center=args.center,
        surfaces=surfaces,
        summand=summand,
    )
    resp = _dispatch(args, "norm", req, s.NormResponse)
    _emit(args, resp, f"{resp.kind}: {resp.value}")
    return 0


def _cmd_ball(args) -> int:
    req = s.BallRequest(polytope=_polytope_doc(args.polytope), center=args.center)
    resp = _dispatch(args, "ball", req, s.BallResponse)
    if resp.bounded:
        assert resp.polytope is not None
        lines = [f"bounded ball, {len(resp.polytope.points)} vertices"]
        for point in resp.polytope.points:
            lines.append("  (" + ", ".join(str(c) for c in point) + ")")
    else:
        assert resp.halfspaces is not None
        lines = [f"unbounded ball, {len(resp.halfspaces)} halfspaces"]
        for h in resp.halfspaces:
            lines.append(
                "  <(" + ", ".join(str(c) for c in h.normal) + f"), a> <= {h.bound}"
            )
    _emit(args, resp, "\n".join(lines))
    return 0


def _cmd_fox(args) -> int:
    req = s.FoxRequest(
        text=_read_text_file(args.presentation),
        jacobian=args.jacobian,
        lspace=args.lspace,
    )
    resp = _dispatch(args, "fox", req, s.FoxResponse)
    terms = " ".join(
        f"{item['coef']:+d}*t^{item['exp']}" for item in resp.polynomial.terms
    )
    lines = [f"polynomial: {terms}"]
    lines.append(
        f"newton polytope: {len(resp.newton_polytope.points)} vertices in dim {resp.newton_polytope.dim}"
    )
    if resp.hypothesis_warning:
        lines.append("warning: coefficients contradict the rank-one hypothesis")
    _emit(args, resp, "\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    req = s.VerifyRequest(example=args.example, seed=args.seed)
    resp = _dispatch(args, "verify", req, s.VerifyResponse)
    if args.json:
        print(json.dumps(resp.model_dump(mode="json"), sort_keys=True))
    else:
        print(resp.text, end="")
    return 0 if resp.ok else EXIT_VERIFY


def _cmd_render(args) -> int:
    if args.example:
        detail = handlers.example_detail(args.example)
        polytope = detail.polytope
    elif args.polytope:
        polytope = _polytope_doc(args.polytope)
    elif args.cones:
        polytope = _polytope_doc(args.cones)
    else:
        raise ParseError("render needs --polytope, --cones or --example")
    target = "cones" if (args.cones or args.target == "cones") else "polytope"
    axes = (0, 1)
    if args.axes:
        parts = _parse_tuple(args.axes, "axes")
        if len(parts) != 2:
            raise ParseError("--axes needs two comma-separated indices")
        try:
            axes = (int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise ParseError(f"bad axes {args.axes!r}") from exc
    req = s.RenderRequest(target=target, polytope=polytope, axes=axes, radius=args.radius)
    resp = _dispatch(args, "render", req, s.RenderResponse)
    out_path = args.out
    if out_path is None and os.environ.get(OUTDIR_ENV):
        out_path = os.path.join(os.environ[OUTDIR_ENV], "render.svg")
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(resp.svg)
        print(out_path)
    else:
        print(resp.svg, end="")
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suturedpoly",
        description="Exact polytopes, dual cones, seminorms and Fox calculus.",
    )
    parser.add_argument("--url", help="dispatch to a running service instead of in-process")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name: str, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="emit the wire document")
        return p

    p = add("hull", _cmd_hull, help="convex hull of a point file")
    p.add_argument("points", help="JSON point file")

    p = add("facets", _cmd_facets, help="facet description of a full-dimensional polytope")
    p.add_argument("polytope", help="JSON polytope file")

    p = add("dual-cones", _cmd_dual_cones, help="dual vertex cones of a polytope")
    p.add_argument("polytope", help="JSON polytope file")
    p.add_argument("--fan-samples", type=int, default=0, help="run the fan check with this many samples")
    p.add_argument("--seed", type=int, default=0)

    p = add("foliation-cones", _cmd_foliation_cones, help="cones selected by exact-Z labels")
    p.add_argument("polytope", help="JSON polytope file with labels")

    p = add("support", _cmd_support, help="support value and attaining face")
    p.add_argument("--polytope", required=True)
    p.add_argument("--at", required=True, help="direction, e.g. '1,0,0'")
    p.add_argument("--sense", choices=["minimize", "maximize"], default="minimize")

    p = add("norm", _cmd_norm, help="seminorm or complexity evaluation")
    p.add_argument(
        "--kind",
        required=True,
        choices=["yt", "y", "z", "chi-minus", "chi-beta", "chi-s", "c-s-t"],
    )
    p.add_argument("--polytope")
    p.add_argument("--at", help="direction, e.g. '1,0,0'")
    p.add_argument("--center", action="store_true", help="translate the centroid to 0 first")
    p.add_argument("--surfaces", help="surface component JSON file")
    p.add_argument("--summand", help="'chi,index,rotation' for c-s-t")

    p = add("ball", _cmd_ball, help="polar-dual unit ball")
    p.add_argument("--polytope", required=True)
    p.add_argument("--center", action="store_true")

    p = add("fox", _cmd_fox, help="Fox-calculus polynomial and Newton polytope")
    p.add_argument("presentation", help="presentation/map text file")
    p.add_argument("--jacobian", action="store_true", help="square Jacobian of a free-group map")
    p.add_argument("--lspace", action="store_true", help="label ranks under the rank-one hypothesis")

    p = add("verify", _cmd_verify, help="run the reproduction battery")
    p.add_argument("--example", help="restrict to one registered example")
    p.add_argument("--seed", type=int, default=0)

    p = add("render", _cmd_render, help="emit a standalone SVG")
    p.add_argument("--polytope", help="JSON polytope file")
    p.add_argument("--cones", help="JSON polytope file; renders its dual cones")
    p.add_argument("--example", help="render a registered example")
    p.add_argument("--target", choices=["polytope", "cones"], default="polytope")
    p.add_argument("--axes", help="projection axes, e.g. '0,1'")
    p.add_argument("--radius", type=float, default=3.0)
    p.add_argument("-o", "--out", help=f"output file (default: ${OUTDIR_ENV}/render.svg or stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(json.dumps(exc.payload(), sort_keys=True), file=sys.stderr)
        return EXIT_PARSE
    except SuturedPolyError as exc:
        print(json.dumps(exc.payload(), sort_keys=True), file=sys.stderr)
        return EXIT_DOMAIN
    except ValidationError as exc:
        print(
            json.dumps({"code": "parse_error", "message": str(exc)}, sort_keys=True),
            file=sys.stderr,
        )
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
