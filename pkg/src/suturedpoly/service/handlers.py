"""Request handlers: one pure function per verb, shared by HTTP and CLI.

Handlers convert wire documents to exact values, call the core modules,
and convert results back.  They raise the library's error types; the app
layer maps those onto HTTP statuses and the CLI onto exit codes.
"""

from __future__ import annotations

from fractions import Fraction

from .. import cones as cones_mod
from .. import norms as norms_mod
from ..corpus import example_names, load_example
from ..errors import DomainError
from ..foxcalc import (
    alexander_polynomial,
    jacobian_determinant,
    labeled_support,
    newton_polytope,
    parse_presentation_file,
    parse_presentation_text,
    polynomial_to_json,
)
from ..linalg import Vector, format_rational, pair_any, rational
from ..polytope import (
    LabeledSupport,
    Polytope,
    convex_hull,
    face_in_direction,
    facets,
    point_set_from_json,
    polytope_to_json,
    translate,
    vertex_centroid,
)
from ..render import render_cones_svg, render_polytope_svg
from ..verify import run_verification
from . import schemas as s


def _polytope_from_doc(doc: s.PolytopeDoc) -> tuple[Polytope, LabeledSupport | None]:
    point_set, labels = point_set_from_json(doc.model_dump())
    return convex_hull(point_set), labels


def _polytope_doc(p: Polytope, labels: LabeledSupport | None = None) -> s.PolytopeDoc:
    return s.PolytopeDoc.model_validate(polytope_to_json(p, labels))


def _system_doc(system: cones_mod.DualConeSystem) -> s.ConeSystemDoc:
    return s.ConeSystemDoc.model_validate(cones_mod.cone_system_to_json(system))


def _direction(coords: list[int | str], dim: int) -> Vector:
    if len(coords) != dim:
        raise DomainError(f"direction has {len(coords)} coordinates, polytope has {dim}")
    return Vector([rational(c) for c in coords])


def hull(req: s.HullRequest) -> s.HullResponse:
    p, labels = _polytope_from_doc(req.points)
    return s.HullResponse(
        polytope=_polytope_doc(p, labels),
        vertex_count=len(p.vertices),
        affine_dim=p.affine_dim,
    )


def facet_list(req: s.FacetsRequest) -> s.FacetsResponse:
    p, _ = _polytope_from_doc(req.polytope)
    out = []
    for f in facets(p):
        offset = f.offset
        out.append(
            s.FacetDoc(
                normal=[int(c) for c in f.outward_normal.coords],
                offset=int(offset) if offset.denominator == 1 else format_rational(offset),
                vertices=sorted(f.incident_vertex_indices),
            )
        )
    return s.FacetsResponse(facets=out)


def dual_cone_system(req: s.DualConesRequest) -> s.DualConesResponse:
    p, _ = _polytope_from_doc(req.polytope)
    system = cones_mod.dual_cones(p)
    fan = None
    if req.fan_samples > 0:
        report = cones_mod.fan_check(system, samples=req.fan_samples, seed=req.seed)
        fan = s.FanReportDoc.model_validate(report.to_json())
    return s.DualConesResponse(system=_system_doc(system), fan=fan)


def foliation_cone_set(req: s.FoliationConesRequest) -> s.FoliationConesResponse:
    _, labels = _polytope_from_doc(req.polytope)
    if labels is None:
        raise DomainError("foliation cones need a labeled support ('labels' key)")
    result = cones_mod.foliation_cones(labels)
    return s.FoliationConesResponse(
        system=_system_doc(result.system),
        selected_labels=sorted(c.label for c in result.cones),
        hypothesis_warning=result.hypothesis_warning,
    )


def support(req: s.SupportRequest) -> s.SupportResponse:
    p, _ = _polytope_from_doc(req.polytope)
    a = _direction(req.at, p.ambient_dim)
    if req.sense == "minimize":
        evaluation = norms_mod.support_min(p, a)
        value, face = evaluation.value, evaluation.attaining_face
    else:
        face = face_in_direction(p, a, "maximize")
        value = max(pair_any(a, p.vertices[i]) for i in face.vertex_indices)
    return s.SupportResponse(
        value=int(value) if value.denominator == 1 else format_rational(value),
        face_vertices=sorted(face.vertex_indices),
        face_dim=face.dim,
    )


def _rational_doc(value: Fraction) -> int | str:
    return int(value) if value.denominator == 1 else format_rational(value)


def norm(req: s.NormRequest) -> s.NormResponse:
    if req.kind in ("yt", "y", "z"):
        if req.polytope is None or req.at is None:
            raise DomainError(f"norm kind {req.kind!r} needs 'polytope' and 'at'")
        p, _ = _polytope_from_doc(req.polytope)
        if req.center:
            p = translate(p, -vertex_centroid(p))
        a = _direction(req.at, p.ambient_dim)
        if req.kind == "yt":
            value = norms_mod.y_t(p, a)
        elif req.kind == "y":
            value = norms_mod.y_seminorm(p, a)
        else:
            value = norms_mod.z_symmetrized(p, a)
    elif req.kind in ("chi-minus", "chi-beta", "chi-s"):
        if req.surfaces is None:
            raise DomainError(f"norm kind {req.kind!r} needs 'surfaces'")
        data = norms_mod.surface_data_from_json(req.surfaces.model_dump())
        if req.kind == "chi-minus":
            value = Fraction(norms_mod.chi_minus(data))
        elif req.kind == "chi-beta":
            value = Fraction(norms_mod.chi_beta(data))
        else:
            value = norms_mod.chi_s_minus(data)
    else:  # c-s-t
        if req.summand is None:
            raise DomainError("norm kind 'c-s-t' needs 'summand'")
        summand = norms_mod.TrivializationSummand(
            euler=req.summand.chi,
            index_sum=rational(req.summand.index),
            rotation_sum=req.summand.rotation,
        )
        value = norms_mod.c_S_t(summand)
    return s.NormResponse(kind=req.kind, value=_rational_doc(value))


def ball(req: s.BallRequest) -> s.BallResponse:
    p, _ = _polytope_from_doc(req.polytope)
    if req.center:
        p = translate(p, -vertex_centroid(p))
    result = norms_mod.unit_ball(p)
    if result.bounded:
        assert result.polytope is not None
        return s.BallResponse(bounded=True, polytope=_polytope_doc(result.polytope))
    return s.BallResponse(
        bounded=False,
        halfspaces=[
            s.HalfspaceDoc(
                normal=[format_rational(c) for c in normal.coords],
                bound=format_rational(rhs),
            )
            for normal, rhs in result.halfspaces
        ],
    )


def fox(req: s.FoxRequest) -> s.FoxResponse:
    if req.jacobian:
        count, ab, words = parse_presentation_text(req.text)
        if len(words) != count:
            raise DomainError(
                f"the Jacobian route needs exactly {count} image words, got {len(words)}"
            )
        poly = jacobian_determinant(words, ab)
    else:
        presentation, ab = parse_presentation_file(req.text)
        poly = alexander_polynomial(presentation, ab)
    labels = labeled_support(poly, lspace=req.lspace)
    hull_p = newton_polytope(poly)
    return s.FoxResponse(
        polynomial=s.PolynomialDoc.model_validate(polynomial_to_json(poly)),
        newton_polytope=_polytope_doc(hull_p, labels),
        hypothesis_warning=labels.hypothesis_warning,
    )


def verify(req: s.VerifyRequest) -> s.VerifyResponse:
    report = run_verification(seed=req.seed, example=req.example)
    doc = report.to_json()
    return s.VerifyResponse(
        ok=doc["ok"],
        seed=doc["seed"],
        checks=[s.CheckDoc.model_validate(c) for c in doc["checks"]],
        text=report.render_text(),
    )


def render(req: s.RenderRequest) -> s.RenderResponse:
    p, _ = _polytope_from_doc(req.polytope)
    if req.target == "polytope":
        svg = render_polytope_svg(p, axes=req.axes)
    else:
        system = cones_mod.dual_cones(p)
        svg = render_cones_svg(system, axes=req.axes, radius=req.radius)
    return s.RenderResponse(svg=svg)


def examples() -> list[s.ExampleSummary]:
    out = []
    for name in example_names():
        example = load_example(name)
        out.append(
            s.ExampleSummary(
                name=name,
                provenance=example.provenance,
                vertex_count=len(example.polytope.vertices),
                ambient_dim=example.polytope.ambient_dim,
            )
        )
    return out


def example_detail(name: str) -> s.ExampleResponse:
    example = load_example(name)
    expected = None
    if example.expected_cones is not None:
        expected = _system_doc(example.expected_cones)
    return s.ExampleResponse(
        name=example.name,
        provenance=example.provenance,
        polytope=_polytope_doc(example.polytope, example.labels),
        expected_cones=expected,
    )
