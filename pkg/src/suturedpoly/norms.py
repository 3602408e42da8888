"""Support functions, the vertex seminorm family, and complexity evaluators.

The support minimum over a polytope P and a direction a is

    c(a) = min { pair(v, a) : v vertex of P },

and the translate-dependent function y_t(a) = -c(a).  When P is centered
(vertex centroid at the origin) the asymmetric seminorm is

    y(a) = max { pair(-v, a) : v vertex of P },

with symmetrization z(a) = (y(a) + y(-a)) / 2.

The dual unit ball exposed here is  B = { a : pair(v, a) <= 1 for all
vertices v }, the polar of the centered polytope itself.  Its facets are
in bijection with the polytope's vertices, and the cone over the facet
belonging to a vertex equals that vertex's dual cone; this is the ball
that makes the face/cone duality of the worked pyramid example hold with
exact primitive-ray equality.  It is the centrally mirrored image of the
sublevel set { y <= 1 }: a lies in B iff y(-a) <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .errors import DimensionMismatch, DomainError, ParseError
from .linalg import _CoordTuple, format_rational, pair_any
from .polytope import Face, Polytope, convex_hull, face_in_direction, facets, vertex_centroid

Point = _CoordTuple


@dataclass(frozen=True)
class SupportEvaluation:
    """Optimal pairing value together with the face attaining it."""

    value: Fraction
    attaining_face: Face


@dataclass(frozen=True)
class NormBall:
    """Polar-dual unit ball: a Polytope when bounded, halfspaces otherwise.

    Unbounded balls (source polytope not full-dimensional, i.e. the
    seminorm has a kernel) are returned as the halfspace list
    ``[(normal, 1), ...]`` meaning { a : pair(normal, a) <= 1 }.
    """

    bounded: bool
    polytope: Polytope | None = None
    halfspaces: tuple[tuple[Point, Fraction], ...] = ()


@dataclass(frozen=True)
class SurfaceComponent:
    """Per-component complexity data: Euler characteristic, suture and
    1-complex intersection counts."""

    euler: int
    suture_count: int = 0
    beta_count: int = 0

    def __post_init__(self):
        if self.suture_count < 0 or self.beta_count < 0:
            raise DomainError("intersection counts must be non-negative")


@dataclass(frozen=True)
class SurfaceComplexityData:
    components: tuple[SurfaceComponent, ...]


@dataclass(frozen=True)
class TrivializationSummand:
    """Inputs of the combined complexity c = euler + index_sum - rotation_sum."""

    euler: int
    index_sum: Fraction
    rotation_sum: int


def support_min(p: Polytope, a: Point) -> SupportEvaluation:
    """Exact minimum of the pairing over the polytope and its attaining face."""
    face = face_in_direction(p, a, "minimize")
    idx = min(face.vertex_indices)
    return SupportEvaluation(pair_any(a, p.vertices[idx]), face)


def y_t(p: Polytope, a: Point) -> Fraction:
    """Negated support minimum; depends on which translate of P is supplied."""
    return -support_min(p, a).value


def _require_centered(p: Polytope) -> None:
    centroid = vertex_centroid(p)
    if not centroid.is_zero():
        raise DomainError(
            "polytope must be centered (vertex centroid at the origin); "
            f"centroid is {centroid}",
        )


def y_seminorm(p_centered: Polytope, a: Point) -> Fraction:
    """max of pair(-v, a) over the vertices of a centered polytope.

    Refuses uncentered input instead of silently recentering: the centered
    seminorm and the translate-dependent y_t are deliberately different
    objects.
    """
    _require_centered(p_centered)
    if a.dim != p_centered.ambient_dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {p_centered.ambient_dim}")
    return max(pair_any(a, -v) for v in p_centered.vertices)


def z_symmetrized(p_centered: Polytope, a: Point) -> Fraction:
    """(y(a) + y(-a)) / 2 on a centered polytope."""
    return (y_seminorm(p_centered, a) + y_seminorm(p_centered, -a)) / 2


def unit_ball(p_centered: Polytope) -> NormBall:
    """Polar dual ball { a : pair(v, a) <= 1 for all vertices v }.

    Bounded (and returned in polytope form) exactly when the source is
    full-dimensional; otherwise the halfspace form is returned.  Facets of
    the bounded ball correspond one-to-one to source vertices, and the cone
    over each facet is the matching dual vertex cone.
    """
    _require_centered(p_centered)
    if not p_centered.is_full_dimensional():
        hs = tuple((v, Fraction(1)) for v in p_centered.vertices)
        return NormBall(bounded=False, halfspaces=hs)
    ball_vertices = []
    for facet in facets(p_centered):
        if facet.offset <= 0:
            raise DomainError(
                "polar dual needs the origin in the interior; "
                f"facet offset {facet.offset} is not positive"
            )
        ball_vertices.append(facet.outward_normal.scale(1 / facet.offset))
    return NormBall(bounded=True, polytope=convex_hull(ball_vertices))


def polar_dual(p: Polytope) -> Polytope:
    """Polar polytope of a full-dimensional polytope with 0 interior."""
    ball = unit_ball(p)
    if not ball.bounded:
        raise DomainError("polar dual of a non-full-dimensional polytope is unbounded")
    assert ball.polytope is not None
    return ball.polytope


# ---------------------------------------------------------------------------
# Complexity evaluators
# ---------------------------------------------------------------------------


def chi_minus(s: SurfaceComplexityData) -> int:
    """Sum of max(0, -euler) over components."""
    return sum(max(0, -c.euler) for c in s.components)


def chi_beta(s: SurfaceComplexityData) -> int:
    """Sum of max(0, -euler + beta_count) over components."""
    return sum(max(0, -c.euler + c.beta_count) for c in s.components)


def chi_s_minus(s: SurfaceComplexityData) -> Fraction:
    """Sum of max(0, -euler + suture_count/2); rational because odd suture
    counts are not forbidden by the formula."""
    total = Fraction(0)
    for c in s.components:
        total += max(Fraction(0), -c.euler + Fraction(c.suture_count, 2))
    return total


def c_S_t(t: TrivializationSummand) -> Fraction:
    """euler + index_sum - rotation_sum."""
    return t.euler + Fraction(t.index_sum) - t.rotation_sum


def index_from_suture_count(k: int) -> Fraction:
    """Boundary-component index forced by the suture count: -k/2."""
    if k < 0:
        raise DomainError("suture count must be non-negative")
    return Fraction(-k, 2)


# ---------------------------------------------------------------------------
# JSON format: {"components": [{"chi": -1, "n": 4, "beta": 0}, ...]}
# ---------------------------------------------------------------------------


def surface_data_from_json(doc: dict) -> SurfaceComplexityData:
    if not isinstance(doc, dict) or "components" not in doc:
        raise ParseError("surface data document needs a 'components' key")
    comps = []
    for item in doc["components"]:
        if not isinstance(item, dict) or "chi" not in item:
            raise ParseError(f"surface component needs a 'chi' field: {item!r}")
        try:
            comps.append(
                SurfaceComponent(
                    euler=int(item["chi"]),
                    suture_count=int(item.get("n", 0)),
                    beta_count=int(item.get("beta", 0)),
                )
            )
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad surface component {item!r}") from exc
    return SurfaceComplexityData(tuple(comps))


def surface_data_to_json(s: SurfaceComplexityData) -> dict:
    return {
        "components": [
            {"chi": c.euler, "n": c.suture_count, "beta": c.beta_count}
            for c in s.components
        ]
    }


def norm_ball_to_json(ball: NormBall) -> dict:
    from .polytope import polytope_to_json

    if ball.bounded:
        assert ball.polytope is not None
        return {"bounded": True, "polytope": polytope_to_json(ball.polytope)}
    return {
        "bounded": False,
        "halfspaces": [
            {
                "normal": [format_rational(c) for c in normal.coords],
                "bound": format_rational(rhs),
            }
            for normal, rhs in ball.halfspaces
        ],
    }
