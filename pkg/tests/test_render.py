import pytest

from suturedpoly.errors import DomainError
from suturedpoly.linalg import Covector
from suturedpoly.polytope import convex_hull
from suturedpoly.cones import dual_cones
from suturedpoly.render import render_cones_svg, render_polytope_svg


def test_pyramid_svg_structure(pyramid):
    svg = render_polytope_svg(pyramid)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 5  # one marker per labeled vertex
    assert svg.count("<polygon") == 5  # one outline per facet
    assert "(0, 1, 1)" in svg


def test_cone_fan_svg_structure(pyramid):
    system = dual_cones(pyramid)
    svg = render_cones_svg(system)
    assert svg.count("fill-opacity") == 5  # five shaded cones
    for label in range(5):
        assert f">Q{label}</text>" in svg


def test_render_is_deterministic(pyramid):
    assert render_polytope_svg(pyramid) == render_polytope_svg(pyramid)
    system = dual_cones(pyramid)
    assert render_cones_svg(system) == render_cones_svg(system)


def test_render_rejects_dim_four():
    p = convex_hull([Covector((0, 0, 0, 0)), Covector((1, 0, 0, 0)),
                     Covector((0, 1, 0, 0)), Covector((0, 0, 1, 0)),
                     Covector((0, 0, 0, 1))])
    with pytest.raises(DomainError):
        render_polytope_svg(p)


def test_render_projection_axes(pyramid):
    default = render_polytope_svg(pyramid, axes=(0, 1))
    other = render_polytope_svg(pyramid, axes=(1, 2))
    assert default != other
    with pytest.raises(DomainError):
        render_polytope_svg(pyramid, axes=(0, 0))


def test_render_segment_without_facets():
    segment = convex_hull([Covector((0, 0)), Covector((2, 1))])
    svg = render_polytope_svg(segment)
    assert "<polyline" in svg
