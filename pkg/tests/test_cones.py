import random
from fractions import Fraction

import pytest

from suturedpoly.errors import DimensionMismatch
from suturedpoly.linalg import Covector, Vector
from suturedpoly.polytope import (
    LabeledSupport,
    SupportRank,
    convex_hull,
    facets,
    translate,
)
from suturedpoly.cones import (
    cone_from_generators,
    cone_from_halfspaces,
    cone_system_from_json,
    cone_system_to_json,
    dual_cones,
    extremal_rays,
    extremal_vertex_for,
    fan_check,
    foliation_cones,
    membership,
)

PYRAMID_RAY_UNION = {(0, -1, -1), (0, 1, 0), (1, 1, 1), (0, 0, 1), (-1, 0, 0)}


def _apex_cone(system):
    pyramid = system.source
    apex = Covector((0, 1, 1))
    return next(c for c in system.cones if pyramid.vertices[c.label] == apex)


def test_dual_cones_pyramid_rays(pyramid):
    system = dual_cones(pyramid)
    assert len(system.cones) == 5
    assert set(system.ray_union()) == PYRAMID_RAY_UNION
    assert sorted(len(c.generators) for c in system.cones) == [3, 3, 3, 3, 4]


def test_dual_cones_single_vertex_is_whole_space():
    point = convex_hull([Covector((2, 5))])
    system = dual_cones(point)
    (cone,) = system.cones
    assert cone.is_whole_space()
    assert membership(cone, Vector((13, -4))) == "interior"


def test_apex_cone_is_the_four_sided_one(pyramid):
    cone = _apex_cone(dual_cones(pyramid))
    assert cone.ray_set() == frozenset(
        {(0, 1, 0), (0, 0, 1), (-1, 0, 0), (1, 1, 1)}
    )


def test_extremal_rays_reduce_generators():
    cone = cone_from_generators([Vector((1, 0)), Vector((0, 1)), Vector((1, 1))], 2)
    assert {tuple(map(int, r.coords)) for r in extremal_rays(cone)} == {(1, 0), (0, 1)}


def test_extremal_rays_halfplane_lineality():
    cone = cone_from_halfspaces([Covector((1, 0))], 2)
    assert {tuple(map(int, r.coords)) for r in extremal_rays(cone)} == {
        (0, 1),
        (0, -1),
        (1, 0),
    }


def test_membership_examples(pyramid):
    cone = _apex_cone(dual_cones(pyramid))
    assert membership(cone, Vector((0, 1, 1))) == "interior"
    assert membership(cone, Vector((0, 1, 0))) == "boundary"
    assert membership(cone, Vector((0, -1, -1))) == "outside"
    with pytest.raises(DimensionMismatch):
        membership(cone, Vector((1, 0)))


def test_membership_scaling_invariance(pyramid):
    system = dual_cones(pyramid)
    rng = random.Random(23)
    for _ in range(100):
        a = Vector([rng.randint(-30, 30) for _ in range(3)])
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        for cone in system.cones:
            assert membership(cone, a.scale(lam)) == membership(cone, a)


def test_extremal_vertex_for(pyramid):
    apex_index = pyramid.vertices.index(Covector((0, 1, 1)))
    assert extremal_vertex_for(pyramid, Vector((0, 1, 1))) == apex_index
    assert extremal_vertex_for(pyramid, Vector((0, 1, 0))) is None  # tie
    assert extremal_vertex_for(pyramid, Vector.zero(3)) is None


def test_membership_argmax_coherence(pyramid):
    system = dual_cones(pyramid)
    rng = random.Random(29)
    for _ in range(300):
        a = Vector([rng.randint(-50, 50) for _ in range(3)])
        winner = extremal_vertex_for(pyramid, a)
        interiors = [c.label for c in system.cones if membership(c, a) == "interior"]
        assert interiors == ([] if winner is None else [winner])


def test_normal_cone_characterization(pyramid):
    system = dual_cones(pyramid)
    facet_list = facets(pyramid)
    for cone in system.cones:
        expected = {
            tuple(int(c) for c in f.outward_normal.coords)
            for f in facet_list
            if cone.label in f.incident_vertex_indices
        }
        assert cone.ray_set() == expected


def test_dual_cones_translation_invariance(pyramid):
    base = [c.ray_set() for c in dual_cones(pyramid).cones]
    rng = random.Random(31)
    for _ in range(25):
        w = Covector([Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(3)])
        shifted = dual_cones(translate(pyramid, w))
        assert [c.ray_set() for c in shifted.cones] == base


def _all_z_labels(polytope):
    return LabeledSupport({v: SupportRank(1, True) for v in polytope.vertices})


def test_foliation_cones_all_labels(pyramid):
    result = foliation_cones(_all_z_labels(pyramid))
    assert len(result.cones) == 5
    assert not result.hypothesis_warning


def test_foliation_cones_filters_higher_rank(pyramid):
    entries = {}
    for v in pyramid.vertices:
        if v == Covector((0, 1, 1)):
            entries[v] = SupportRank(2, False)
        else:
            entries[v] = SupportRank(1, True)
    result = foliation_cones(LabeledSupport(entries))
    assert len(result.cones) == 4
    selected = {result.system.source.vertices[c.label] for c in result.cones}
    assert Covector((0, 1, 1)) not in selected


def test_foliation_cones_single_point():
    support = LabeledSupport({Covector((1, 2)): SupportRank(1, True)})
    result = foliation_cones(support)
    (cone,) = result.cones
    assert cone.is_whole_space()


def test_foliation_cones_ignore_non_vertex_labels():
    corners = [(0, 0), (2, 0), (0, 2), (2, 2)]
    entries = {Covector(c): SupportRank(1, True) for c in corners}
    entries[Covector((1, 1))] = SupportRank(1, True)  # interior: not a hull vertex
    result = foliation_cones(LabeledSupport(entries))
    assert len(result.system.cones) == 4
    assert len(result.cones) == 4


def test_fan_check_pyramid(pyramid):
    report = fan_check(dual_cones(pyramid), samples=2_000, seed=0)
    assert report.covers and report.disjoint
    assert report.witnesses == ()


def test_fan_check_segment_not_covering():
    segment = convex_hull([Covector((0, 0)), Covector((2, 1))])
    report = fan_check(dual_cones(segment), samples=500, seed=0)
    assert not report.covers
    witness = report.witnesses[0]
    # the witness pairs equally with both vertices: orthogonal to the segment
    assert 2 * witness.coords[0] + 1 * witness.coords[1] == 0


def test_fan_check_single_vertex_covers_trivially():
    point = convex_hull([Covector((1, 1, 1))])
    report = fan_check(dual_cones(point), samples=200, seed=0)
    assert report.covers and report.disjoint


def test_cone_system_json_roundtrip(pyramid):
    system = dual_cones(pyramid)
    doc = cone_system_to_json(system)
    back = cone_system_from_json(doc, pyramid)
    assert [c.ray_set() for c in back.cones] == [c.ray_set() for c in system.cones]
    assert cone_system_to_json(back) == doc
