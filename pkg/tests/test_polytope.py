import random
from fractions import Fraction

import pytest

from oracles import extreme_points

from suturedpoly.errors import DimensionMismatch, DomainError, NotFullDimensional
from suturedpoly.linalg import Covector, Vector, pairing
from suturedpoly.polytope import (
    convex_hull,
    face_in_direction,
    facets,
    point_set_from_json,
    polytope_to_json,
    translate,
    vertex_centroid,
)

SQUARE = [Covector(c) for c in [(0, 0), (1, 0), (0, 1), (1, 1)]]


def test_hull_pyramid_keeps_all_five(pyramid):
    assert len(pyramid.vertices) == 5
    assert pyramid.affine_dim == 3
    assert [tuple(v.coords) for v in pyramid.vertices] == [
        (0, 0, 1),
        (0, 1, 0),
        (0, 1, 1),
        (1, 0, 1),
        (1, 1, 0),
    ]


def test_hull_drops_interior_point():
    pts = SQUARE + [Covector((Fraction(1, 2), Fraction(1, 2)))]
    hull = convex_hull(pts)
    assert len(hull.vertices) == 4
    assert Covector((Fraction(1, 2), Fraction(1, 2))) not in hull.vertices


def test_hull_single_repeated_point():
    hull = convex_hull([Covector((2, 3)), Covector((2, 3)), Covector((2, 3))])
    assert len(hull.vertices) == 1
    assert hull.affine_dim == 0


def test_hull_empty_input_is_error():
    with pytest.raises(DomainError):
        convex_hull([])


def test_hull_idempotent():
    rng = random.Random(3)
    for _ in range(30):
        pts = [
            Covector([rng.randint(-4, 4) for _ in range(2)])
            for _ in range(rng.randint(1, 9))
        ]
        hull = convex_hull(pts)
        assert convex_hull(hull.vertices) == hull


def test_hull_matches_bruteforce_oracle():
    rng = random.Random(5)
    for _ in range(60):
        dim = rng.randint(1, 3)
        pts = [
            tuple(rng.randint(-5, 5) for _ in range(dim))
            for _ in range(rng.randint(1, 12))
        ]
        hull = convex_hull([Covector(p) for p in pts])
        got = {tuple(int(c) for c in v.coords) for v in hull.vertices}
        assert got == extreme_points(pts)


def test_facets_pyramid(pyramid):
    fs = facets(pyramid)
    assert len(fs) == 5
    normals = {tuple(int(c) for c in f.outward_normal.coords) for f in fs}
    assert normals == {(0, 1, 0), (0, 0, 1), (-1, 0, 0), (1, 1, 1), (0, -1, -1)}
    # soundness: equality on incident vertices, strict inequality otherwise
    for f in fs:
        for i, v in enumerate(pyramid.vertices):
            value = pairing(v, f.outward_normal)
            if i in f.incident_vertex_indices:
                assert value == f.offset
            else:
                assert value < f.offset
    # every vertex lies on at least affine_dim facets
    for i in range(5):
        assert sum(i in f.incident_vertex_indices for f in fs) >= 3


def test_facets_unit_square():
    fs = facets(convex_hull(SQUARE))
    normals = {tuple(int(c) for c in f.outward_normal.coords) for f in fs}
    assert normals == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_facets_segment_in_3d_structured_error():
    segment = convex_hull([Covector((0, 0, 0)), Covector((1, 1, 1))])
    with pytest.raises(NotFullDimensional) as exc:
        facets(segment)
    assert exc.value.affine_dim == 1
    assert exc.value.ambient_dim == 3


def test_vertex_centroid_pyramid(pyramid):
    assert vertex_centroid(pyramid).coords == (
        Fraction(2, 5),
        Fraction(3, 5),
        Fraction(3, 5),
    )


def test_vertex_centroid_square_and_point():
    assert vertex_centroid(convex_hull(SQUARE)).coords == (
        Fraction(1, 2),
        Fraction(1, 2),
    )
    point = convex_hull([Covector((4, 5))])
    assert vertex_centroid(point) == Covector((4, 5))


def test_translate_centers_pyramid(pyramid, centered_pyramid):
    assert vertex_centroid(centered_pyramid).is_zero()
    assert translate(pyramid, Covector.zero(3)) == pyramid
    shift = Covector((3, -2, 7))
    assert translate(translate(pyramid, shift), -shift) == pyramid


def test_translate_dimension_mismatch(pyramid):
    with pytest.raises(DimensionMismatch):
        translate(pyramid, Covector((1, 2)))


def test_translation_equivariance_of_facets(pyramid):
    rng = random.Random(9)
    base = facets(pyramid)
    for _ in range(20):
        w = Covector([rng.randint(-9, 9) for _ in range(3)])
        moved = facets(translate(pyramid, w))
        assert len(moved) == len(base)
        by_normal = {f.outward_normal: f for f in moved}
        for f in base:
            g = by_normal[f.outward_normal]
            assert g.incident_vertex_indices == f.incident_vertex_indices
            assert g.offset == f.offset + pairing(w, f.outward_normal)


def test_face_in_direction_pyramid(pyramid):
    face = face_in_direction(pyramid, Vector((1, 0, 0)), "minimize")
    attained = {tuple(pyramid.vertices[i].coords) for i in face.vertex_indices}
    assert attained == {(0, 1, 1), (0, 1, 0), (0, 0, 1)}
    assert face.dim == 2

    apex_face = face_in_direction(pyramid, Vector((0, -1, -1)), "minimize")
    assert {tuple(pyramid.vertices[i].coords) for i in apex_face.vertex_indices} == {
        (0, 1, 1)
    }
    assert apex_face.dim == 0


def test_face_in_direction_zero_is_whole_polytope(pyramid):
    face = face_in_direction(pyramid, Vector.zero(3), "minimize")
    assert face.vertex_indices == frozenset(range(5))
    assert face.dim == pyramid.affine_dim


def test_face_min_max_duality(pyramid):
    rng = random.Random(17)
    for _ in range(100):
        a = Vector([rng.randint(-8, 8) for _ in range(3)])
        lo = face_in_direction(pyramid, a, "minimize")
        hi = face_in_direction(pyramid, -a, "maximize")
        assert lo.vertex_indices == hi.vertex_indices


def test_polytope_json_roundtrip(pyramid):
    doc = polytope_to_json(pyramid)
    ps, labels = point_set_from_json(doc)
    assert labels is None
    assert convex_hull(ps) == pyramid
