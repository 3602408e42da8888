"""V-representation polytopes with exact hull, facets and extremal faces.

A polytope is stored canonically: extreme points only, sorted
lexicographically, so equality of polytopes is equality of vertex lists.
Points may live on either side of the duality (:class:`Covector` for the
cohomology-side polytopes, :class:`Vector` for dual-side balls); facet
normals then live on the opposite side.

Facet enumeration is brute-force hyperplane fitting over vertex subsets,
which is exact and entirely adequate at desk scale (tens of vertices,
dimension at most four or so).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Literal, Mapping, Sequence

from . import lp
from .errors import DimensionMismatch, DomainError, NotFullDimensional, ParseError
from .linalg import (
    Covector,
    Vector,
    _CoordTuple,
    dual_point_type,
    format_rational,
    kernel_basis,
    pair_any,
    primitive,
    rank_of_rows,
    rational,
)

Point = _CoordTuple
Sense = Literal["minimize", "maximize"]


@dataclass(frozen=True)
class PointSet:
    """Raw input points; duplicates allowed (removed on hull canonicalization)."""

    points: tuple[Point, ...]
    ambient_dim: int

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        if not pts:
            raise DomainError("a point set must contain at least one point")
        dim = pts[0].dim
        cls = type(pts[0])
        for p in pts:
            if type(p) is not cls:
                raise DomainError("point sets may not mix vectors and covectors")
            if p.dim != dim:
                raise DimensionMismatch("all points must share the ambient dimension")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "ambient_dim", dim)


@dataclass(frozen=True)
class Polytope:
    """Canonical vertex representation: extreme points, sorted, deduplicated."""

    vertices: tuple[Point, ...]
    ambient_dim: int
    affine_dim: int

    @property
    def point_type(self) -> type[Point]:
        return type(self.vertices[0])

    def vertex_index(self, p: Point) -> int:
        return self.vertices.index(p)

    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.ambient_dim


@dataclass(frozen=True)
class FacetDescription:
    """Supporting hyperplane of a facet, maximization convention.

    ``pair(v, outward_normal) == offset`` on incident vertices and ``< offset``
    on all others.  The normal is a primitive integer tuple on the dual side.
    """

    outward_normal: Point
    offset: Fraction
    incident_vertex_indices: frozenset[int]


@dataclass(frozen=True)
class Face:
    """A face, recorded as the set of parent-vertex indices attaining it."""

    vertex_indices: frozenset[int]
    dim: int


@dataclass(frozen=True)
class SupportRank:
    """Rank descriptor on a lattice support point."""

    rank: int
    is_exactly_z: bool


@dataclass(frozen=True)
class LabeledSupport:
    """Lattice support points with per-point rank labels.

    Zero-rank points are simply absent.  ``hypothesis_warning`` is set when
    the data contradicts the rank-one hypothesis the labels were built under.
    """

    entries: Mapping[Covector, SupportRank]
    hypothesis_warning: bool = False

    def __post_init__(self):
        for point, label in self.entries.items():
            if label.rank <= 0:
                raise DomainError(
                    f"support point {point} has non-positive rank {label.rank}"
                )

    def points(self) -> list[Covector]:
        return sorted(self.entries, key=lambda p: p.sort_key())


def _affine_dim(points: Sequence[Point]) -> int:
    base = points[0]
    return rank_of_rows([(p - base).coords for p in points[1:]])


def convex_hull(point_set: PointSet | Iterable[Point]) -> Polytope:
    """Convex hull in canonical form: exactly the extreme points, sorted.

    A point is extreme iff it is not a convex combination of the others;
    each test is one exact phase-1 LP.
    """
    ps = point_set if isinstance(point_set, PointSet) else PointSet(point_set)
    unique = sorted(set(ps.points), key=lambda p: p.sort_key())
    if len(unique) == 1:
        return Polytope(tuple(unique), ps.ambient_dim, 0)
    extremes = []
    for i, q in enumerate(unique):
        others = [p.coords for j, p in enumerate(unique) if j != i]
        if not lp.in_convex_hull(q.coords, others):
            extremes.append(q)
    return Polytope(tuple(extremes), ps.ambient_dim, _affine_dim(extremes))


def vertex_centroid(p: Polytope) -> Point:
    """Arithmetic mean of the vertex list (the centre-of-mass convention
    that reproduces the reference pyramid value (2/5, 3/5, 3/5))."""
    n = len(p.vertices)
    total = p.vertices[0]
    for v in p.vertices[1:]:
        total = total + v
    return total.scale(Fraction(1, n))


def translate(p: Polytope, w: Point) -> Polytope:
    """Shift every vertex by ``w``; canonical order is preserved by shifting."""
    if type(w) is not p.point_type:
        raise DomainError("translation must live on the polytope's side of the duality")
    if w.dim != p.ambient_dim:
        raise DimensionMismatch(f"dimension mismatch: {w.dim} vs {p.ambient_dim}")
    moved = tuple(sorted((v + w for v in p.vertices), key=lambda q: q.sort_key()))
    return Polytope(moved, p.ambient_dim, p.affine_dim)


def facets(p: Polytope) -> list[FacetDescription]:
    """All facets of a full-dimensional polytope.

    Raises :class:`NotFullDimensional` (carrying the affine dimension) for
    degenerate input; silent projection would hide modeling mistakes.
    """
    d = p.ambient_dim
    if p.affine_dim != d:
        raise NotFullDimensional(
            f"facet enumeration needs a full-dimensional polytope "
            f"(affine dimension {p.affine_dim} in ambient dimension {d})",
            affine_dim=p.affine_dim,
            ambient_dim=d,
        )
    normal_type = dual_point_type(p.point_type)
    found: dict[tuple[tuple[int, ...], Fraction], FacetDescription] = {}
    if d == 1:
        # Two facets: the endpoints.
        lo, hi = p.vertices[0], p.vertices[-1]
        for vertex, direction in ((hi, 1), (lo, -1)):
            normal = normal_type([direction])
            offset = vertex.coords[0] * direction
            incident = frozenset(
                i for i, v in enumerate(p.vertices) if v.coords[0] * direction == offset
            )
            found[((direction,), offset)] = FacetDescription(normal, offset, incident)
        return sorted(found.values(), key=lambda f: f.outward_normal.sort_key())

    values_cache: dict[tuple[int, ...], list[Fraction]] = {}
    for subset in combinations(range(len(p.vertices)), d):
        pts = [p.vertices[i] for i in subset]
        diffs = [(q - pts[0]).coords for q in pts[1:]]
        kern = kernel_basis(diffs, d)
        if len(kern) != 1:
            continue  # subset not affinely (d-1)-dimensional
        raw = primitive(normal_type(kern[0]))
        for candidate in (raw, -raw):
            key = tuple(int(c) for c in candidate.coords)
            if key in values_cache:
                values = values_cache[key]
            else:
                values = [pair_any(candidate, v) for v in p.vertices]
                values_cache[key] = values
            offset = values[subset[0]]
            if all(val <= offset for val in values):
                incident = frozenset(
                    i for i, val in enumerate(values) if val == offset
                )
                found.setdefault(
                    (key, offset), FacetDescription(candidate, offset, incident)
                )
                break
    return sorted(
        found.values(), key=lambda f: (f.outward_normal.sort_key(), f.offset)
    )


def face_in_direction(p: Polytope, direction: Point, sense: Sense = "minimize") -> Face:
    """Vertices attaining the optimum of the pairing with ``direction``.

    The zero direction returns the whole polytope as a face (documented,
    not an error).  Both senses are exposed: support functions use the
    minimum, vertex cones the maximum.
    """
    if type(direction) is p.point_type:
        raise DomainError("direction must live on the dual side of the polytope")
    if direction.dim != p.ambient_dim:
        raise DimensionMismatch(
            f"dimension mismatch: {direction.dim} vs {p.ambient_dim}"
        )
    if sense not in ("minimize", "maximize"):
        raise DomainError(f"unknown sense {sense!r}")
    values = [pair_any(direction, v) for v in p.vertices]
    best = min(values) if sense == "minimize" else max(values)
    indices = frozenset(i for i, val in enumerate(values) if val == best)
    attaining = [p.vertices[i] for i in sorted(indices)]
    return Face(indices, _affine_dim(attaining))


# ---------------------------------------------------------------------------
# JSON format:
#   {"dim": d, "points": [["p/q", ...], ...],
#    "labels": [{"point": [...], "rank": n, "is_z": bool}, ...]?}
# ---------------------------------------------------------------------------


def point_set_to_json(points: Sequence[Point], labels: LabeledSupport | None = None) -> dict:
    doc: dict = {
        "dim": points[0].dim,
        "points": [[format_rational(c) for c in p.coords] for p in points],
    }
    if labels is not None:
        doc["labels"] = [
            {
                "point": [int(c) for c in point.coords],
                "rank": labels.entries[point].rank,
                "is_z": labels.entries[point].is_exactly_z,
            }
            for point in labels.points()
        ]
    return doc


def polytope_to_json(p: Polytope, labels: LabeledSupport | None = None) -> dict:
    return point_set_to_json(p.vertices, labels)


def _parse_coord_row(row, dim: int, where: str) -> list[Fraction]:
    if not isinstance(row, (list, tuple)) or len(row) != dim:
        raise ParseError(f"{where}: expected a list of {dim} rationals, got {row!r}")
    return [rational(c) for c in row]


def point_set_from_json(doc: dict, point_type: type[Point] = Covector) -> tuple[PointSet, LabeledSupport | None]:
    if not isinstance(doc, dict) or "dim" not in doc or "points" not in doc:
        raise ParseError("polytope document needs 'dim' and 'points' keys")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"'dim' must be a positive integer, got {dim!r}")
    rows = doc["points"]
    if not isinstance(rows, list):
        raise ParseError("'points' must be a list")
    if not rows:
        raise DomainError("the point set is empty")
    points = [point_type(_parse_coord_row(row, dim, "points")) for row in rows]
    labels = None
    if doc.get("labels") is not None:
        entries = {}
        for item in doc["labels"]:
            coords = _parse_coord_row(item.get("point"), dim, "labels")
            rank_value = item.get("rank")
            if not isinstance(rank_value, int) or rank_value < 1:
                raise ParseError(f"label rank must be a positive integer, got {rank_value!r}")
            entries[point_type(coords)] = SupportRank(rank_value, bool(item.get("is_z", False)))
        labels = LabeledSupport(entries)
    return PointSet(points), labels
