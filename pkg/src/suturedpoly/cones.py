"""Dual vertex cones of a polytope, extremal rays, and fan diagnostics.

For a polytope with vertices v_1, ..., v_n, the cone attached to v_i is

    { a : pair(v_i - v_j, a) >= 0  for all j != i },

stored closed; the open cones of the duality statements are the interiors,
which is why :func:`membership` reports a three-way classification.
Everything is translation invariant by construction, matching the fact
that the source polytope is only defined up to translation.

Primitive normalization: every ray and halfspace normal is scaled to
coprime integer entries.  Rays keep their geometric direction; lineality
basis directions (which have no preferred sign) get a first-nonzero-positive
sign and are stored as opposite pairs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import lp
from .errors import DimensionMismatch, ParseError
from .linalg import (
    Covector,
    Vector,
    _CoordTuple,
    canonical_sign,
    dual_point_type,
    kernel_basis,
    pair_any,
    primitive_coords,
    rank_of_rows,
)
from .polytope import LabeledSupport, Polytope, convex_hull, facets

Membership = str  # "interior" | "boundary" | "outside"


@dataclass(frozen=True)
class PolyhedralCone:
    """Closed polyhedral cone with both generator and halfspace descriptions.

    ``generators`` live in the cone's own space, ``halfspaces`` are primitive
    inward normals from the dual side; an empty halfspace list means the
    whole space.  Non-pointed cones carry their lineality as opposite ray
    pairs rather than being rejected.
    """

    generators: tuple[_CoordTuple, ...]
    halfspaces: tuple[_CoordTuple, ...]
    ambient_dim: int
    label: int | None = None

    def is_whole_space(self) -> bool:
        return not self.halfspaces

    def ray_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(tuple(int(c) for c in g.coords) for g in self.generators)


@dataclass(frozen=True)
class DualConeSystem:
    """One cone per source-polytope vertex, in vertex order."""

    cones: tuple[PolyhedralCone, ...]
    source: Polytope

    def ray_union(self) -> frozenset[tuple[int, ...]]:
        out: set[tuple[int, ...]] = set()
        for cone in self.cones:
            out |= cone.ray_set()
        return frozenset(out)


@dataclass(frozen=True)
class FoliationConeSet:
    """The cones whose source vertices carry an exact-Z rank-one label."""

    cones: tuple[PolyhedralCone, ...]
    system: DualConeSystem
    hypothesis_warning: bool = False


@dataclass(frozen=True)
class FanCheckReport:
    covers: bool
    disjoint: bool
    witnesses: tuple[Vector, ...]
    samples: int
    seed: int

    def to_json(self) -> dict:
        return {
            "covers": self.covers,
            "disjoint": self.disjoint,
            "witnesses": [[int(c) if c.denominator == 1 else str(c) for c in w.coords] for w in self.witnesses],
            "samples": self.samples,
            "seed": self.seed,
        }


# ---------------------------------------------------------------------------
# Representation conversion
# ---------------------------------------------------------------------------


def _rays_from_halfspaces(
    halfspace_rows: Sequence[Sequence[Fraction]], dim: int
) -> list[tuple[int, ...]]:
    """Primitive ray directions for {x : <h, x> >= 0 for all h}.

    Lineality (the common kernel of the halfspaces) is returned as opposite
    primitive pairs; the pointed remainder is enumerated by intersecting
    subsets of active constraint boundaries inside the span of the normals.
    """
    rays: set[tuple[int, ...]] = set()
    if not halfspace_rows:
        for i in range(dim):
            e = tuple(int(i == j) for j in range(dim))
            rays.add(e)
            rays.add(tuple(-x for x in e))
        return sorted(rays)

    for line in kernel_basis(halfspace_rows, dim):
        p = canonical_sign(primitive_coords(line))
        rays.add(p)
        rays.add(tuple(-x for x in p))

    # Pointed part lives in the span of the halfspace normals.
    from .linalg import _row_echelon

    rref, pivots = _row_echelon([[Fraction(x) for x in row] for row in halfspace_rows])
    basis = [rref[r] for r in range(len(pivots))]
    k = len(basis)

    def feasible(point: Sequence[Fraction]) -> bool:
        return all(
            sum((Fraction(h[i]) * point[i] for i in range(dim)), Fraction(0)) >= 0
            for h in halfspace_rows
        )

    def add_candidate(coeffs: Sequence[Fraction]) -> None:
        point = [
            sum((coeffs[j] * basis[j][i] for j in range(k)), Fraction(0))
            for i in range(dim)
        ]
        if all(x == 0 for x in point):
            return
        for direction in (point, [-x for x in point]):
            if feasible(direction):
                rays.add(primitive_coords(direction))

    if k == 1:
        add_candidate([Fraction(1)])
    else:
        # <h, sum_j c_j basis_j> >= 0 as constraints on the coefficients c.
        constraint_rows = [
            [
                sum((Fraction(h[i]) * basis[j][i] for i in range(dim)), Fraction(0))
                for j in range(k)
            ]
            for h in halfspace_rows
        ]
        for subset in combinations(range(len(constraint_rows)), k - 1):
            sub = [constraint_rows[i] for i in subset]
            kern = kernel_basis(sub, k)
            if len(kern) != 1:
                continue
            add_candidate(kern[0])
    return sorted(rays)


def _halfspaces_from_generators(
    generator_rows: Sequence[Sequence[Fraction]], dim: int
) -> list[tuple[int, ...]]:
    """Primitive inward normals describing cone(generators)."""
    halfspaces: set[tuple[int, ...]] = set()
    nonzero = [row for row in generator_rows if any(x != 0 for x in row)]
    if not nonzero:
        for i in range(dim):
            e = tuple(int(i == j) for j in range(dim))
            halfspaces.add(e)
            halfspaces.add(tuple(-x for x in e))
        return sorted(halfspaces)

    for perp in kernel_basis(nonzero, dim):
        p = canonical_sign(primitive_coords(perp))
        halfspaces.add(p)
        halfspaces.add(tuple(-x for x in p))

    from .linalg import _row_echelon

    rref, pivots = _row_echelon([[Fraction(x) for x in row] for row in nonzero])
    basis = [rref[r] for r in range(len(pivots))]
    k = len(basis)

    def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))

    def consider(candidate: Sequence[Fraction]) -> None:
        if all(x == 0 for x in candidate):
            return
        values = [dot(candidate, g) for g in nonzero]
        if all(v >= 0 for v in values):
            halfspaces.add(primitive_coords(candidate))
        elif all(v <= 0 for v in values):
            halfspaces.add(primitive_coords([-x for x in candidate]))

    if k == 1:
        consider(basis[0])
    else:
        for subset in combinations(range(len(nonzero)), k - 1):
            if rank_of_rows([nonzero[i] for i in subset]) != k - 1:
                continue
            # candidate = sum_j a_j basis_j with <candidate, g> = 0 on the subset
            rows = [[dot(nonzero[i], basis[j]) for j in range(k)] for i in subset]
            kern = kernel_basis(rows, k)
            if len(kern) != 1:
                continue
            coeffs = kern[0]
            candidate = [
                sum((coeffs[j] * basis[j][i] for j in range(k)), Fraction(0))
                for i in range(dim)
            ]
            consider(candidate)
    return sorted(halfspaces)


def cone_from_halfspaces(
    halfspaces: Iterable[_CoordTuple], ambient_dim: int, label: int | None = None
) -> PolyhedralCone:
    hs = list(halfspaces)
    normal_type = type(hs[0]) if hs else Covector
    ray_type = dual_point_type(normal_type)
    rows = [h.coords for h in hs]
    rays = _rays_from_halfspaces(rows, ambient_dim)
    return PolyhedralCone(
        generators=tuple(ray_type(r) for r in rays),
        halfspaces=tuple(hs),
        ambient_dim=ambient_dim,
        label=label,
    )


def cone_from_generators(
    generators: Iterable[_CoordTuple], ambient_dim: int, label: int | None = None
) -> PolyhedralCone:
    gens = list(generators)
    ray_type = type(gens[0]) if gens else Vector
    normal_type = dual_point_type(ray_type)
    rows = [g.coords for g in gens]
    hs = _halfspaces_from_generators(rows, ambient_dim)
    rays = _rays_from_halfspaces(hs, ambient_dim)
    return PolyhedralCone(
        generators=tuple(ray_type(r) for r in rays),
        halfspaces=tuple(normal_type(h) for h in hs),
        ambient_dim=ambient_dim,
        label=label,
    )


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def dual_cones(p: Polytope) -> DualConeSystem:
    """The closed cone of functionals maximized at each vertex.

    Halfspace normals are the vertex differences v_i - v_j, reduced to an
    irredundant set (edges of the polytope); generators are computed from
    the halfspace description.  A one-vertex polytope yields the whole
    space with an empty halfspace list.
    """
    cones = []
    for i, vi in enumerate(p.vertices):
        raw = sorted(
            {primitive_coords((vi - vj).coords) for j, vj in enumerate(p.vertices) if j != i}
        )
        irredundant = _reduce_halfspaces(raw)
        hs = tuple(p.point_type(h) for h in irredundant)
        cones.append(cone_from_halfspaces(hs, p.ambient_dim, label=i))
    return DualConeSystem(cones=tuple(cones), source=p)


def _reduce_halfspaces(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    kept = list(rows)
    changed = True
    while changed:
        changed = False
        for h in list(kept):
            others = [o for o in kept if o != h]
            if others and lp.in_cone_hull(h, others):
                kept.remove(h)
                changed = True
    return kept


def extremal_rays(cone: PolyhedralCone) -> list[_CoordTuple]:
    """Irredundant primitive generator list, recomputed from the halfspaces.

    Pointed and non-pointed cones are both handled; lineality shows up as
    opposite ray pairs.
    """
    ray_type = (
        type(cone.generators[0])
        if cone.generators
        else dual_point_type(type(cone.halfspaces[0]))
        if cone.halfspaces
        else Vector
    )
    rows = [h.coords for h in cone.halfspaces]
    return [ray_type(r) for r in _rays_from_halfspaces(rows, cone.ambient_dim)]


def membership(cone: PolyhedralCone, a: _CoordTuple) -> Membership:
    """Classify ``a`` against the closed cone by exact sign tests."""
    if a.dim != cone.ambient_dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {cone.ambient_dim}")
    saw_zero = False
    for h in cone.halfspaces:
        value = pair_any(h, a)
        if value < 0:
            return "outside"
        if value == 0:
            saw_zero = True
    return "boundary" if saw_zero else "interior"


def extremal_vertex_for(p: Polytope, a: _CoordTuple) -> int | None:
    """Index of the unique strict maximizer of the pairing, None on ties."""
    if a.dim != p.ambient_dim:
        raise DimensionMismatch(f"dimension mismatch: {a.dim} vs {p.ambient_dim}")
    values = [pair_any(a, v) for v in p.vertices]
    best = max(values)
    winners = [i for i, val in enumerate(values) if val == best]
    return winners[0] if len(winners) == 1 else None


def foliation_cones(support: LabeledSupport) -> FoliationConeSet:
    """Cones of the support hull whose vertex labels are exactly Z.

    Support points that are not hull vertices are ignored; vertices whose
    labels are missing or have rank other than one are filtered out.
    """
    points = support.points()
    hull = convex_hull(points)
    system = dual_cones(hull)
    selected = []
    for cone in system.cones:
        vertex = hull.vertices[cone.label]
        label = support.entries.get(vertex)
        if label is not None and label.rank == 1 and label.is_exactly_z:
            selected.append(cone)
    return FoliationConeSet(
        cones=tuple(selected),
        system=system,
        hypothesis_warning=support.hypothesis_warning,
    )


# ---------------------------------------------------------------------------
# Fan coverage / disjointness report
# ---------------------------------------------------------------------------


def _integer_vertex_rows(p: Polytope) -> list[tuple[int, ...]]:
    """All vertices scaled by one common positive factor to integer tuples,
    so pairwise comparisons of pairings are preserved."""
    denom = 1
    for v in p.vertices:
        for c in v.coords:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
    return [tuple(int(c * denom) for c in v.coords) for v in p.vertices]


def fan_check(
    system: DualConeSystem,
    samples: int = 10_000,
    seed: int = 0,
    bound: int = 100,
) -> FanCheckReport:
    """Sampled-plus-exact validation that the cones tile the ambient space.

    ``covers`` is the exact structural criterion (full-dimensional source,
    or a single vertex) cross-validated on seeded integer samples: every
    sample with a strict pairing argmax must lie in exactly one cone
    interior.  ``disjoint`` fails if any sample lands in two interiors.
    In dimension <= 3 an exact combinatorial check runs alongside: each
    cone's generators must be exactly the outward normals of the facets
    at its vertex.  Failures are reported with witness vectors.
    """
    p = system.source
    d = p.ambient_dim
    covers = True
    disjoint = True
    witnesses: list[Vector] = []

    single_vertex = len(p.vertices) == 1
    if not single_vertex and not p.is_full_dimensional():
        covers = False
        diffs = [(v - p.vertices[0]).coords for v in p.vertices[1:]]
        for direction in kernel_basis(diffs, d):
            witnesses.append(Vector(canonical_sign(primitive_coords(direction))))
            break

    vertex_rows = _integer_vertex_rows(p)
    cone_halfspaces = [
        [tuple(int(c) for c in h.coords) for h in cone.halfspaces] for cone in system.cones
    ]

    rng = random.Random(seed)
    for _ in range(samples):
        a = tuple(rng.randint(-bound, bound) for _ in range(d))
        dots = [sum(row[i] * a[i] for i in range(d)) for row in vertex_rows]
        best = max(dots)
        argmax = [i for i, val in enumerate(dots) if val == best]
        interior = []
        for idx, hs in enumerate(cone_halfspaces):
            if all(sum(h[i] * a[i] for i in range(d)) > 0 for h in hs):
                interior.append(idx)
        if len(interior) > 1:
            disjoint = False
            witnesses.append(Vector(a))
        elif len(argmax) == 1 and len(interior) != 1:
            covers = False
            witnesses.append(Vector(a))
        elif len(argmax) == 1 and interior and interior[0] != argmax[0]:
            covers = False
            witnesses.append(Vector(a))
        elif len(argmax) > 1 and interior:
            disjoint = False
            witnesses.append(Vector(a))

    if d <= 3 and p.is_full_dimensional():
        facet_list = facets(p)
        for cone in system.cones:
            expected = {
                tuple(int(c) for c in f.outward_normal.coords)
                for f in facet_list
                if cone.label in f.incident_vertex_indices
            }
            actual = set(cone.ray_set())
            if expected != actual:
                covers = False
                for extra in sorted(expected ^ actual):
                    witnesses.append(Vector(extra))
    return FanCheckReport(
        covers=covers,
        disjoint=disjoint,
        witnesses=tuple(witnesses[:16]),
        samples=samples,
        seed=seed,
    )


# ---------------------------------------------------------------------------
# JSON format: {"cones": [{"label": i, "rays": [[...]], "halfspaces": [[...]]}]}
# ---------------------------------------------------------------------------


def cone_system_to_json(system: DualConeSystem) -> dict:
    return {
        "cones": [
            {
                "label": cone.label,
                "rays": sorted([int(c) for c in g.coords] for g in cone.generators),
                "halfspaces": sorted(
                    [int(c) for c in h.coords] for h in cone.halfspaces
                ),
            }
            for cone in system.cones
        ]
    }


def cone_system_from_json(doc: dict, source: Polytope) -> DualConeSystem:
    if not isinstance(doc, dict) or "cones" not in doc:
        raise ParseError("cone system document needs a 'cones' key")
    cones = []
    for item in doc["cones"]:
        label = item.get("label")
        if label is None or not isinstance(label, int):
            raise ParseError("every cone needs an integer 'label'")
        rays = tuple(Vector([int(x) for x in r]) for r in item.get("rays", []))
        hs = tuple(Covector([int(x) for x in h]) for h in item.get("halfspaces", []))
        dim = source.ambient_dim
        cones.append(PolyhedralCone(rays, hs, dim, label=label))
    cones.sort(key=lambda c: c.label)
    if len(cones) != len(source.vertices):
        raise ParseError("cone count does not match source vertex count")
    return DualConeSystem(cones=tuple(cones), source=source)
