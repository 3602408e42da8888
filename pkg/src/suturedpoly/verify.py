"""Self-contained reproduction and consistency battery.

This is what ``suturedpoly verify`` (and the ``/verify`` endpoint) runs:
the worked pyramid example reproduced exactly, the face/cone duality
bridge, fan axioms, translation invariance, seminorm axioms, hull and
Fox-derivative cross-checks against brute-force oracles embedded here,
and the derived pretzel examples' internal consistency.

All randomness is seeded and all arithmetic exact, so the report is a
pure function of its inputs: two runs produce identical bytes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations
from typing import Any, Callable

from .cones import dual_cones, extremal_vertex_for, fan_check, membership
from .corpus import example_to_json_text, load_example
from .errors import SuturedPolyError
from .foxcalc import (
    FreeWord,
    LaurentPolynomial,
    alexander_polynomial,
    fox_derivative,
    parse_presentation_file,
)
from .linalg import Covector, Vector, primitive
from .norms import unit_ball, y_seminorm, y_t
from .polytope import (
    Polytope,
    convex_hull,
    facets,
    translate,
    vertex_centroid,
)

PYRAMID_POINTS = ((0, 1, 1), (0, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 0))
PYRAMID_RAYS = frozenset(
    {(0, -1, -1), (0, 1, 0), (1, 1, 1), (0, 0, 1), (-1, 0, 0)}
)
PYRAMID_CENTROID = (Fraction(2, 5), Fraction(3, 5), Fraction(3, 5))

KNOT_PRESENTATIONS = ("unknot.txt", "trefoil.txt", "figure_eight.txt")
EXPECTED_KNOT_POLYNOMIALS = {
    "unknot.txt": {(0,): 1},
    "trefoil.txt": {(0,): 1, (1,): -1, (2,): 1},
    "figure_eight.txt": {(0,): 1, (1,): -3, (2,): 1},
}


@dataclass
class Check:
    name: str
    ok: bool
    details: dict[str, Any] = field(default_factory=dict)


@dataclass
class VerifyReport:
    checks: list[Check]
    seed: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "seed": self.seed,
            "checks": [
                {"name": c.name, "ok": c.ok, "details": c.details} for c in self.checks
            ],
        }

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            detail = json.dumps(c.details, sort_keys=True, default=str)
            lines.append(f"{status}  {c.name}  {detail}")
        lines.append(("OK" if self.ok else "MISMATCH") + f"  seed={self.seed}")
        return "\n".join(lines) + "\n"


def _pyramid() -> Polytope:
    return convex_hull([Covector(c) for c in PYRAMID_POINTS])


def _centered_pyramid() -> Polytope:
    p = _pyramid()
    return translate(p, -vertex_centroid(p))


# ---------------------------------------------------------------------------
# Embedded oracles (kept independent of the library's algorithms)
# ---------------------------------------------------------------------------


def _det_int(m: list[list[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            term = m[0][j] * _det_int(minor)
            total += term if j % 2 == 0 else -term
    return total


def _oracle_in_hull(q: tuple[int, ...], pts: list[tuple[int, ...]]) -> bool:
    """Caratheodory basis enumeration with integer Cramer solves."""
    if not pts:
        return False
    d = len(q)
    cols = [p + (1,) for p in pts]
    b = q + (1,)
    size = d + 1
    full_rank_found = False
    for subset in combinations(range(len(cols)), min(size, len(cols))):
        mat = [[cols[j][i] for j in subset] for i in range(size)]
        if len(subset) < size:
            lam = _solve_fractions(mat, list(b))
            if lam is not None and all(x >= 0 for x in lam):
                return True
            continue
        det = _det_int(mat)
        if det == 0:
            continue
        full_rank_found = True
        ok = True
        for pos in range(size):
            num = _det_int(
                [[b[i] if jj == pos else mat[i][jj] for jj in range(size)] for i in range(size)]
            )
            if num * det < 0:
                ok = False
                break
        if ok:
            return True
    if not full_rank_found and len(cols) >= size:
        # degenerate configuration: fall back to smaller bases
        for r in range(min(size, len(cols)) - 1, 0, -1):
            for subset in combinations(range(len(cols)), r):
                mat = [[cols[j][i] for j in subset] for i in range(size)]
                lam = _solve_fractions(mat, list(b))
                if lam is not None and all(x >= 0 for x in lam):
                    return True
    return False


def _solve_fractions(mat: list[list[int]], rhs: list[int]) -> list[Fraction] | None:
    rows = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(mat)]
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    for row in rows[r:]:
        if row[ncols] != 0:
            return None
    if len(pivots) != ncols:
        return None
    sol = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        sol[col] = rows[i][ncols]
    return sol


def _oracle_extreme_points(points: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    dedup = sorted(set(points))
    return {
        q
        for i, q in enumerate(dedup)
        if not _oracle_in_hull(q, dedup[:i] + dedup[i + 1 :])
    }


def _oracle_fox(word: FreeWord, gen: int, images: tuple[tuple[int, ...], ...]) -> dict:
    """Closed prefix-sum formula for the abelianized Fox derivative."""
    b = len(images[0])
    out: dict[tuple[int, ...], int] = {}
    letters = word.letters
    for k, (g, s) in enumerate(letters):
        if g != gen:
            continue
        upto = k if s > 0 else k + 1
        prefix = [0] * b
        for gg, ss in letters[:upto]:
            for i in range(b):
                prefix[i] += ss * images[gg][i]
        key = tuple(prefix)
        val = out.get(key, 0) + s
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------


def check_pyramid_reproduction() -> Check:
    p = _pyramid()
    system = dual_cones(p)
    facet_count = len(facets(p))
    counts = sorted(len(c.generators) for c in system.cones)
    centroid = vertex_centroid(p)
    ok = (
        len(p.vertices) == 5
        and facet_count == 5
        and centroid.coords == PYRAMID_CENTROID
        and system.ray_union() == PYRAMID_RAYS
        and counts == [3, 3, 3, 3, 4]
    )
    return Check(
        "pyramid reproduction",
        ok,
        {
            "vertices": len(p.vertices),
            "facets": facet_count,
            "centroid": str(centroid),
            "rays": sorted(system.ray_union()),
            "cone_generator_counts": counts,
        },
    )


def _bridge_holds(p_centered: Polytope) -> tuple[bool, dict]:
    system = dual_cones(p_centered)
    ball = unit_ball(p_centered)
    if not ball.bounded or ball.polytope is None:
        return False, {"reason": "ball unbounded"}
    matched = 0
    for f in facets(ball.polytope):
        source_vertex = f.outward_normal.scale(1 / f.offset)
        if source_vertex not in p_centered.vertices:
            return False, {"unmatched_facet_normal": str(f.outward_normal)}
        i = p_centered.vertices.index(source_vertex)
        face_rays = frozenset(
            tuple(int(x) for x in primitive(ball.polytope.vertices[j]).coords)
            for j in f.incident_vertex_indices
        )
        if face_rays != system.cones[i].ray_set():
            return False, {
                "vertex": str(p_centered.vertices[i]),
                "facet_cone": sorted(face_rays),
                "dual_cone": sorted(system.cones[i].ray_set()),
            }
        matched += 1
    return matched == len(p_centered.vertices), {"matched_facets": matched}


def check_duality_bridge() -> Check:
    ok, details = _bridge_holds(_centered_pyramid())
    return Check("duality bridge (ball facets vs dual cones)", ok, details)


def check_fan_axioms(seed: int, samples: int = 10_000) -> Check:
    report = fan_check(dual_cones(_pyramid()), samples=samples, seed=seed, bound=100)
    return Check(
        "fan axioms (covers, disjoint)",
        report.covers and report.disjoint,
        {"covers": report.covers, "disjoint": report.disjoint, "samples": samples},
    )


def check_translation_invariance(seed: int, count: int = 100) -> Check:
    p = _pyramid()
    base = [c.ray_set() for c in dual_cones(p).cones]
    rng = random.Random(seed + 1)
    failures = 0
    for _ in range(count):
        w = Covector([rng.randint(-50, 50) for _ in range(3)])
        shifted = dual_cones(translate(p, w))
        if [c.ray_set() for c in shifted.cones] != base:
            failures += 1
    return Check(
        "translation invariance of dual cones",
        failures == 0,
        {"translates": count, "failures": failures},
    )


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-12, 12), rng.randint(1, 7))


def check_seminorm_axioms(seed: int, pairs: int = 1_000) -> Check:
    p = _pyramid()
    pc = _centered_pyramid()
    rng = random.Random(seed + 2)
    failures = 0
    for _ in range(pairs):
        a = Vector([_random_fraction(rng) for _ in range(3)])
        b = Vector([_random_fraction(rng) for _ in range(3)])
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        if y_t(p, a.scale(lam)) != lam * y_t(p, a):
            failures += 1
        if y_t(p, a + b) > y_t(p, a) + y_t(p, b):
            failures += 1
        if y_seminorm(pc, a.scale(lam)) != lam * y_seminorm(pc, a):
            failures += 1
        if y_seminorm(pc, a + b) > y_seminorm(pc, a) + y_seminorm(pc, b):
            failures += 1
    return Check(
        "seminorm axioms (homogeneity, triangle)",
        failures == 0,
        {"pairs": pairs, "failures": failures},
    )


def check_hull_oracle(seed: int, sets: int = 200) -> Check:
    rng = random.Random(seed + 3)
    failures = 0
    for _ in range(sets):
        dim = rng.randint(1, 3)
        count = rng.randint(1, 12)
        pts = [tuple(rng.randint(-6, 6) for _ in range(dim)) for _ in range(count)]
        hull = convex_hull([Covector(p) for p in pts])
        got = {tuple(int(c) for c in v.coords) for v in hull.vertices}
        expected = _oracle_extreme_points(pts)
        if got != expected:
            failures += 1
    return Check(
        "hull vs brute-force extreme points",
        failures == 0,
        {"sets": sets, "failures": failures},
    )


def check_membership_coherence(seed: int, samples: int = 1_000) -> Check:
    p = _pyramid()
    system = dual_cones(p)
    rng = random.Random(seed + 4)
    failures = 0
    for _ in range(samples):
        a = Vector([rng.randint(-100, 100) for _ in range(3)])
        winner = extremal_vertex_for(p, a)
        interior = [
            c.label for c in system.cones if membership(c, a) == "interior"
        ]
        expected = [] if winner is None else [winner]
        if interior != expected:
            failures += 1
    return Check(
        "membership/argmax coherence",
        failures == 0,
        {"samples": samples, "failures": failures},
    )


def _read_presentation(filename: str) -> str:
    return (resources.files("suturedpoly") / "data" / filename).read_text()


def check_fox_calculus() -> Check:
    details: dict[str, Any] = {}
    ok = True
    for filename in KNOT_PRESENTATIONS:
        presentation, ab = parse_presentation_file(_read_presentation(filename))
        poly = alexander_polynomial(presentation, ab)
        expected = EXPECTED_KNOT_POLYNOMIALS[filename]
        details[filename] = str(poly)
        if dict(poly.terms) != expected:
            ok = False
            details[filename + ":expected"] = str(expected)
        # derivatives against the closed-formula oracle
        for relator in presentation.relators:
            for g in range(presentation.generator_count):
                mine = fox_derivative(relator, g, ab)
                oracle = _oracle_fox(relator, g, ab.images)
                if dict(mine.terms) != oracle:
                    ok = False
                    details["derivative_mismatch"] = f"{filename}:{g}"
            # fundamental identity: sum_g d(r)/d(g) * (t^ab(g) - 1) = 0
            total = LaurentPolynomial.zero(ab.lattice_rank)
            for g in range(presentation.generator_count):
                factor = LaurentPolynomial(
                    {ab.images[g]: 1, (0,) * ab.lattice_rank: -1}, ab.lattice_rank
                )
                total = total + fox_derivative(relator, g, ab) * factor
            if not total.is_zero():
                ok = False
                details["fundamental_identity"] = f"{filename}: {total}"
        # Alexander symmetry for the knot-group (rank-one) cases
        symmetric = poly.substitute_inverse().normalized()
        if symmetric != poly.normalized():
            ok = False
            details["symmetry"] = filename
    return Check("fox calculus (oracle, identity, symmetry)", ok, details)


def check_pretzel_consistency(seed: int) -> Check:
    details: dict[str, Any] = {}
    ok = True
    for name in ("pretzel-2-2-2", "pretzel-2-4-2"):
        example = load_example(name)
        system = dual_cones(example.polytope)
        report = fan_check(system, samples=2_000, seed=seed, bound=100)
        centered = translate(example.polytope, -vertex_centroid(example.polytope))
        bridge_ok, bridge_details = _bridge_holds(centered)
        warn = example.labels.hypothesis_warning
        details[name] = {
            "covers": report.covers,
            "disjoint": report.disjoint,
            "bridge": bridge_ok,
            "rank_warning": warn,
            "vertices": len(example.polytope.vertices),
        }
        if not (report.covers and report.disjoint and bridge_ok and not warn):
            ok = False
            details[name + ":bridge"] = bridge_details
    return Check("pretzel pipeline self-consistency", ok, details)


def check_corpus_roundtrip() -> Check:
    example = load_example("cc-two-component-link")
    stored = (resources.files("suturedpoly") / "data" / "cc_two_component_link.json").read_text()
    round_trip = example_to_json_text(example) == stored
    cones_match = example.expected_cones is not None and all(
        a.ray_set() == b.ray_set()
        for a, b in zip(dual_cones(example.polytope).cones, example.expected_cones.cones)
    )
    return Check(
        "corpus integrity (round-trip, expected cones)",
        round_trip and cones_match,
        {"round_trip": round_trip, "expected_cones_match": cones_match},
    )


def run_verification(seed: int = 0, example: str | None = None) -> VerifyReport:
    """Run the reproduction battery; ``example`` narrows the scope.

    With no example (or the pyramid example) the full battery runs; a
    pretzel name runs the shared checks plus that example's consistency.
    """
    checks: list[Check] = []

    def run(fn: Callable[[], Check]) -> None:
        try:
            checks.append(fn())
        except SuturedPolyError as exc:
            checks.append(Check(fn.__name__, False, {"error": exc.payload()}))

    full = example is None or example == "cc-two-component-link"
    if full:
        run(check_pyramid_reproduction)
        run(check_duality_bridge)
        run(lambda: check_fan_axioms(seed))
        run(lambda: check_translation_invariance(seed))
        run(lambda: check_seminorm_axioms(seed))
        run(lambda: check_hull_oracle(seed))
        run(lambda: check_membership_coherence(seed))
        run(check_fox_calculus)
        run(lambda: check_pretzel_consistency(seed))
        run(check_corpus_roundtrip)
    else:
        load_example(example)  # raises with the registry on unknown names
        run(lambda: check_pretzel_consistency(seed))
    return VerifyReport(checks=checks, seed=seed)
