"""Built-in example registry.

``cc-two-component-link`` is the worked pyramid example and ships as
explicit data (provenance "paper"): the five vertices, all labeled with
rank one exactly-Z, plus the expected five-cone dual system.

The two pretzel-surface examples ship only as their generating free-group
map files; their polytopes are produced by the Fox pipeline at load time
(provenance "derived") and are never stored as literal coordinates, so
the pipeline itself is the single source of truth for them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .cones import DualConeSystem, cone_system_from_json, cone_system_to_json
from .errors import DomainError, ParseError
from .foxcalc import jacobian_determinant, labeled_support, parse_presentation_text
from .polytope import (
    LabeledSupport,
    Polytope,
    convex_hull,
    point_set_from_json,
    polytope_to_json,
)


@dataclass(frozen=True)
class NamedExample:
    name: str
    polytope: Polytope
    labels: LabeledSupport
    expected_cones: DualConeSystem | None
    provenance: str  # "paper" | "derived"


_REGISTRY: dict[str, str] = {
    "cc-two-component-link": "cc_two_component_link.json",
    "pretzel-2-2-2": "pretzel_2_2_2.txt",
    "pretzel-2-4-2": "pretzel_2_4_2.txt",
}


def example_names() -> list[str]:
    return sorted(_REGISTRY)


def _read_data(filename: str) -> str:
    return (resources.files("suturedpoly") / "data" / filename).read_text()


def _load_paper_example(name: str, text: str) -> NamedExample:
    doc = json.loads(text)
    point_set, labels = point_set_from_json(doc["polytope"])
    polytope = convex_hull(point_set)
    if list(polytope.vertices) != list(point_set.points):
        raise ParseError(f"example {name}: stored points are not in canonical vertex form")
    if labels is None:
        raise ParseError(f"example {name}: labels are required")
    expected = None
    if doc.get("expected_cones") is not None:
        expected = cone_system_from_json(doc["expected_cones"], polytope)
    return NamedExample(
        name=name,
        polytope=polytope,
        labels=labels,
        expected_cones=expected,
        provenance=doc.get("provenance", "paper"),
    )


def _load_derived_example(name: str, text: str) -> NamedExample:
    count, ab, words = parse_presentation_text(text)
    if len(words) != count:
        raise ParseError(
            f"example {name}: expected {count} image words for the square Jacobian"
        )
    det = jacobian_determinant(words, ab)
    labels = labeled_support(det, lspace=True)
    polytope = convex_hull(labels.points())
    return NamedExample(
        name=name,
        polytope=polytope,
        labels=labels,
        expected_cones=None,
        provenance="derived",
    )


def load_example(name: str) -> NamedExample:
    """Load a registered example; unknown names list the registry."""
    if name not in _REGISTRY:
        raise DomainError(
            f"unknown example {name!r}", registered=example_names()
        )
    filename = _REGISTRY[name]
    text = _read_data(filename)
    if filename.endswith(".json"):
        return _load_paper_example(name, text)
    return _load_derived_example(name, text)


def example_to_json_text(example: NamedExample) -> str:
    """Canonical serialization used both for storage and round-trip checks."""
    doc: dict = {
        "name": example.name,
        "provenance": example.provenance,
        "polytope": polytope_to_json(example.polytope, example.labels),
    }
    if example.expected_cones is not None:
        doc["expected_cones"] = cone_system_to_json(example.expected_cones)
    return json.dumps(doc, indent=2) + "\n"
