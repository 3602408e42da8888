from importlib import resources

import pytest

from suturedpoly.corpus import example_names, example_to_json_text, load_example
from suturedpoly.cones import dual_cones, fan_check
from suturedpoly.errors import DomainError

PAPER_RAYS = {(0, -1, -1), (0, 1, 0), (1, 1, 1), (0, 0, 1), (-1, 0, 0)}


def test_registry():
    assert example_names() == [
        "cc-two-component-link",
        "pretzel-2-2-2",
        "pretzel-2-4-2",
    ]


def test_unknown_example_lists_registry():
    with pytest.raises(DomainError) as exc:
        load_example("unknown")
    assert exc.value.payload()["details"]["registered"] == example_names()


def test_cc_example_contents():
    example = load_example("cc-two-component-link")
    assert example.provenance == "paper"
    assert {tuple(int(c) for c in v.coords) for v in example.polytope.vertices} == {
        (0, 1, 1),
        (0, 1, 0),
        (0, 0, 1),
        (1, 0, 1),
        (1, 1, 0),
    }
    assert all(
        label.rank == 1 and label.is_exactly_z
        for label in example.labels.entries.values()
    )
    assert example.expected_cones is not None
    assert set(example.expected_cones.ray_union()) == PAPER_RAYS


def test_cc_expected_cones_match_recomputation():
    example = load_example("cc-two-component-link")
    recomputed = dual_cones(example.polytope)
    for ours, stored in zip(recomputed.cones, example.expected_cones.cones):
        assert ours.label == stored.label
        assert ours.ray_set() == stored.ray_set()


def test_cc_expected_cones_pass_fan_check():
    example = load_example("cc-two-component-link")
    report = fan_check(example.expected_cones, samples=1_000, seed=0)
    assert report.covers and report.disjoint


def test_paper_example_roundtrips_bit_exactly():
    example = load_example("cc-two-component-link")
    stored = (
        resources.files("suturedpoly") / "data" / "cc_two_component_link.json"
    ).read_text()
    assert example_to_json_text(example) == stored


@pytest.mark.parametrize("name", ["pretzel-2-2-2", "pretzel-2-4-2"])
def test_pretzel_examples_are_derived_and_consistent(name):
    example = load_example(name)
    assert example.provenance == "derived"
    assert example.expected_cones is None
    assert example.polytope.ambient_dim == 2
    assert example.polytope.is_full_dimensional()
    assert not example.labels.hypothesis_warning  # all coefficients are +-1
    report = fan_check(dual_cones(example.polytope), samples=1_000, seed=0)
    assert report.covers and report.disjoint
