"""Classification tests: the exclusion lists, reason tags, and the full
reconciliation of verdicts against the construction engine."""

import pytest

from dpcylinders import (
    NO_POLAR_COLLECTIONS,
    classify,
    classify_anticanonical,
    classify_polar,
    cross_check,
    enumerate_specs,
    picard_rank,
    validate_spec,
)

# degree, singularities, anticanonical cylinder, polar cylinder
FIXTURES = [
    (9, (), True, True),
    (8, ("A1",), True, True),
    (7, (), True, True),
    (6, ("A1",), True, True),
    (5, ("A4",), True, True),
    (4, ("D4",), True, True),
    (3, (), False, True),
    (3, ("A1",), True, True),
    (3, ("E6",), True, True),
    (2, (), False, True),
    (2, ("A1",), False, True),
    (2, ("A1",) * 7, False, True),
    (2, ("A2",), True, True),
    (2, ("E7",), True, True),
    (1, (), False, True),
    (1, ("A1", "A1", "A3", "A3"), False, False),
    (1, ("A2", "A2", "A2", "A2"), False, False),
    (1, ("D4", "D4"), False, False),
    (1, ("A1", "A3", "D4"), False, True),
    (1, ("A4",), True, True),
]


@pytest.mark.parametrize(
    "degree,sings,anticanonical,polar",
    FIXTURES,
    ids=[f"d{d}-{'+'.join(s) or 'smooth'}" for d, s, _, _ in FIXTURES],
)
def test_fixture_verdicts(degree, sings, anticanonical, polar):
    spec = validate_spec(degree, sings)
    verdict = classify(spec)
    assert verdict.anticanonical_cylinder is anticanonical
    assert verdict.h_polar_cylinder is polar
    assert verdict.picard_rank == picard_rank(spec)
    # the tuple-returning variants agree with the bundled verdict
    assert classify_anticanonical(spec)[0] is anticanonical
    assert classify_polar(spec)[0] is polar


def test_reason_tags():
    assert classify(validate_spec(3, ())).anticanonical_reason == "smooth-cubic"
    assert (
        classify(validate_spec(2, ("A1", "A1", "A1"))).anticanonical_reason
        == "only-A1-at-degree-2"
    )
    v = classify(validate_spec(1, ("A1", "A3", "D4")))
    assert v.anticanonical_reason == "only-small-singularities-at-degree-1"
    assert v.polar_reason == "ample-polarization-exists"
    assert v.picard_rank == 1  # rank 8 collection, yet not in the excluded list

    v = classify(validate_spec(1, ("A2", "A2", "A2", "A2")))
    assert v.polar_reason == "rank-one-excluded-collection"

    v = classify(validate_spec(5, ()))
    assert v.anticanonical_reason == "outside-excluded-list"
    assert v.polar_reason == "anticanonical-cylinder-transfers"


def test_smooth_surfaces_refuse_at_low_degree_only():
    expected = {1: False, 2: False, 3: False}
    for d in range(1, 10):
        got, _ = classify_anticanonical(validate_spec(d, ()))
        assert got is expected.get(d, True), d


def test_excluded_collections_are_rank_eight():
    assert len(NO_POLAR_COLLECTIONS) == 3
    for collection in NO_POLAR_COLLECTIONS:
        assert sum(t.rank for t in collection) == 8
        assert tuple(sorted(collection)) == collection  # canonical order


def test_sweep_finds_exactly_three_polar_refusals():
    refused = [
        spec for spec in enumerate_specs()
        if not classify(spec).h_polar_cylinder
    ]
    assert [
        (spec.degree, tuple(str(t) for t in spec.singularities))
        for spec in refused
    ] == [
        (1, ("A1", "A1", "A3", "A3")),
        (1, ("A2", "A2", "A2", "A2")),
        (1, ("D4", "D4")),
    ]
    assert all(picard_rank(spec) == 1 for spec in refused)


def test_sweep_anticanonical_refusal_count():
    refused = sum(
        1 for spec in enumerate_specs()
        if not classify(spec).anticanonical_cylinder
    )
    assert refused == 62


def test_classification_is_deterministic():
    spec = validate_spec(2, ("A3", "A1"))
    assert classify(spec) == classify(spec)


def test_cross_check_reconciles_every_spec():
    """Every verdict is backed by the engine: certified constructions for
    yes, refusals for no.  Any drift between the two layers shows up here."""
    for spec in enumerate_specs():
        assert cross_check(spec) == (), str(spec)
