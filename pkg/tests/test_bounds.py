import json
from math import gcd

import pytest

from regionum.bounds import (
    UNREALIZABLE,
    NotProperError,
    bound,
    explicit_schedule,
    flip_vector_for,
    incidence_rank_data,
    realize_regions,
    target_word,
    verify_bound,
)
from regionum.diagram import toric_diagram
from regionum.invariants import Verdict, certify_unlink
from regionum.properness import TorusLinkSpec, is_proper


def test_not_proper_raises():
    with pytest.raises(NotProperError):
        bound(TorusLinkSpec(2, 2))
    with pytest.raises(NotProperError):
        bound(TorusLinkSpec(4, 4))


def test_results_sorted_and_below_trivial_bound():
    for p in range(2, 7):
        for q in range(p + 1, 4 * p):
            if not is_proper(p, q):
                continue
            results = bound(TorusLinkSpec(p, q))
            values = [r.bound for r in results]
            assert values == sorted(values)
            assert values[0] <= ((p - 1) * q + 2) // 2


@pytest.mark.parametrize(
    "p,q,expected",
    [
        # 2-braids: exact value floor((q+2)/4), confirmed by brute search
        (2, 3, 1),
        (2, 7, 2),
        (2, 13, 3),
        # small knots/links whose minimum was matched by exhaustive search
        (3, 3, 1),
        (3, 4, 1),
        (4, 5, 3),
    ],
)
def test_minimum_bound_frozen_values(p, q, expected):
    assert bound(TorusLinkSpec(p, q))[0].bound == expected


def test_schedule_ids_distinct_and_in_range():
    for p, q in [(3, 4), (4, 5), (5, 7), (6, 8), (2, 9)]:
        spec = TorusLinkSpec(p, q)
        best = next(r for r in bound(spec) if r.constructible)
        schedule = explicit_schedule(spec, best.case)
        diagram = toric_diagram(p, q)
        assert len(schedule) == best.bound
        assert len(set(schedule.region_ids)) == len(schedule)
        assert all(1 <= r <= len(diagram.regions) for r in schedule.region_ids)


def test_schedule_application_yields_target_word():
    for p, q in [(3, 4), (3, 5), (4, 5), (5, 6), (6, 7)]:
        spec = TorusLinkSpec(p, q)
        best = next(r for r in bound(spec) if r.constructible)
        schedule = explicit_schedule(spec, best.case)
        diagram = toric_diagram(p, q)
        changed = diagram.region_crossing_changes(schedule.region_ids)
        assert changed.word() == target_word(spec, best.case)


def test_target_word_closure_is_trivial_for_knots():
    # triviality is a closure property: it needs Markov moves, not just
    # the braid word problem
    for p, q in [(3, 4), (3, 5), (4, 5), (5, 6)]:
        spec = TorusLinkSpec(p, q)
        best = next(r for r in bound(spec) if r.constructible)
        cert = certify_unlink(target_word(spec, best.case))
        assert cert.verdict is Verdict.CERTIFIED


def test_flip_vector_realizable_at_bound_weight():
    for p, q in [(3, 4), (4, 5), (5, 6), (4, 10)]:
        spec = TorusLinkSpec(p, q)
        best = next(r for r in bound(spec) if r.constructible)
        v = flip_vector_for(spec, best.case)
        diagram = toric_diagram(p, q)
        realized = realize_regions(diagram, v)
        assert realized is not UNREALIZABLE
        assert len(realized) <= best.bound
        assert diagram.region_crossing_changes(realized.region_ids).word() == (
            target_word(spec, best.case)
        )


def test_verify_bound_produces_certificate():
    for p, q in [(2, 5), (3, 4), (4, 5), (5, 6), (6, 7), (3, 9)]:
        spec = TorusLinkSpec(p, q)
        result = verify_bound(spec)
        cert = result.certificate
        assert cert is not None
        assert len(cert.schedule) == result.bound
        assert cert.unlink.verdict is not Verdict.REFUTED
        if spec.is_knot:
            assert cert.unlink.verdict is Verdict.CERTIFIED
        payload = json.loads(cert.to_json(spec, result.case, result.bound))
        assert payload["p"] == p and payload["q"] == q
        assert payload["bound"] == result.bound
        assert payload["regions"] == list(cert.schedule.region_ids)
        assert payload["verdict"] in ("certified", "inconclusive")


def test_incidence_rank_law():
    # region space rank c - d + 1, nullity d + 1, on the standard diagrams
    for p, q in [(2, 3), (3, 4), (2, 4), (3, 3), (4, 6), (4, 4)]:
        diagram = toric_diagram(p, q)
        d = gcd(p, q)
        rank, nullity = incidence_rank_data(diagram)
        assert rank == diagram.crossings - d + 1
        assert nullity == d + 1
