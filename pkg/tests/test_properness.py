from math import gcd

import pytest

from regionum.properness import (
    TorusLinkSpec,
    is_proper,
    is_proper_closed_form,
    is_proper_diagram_oracle,
    is_proper_power_form,
)


def test_spec_basic_fields():
    s = TorusLinkSpec(4, 6)
    assert s.components == 2
    assert s.crossings == 18
    assert not s.is_knot
    assert TorusLinkSpec(3, 4).is_knot


def test_knots_are_always_proper():
    for p in range(2, 8):
        for q in range(1, 15):
            if gcd(p, q) == 1:
                assert is_proper(p, q)


@pytest.mark.parametrize(
    "p,q,expected",
    [
        (2, 2, False),  # Hopf link: lk = 1
        (2, 4, True),  # lk = 2
        (2, 6, False),
        (2, 8, True),
        (3, 3, True),  # each component links the other two evenly in total
        (4, 4, False),
        (6, 6, False),
        (4, 8, True),
        (6, 9, True),
        (6, 3, True),
        (8, 4, True),
    ],
)
def test_known_properness_values(p, q, expected):
    assert is_proper_closed_form(p, q) == expected


def test_three_predicates_agree_on_subgrid():
    for p in range(2, 9):
        for q in range(1, 17):
            closed = is_proper_closed_form(p, q)
            assert closed == is_proper_power_form(p, q), (p, q)
            assert closed == is_proper_diagram_oracle(p, q), (p, q)
