import random

import pytest

from _oracles import naive_bracket
from regionum.braid import BraidWord, conjugate, cyclic_shift, parse_word, toric_braid
from regionum.invariants import (
    MAX_STRANDS,
    Verdict,
    certify_unlink,
    jones,
    kauffman_bracket,
    unlink_jones,
)
from regionum.laurent import LOOP, LaurentPoly
from regionum.templates import staircase_word, three_block_word


def _t(pairs):
    """Laurent polynomial from (half-exponent-of-t, coeff) pairs (t = A^-4)."""
    return LaurentPoly({-2 * k: c for k, c in pairs})


def test_unknot_jones_is_one():
    assert jones(BraidWord(1)) == LaurentPoly.one()
    assert jones(BraidWord(2, (1,))) == LaurentPoly.one()


def test_right_trefoil_jones():
    # -t^-4 + t^-3 + t^-1
    assert jones(toric_braid(2, 3)) == _t([(-8, -1), (-6, 1), (-2, 1)])


def test_hopf_link_jones():
    # -t^(-5/2) - t^(-1/2)
    assert jones(toric_braid(2, 2)) == _t([(-5, -1), (-1, -1)])


def test_figure_eight_jones_is_amphichiral():
    w = parse_word("1 -2 1 -2")
    expected = _t([(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)])
    assert jones(w) == expected
    assert jones(w.mirror()) == expected


def test_unlink_jones_values():
    assert unlink_jones(1) == LaurentPoly.one()
    assert unlink_jones(2) == LOOP
    assert jones(BraidWord(2, (1, -1))) == unlink_jones(2)
    assert jones(BraidWord(3, (1, -1))) == unlink_jones(3)
    with pytest.raises(ValueError):
        unlink_jones(0)


def test_bracket_matches_naive_state_sum():
    rng = random.Random(13)
    for _ in range(60):
        p = rng.randint(2, 5)
        c = rng.randint(0, 10)
        w = BraidWord(
            p, tuple(rng.choice([1, -1]) * rng.randint(1, p - 1) for _ in range(c))
        )
        assert kauffman_bracket(w) == naive_bracket(w), w


def test_strand_guard():
    with pytest.raises(ValueError):
        kauffman_bracket(BraidWord(MAX_STRANDS + 1, (1,)))


def test_jones_markov_invariance():
    rng = random.Random(17)
    for _ in range(40):
        p = rng.randint(2, 5)
        w = BraidWord(
            p, tuple(rng.choice([1, -1]) * rng.randint(1, p - 1) for _ in range(8))
        )
        value = jones(w)
        move = rng.choice(["shift", "conj", "stab"])
        if move == "shift":
            w2 = cyclic_shift(w, rng.randint(1, 7))
        elif move == "conj":
            w2 = conjugate(w, rng.choice([1, -1]) * rng.randint(1, p - 1))
        else:  # positive or negative stabilization
            w2 = BraidWord(p + 1, w.letters + (rng.choice([p, -p]),))
        assert jones(w2) == value, (w, move)


def test_certify_unlink_certifies_trivial_words():
    for p in (2, 3, 4, 5):
        cert = certify_unlink(staircase_word(p))
        assert cert.verdict is Verdict.CERTIFIED
        assert cert.components == p  # identity braid closes to p circles
        assert cert.jones_matches_unlink


def test_certify_unlink_refutes_trefoil():
    cert = certify_unlink(toric_braid(2, 3))
    assert cert.verdict is Verdict.REFUTED
    assert cert.jones_matches_unlink is False


def test_certify_unlink_handles_search_fallback_case():
    # dissolves only through the move search, not greedy reduction
    cert = certify_unlink(three_block_word(4))
    assert cert.verdict is Verdict.CERTIFIED


def test_certify_multi_component_unlink():
    cert = certify_unlink(BraidWord(3, (1, -1, 2, -2)))
    assert cert.verdict is Verdict.CERTIFIED
    assert cert.components == 3
    cert2 = certify_unlink(BraidWord(2, (1, -1)))
    assert cert2.verdict is Verdict.CERTIFIED
    assert cert2.components == 2
