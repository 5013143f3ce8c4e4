import random

import pytest

from semitrio import corpus as C
from semitrio.counter import lem0_encode, simulate
from semitrio.cstack import divisibility_witness
from semitrio.oracle import (Report, cross_check, decoded_language, enumerate_words, language, length_lex,
                             membership, oracle_parikh, parikh_mismatches, random_cfg, random_linear_set,
                             random_ncm, random_nfa, random_npcm)
from semitrio.regular import Nfa, parikh_nfa
from semitrio.semilinear import LinearSet, SemilinearSet, _rank

A_STAR = Nfa(frozenset({0}), ("a", "b"), frozenset({(0, "a", 0)}), 0, frozenset({0}))
A_STAR_B = Nfa(frozenset({0, 1}), ("a", "b"), frozenset({(0, "a", 0), (0, "b", 1)}), 0, frozenset({1}))


def test_enumerate_words():
    words = enumerate_words("abc", 4)
    assert len(words) == 1 + 3 + 9 + 27 + 81
    assert words[:5] == [(), ("a",), ("b",), ("c",), ("a", "a")]
    assert enumerate_words("ab", 0) == [()]
    with pytest.raises(ValueError):
        enumerate_words("ab", -1)


def test_length_lex():
    assert length_lex([("b",), ("a", "a"), ("a",)]) == [("a",), ("b",), ("a", "a")]


def test_membership_dispatch():
    assert membership(C.anbn_npda(), "aabb")
    assert membership(C.anbn_ncm(), "ab") and not membership(C.anbn_ncm(), "ba")
    assert membership(C.equal_ab_grammar(), "abba")
    assert membership(divisibility_witness(), "aabbbb")
    with pytest.raises(TypeError):
        membership(object(), "a")


def test_oracle_parikh():
    assert oracle_parikh(C.anbn_ncm(), 4) == {(0, 0), (1, 1), (2, 2)}
    assert oracle_parikh(A_STAR_B, 3, letters=("b", "a")) == {(1, 0), (1, 1), (1, 2)}


def test_cross_check_reports_both_sides():
    r = cross_check(A_STAR, A_STAR_B, 2)
    assert r.only_first == [(), ("a",), ("a", "a")]
    assert r.only_second == [("b",), ("a", "b")]
    assert not r.agree and str(r).startswith("5 disagreement(s)")
    assert "λ" in str(r)
    assert str(cross_check(A_STAR, A_STAR, 5)) == "agree on all words up to length 5"
    with pytest.raises(ValueError):
        cross_check(A_STAR, C.anbncn_ncm(), 2)


def test_report_ordering():
    assert Report(3, [("a", "a")], [("b",)]).disagreements == [("b",), ("a", "a")]


def test_parikh_mismatches_finds_wrong_images():
    right = parikh_nfa(A_STAR_B)
    assert parikh_mismatches(right, A_STAR_B, 6) == []
    wrong = SemilinearSet(2, (LinearSet((0, 1), ((1, 0), (0, 1))),))
    problems = parikh_mismatches(wrong, A_STAR_B, 3)
    assert problems and all(p.startswith("extracted but not enumerated") for p in problems)


def test_decoded_language_reproduces_anbn():
    assert decoded_language(lem0_encode(C.anbn_ncm()), 6, 8) == language(C.anbn_ncm(), 6)


def test_random_models_are_seeded():
    for make in (random_nfa, random_cfg, random_ncm, random_npcm):
        assert make(random.Random(5)) == make(random.Random(5))


def test_random_ncm_language_matches_simulation():
    rng = random.Random(1)
    for _ in range(5):
        M = random_ncm(rng)
        assert language(M, 5) == {w for w in enumerate_words(M.alphabet, 5) if simulate(M, w)}


def test_random_simple_sets_have_independent_periods():
    rng = random.Random(2)
    for _ in range(30):
        L = random_linear_set(rng, 3, max_periods=3, simple=True)
        assert _rank(list(L.periods)) == len(L.periods)
