import random

import pytest
from hypothesis import given, strategies as st

from semitrio import semilinear as sl
from semitrio.errors import AlphabetError, SemitrioError
from semitrio.oracle import enumerate_words, parikh_mismatches, random_nfa
from semitrio.regular import (Homomorphism, Nfa, apply_hom, inverse_hom, nfa_combine, nfa_is_empty,
                              nfa_membership, parikh_nfa, shuffle_delta)


def nfa(transitions, finals, alphabet="ab", initial=0):
    states = {initial} | set(finals) | {p for p, _, _ in transitions} | {q for _, _, q in transitions}
    return Nfa(frozenset(states), tuple(alphabet), frozenset(transitions), initial, frozenset(finals))


AB_STAR = nfa({(0, "a", 1), (1, "b", 0)}, {0})
A_STAR_B_STAR = nfa({(0, "a", 0), (0, "", 1), (1, "b", 1)}, {1})
A_STAR = nfa({(0, "a", 0)}, {0})
B_STAR = nfa({(0, "b", 0)}, {0})


def lang(A, n, alphabet=None):
    return {"".join(w) for w in enumerate_words(alphabet or A.alphabet, n) if A.accepts(w)}


def test_membership():
    assert nfa_membership(AB_STAR, "abab")
    assert not nfa_membership(AB_STAR, "aba")


def test_membership_rejects_foreign_letters():
    with pytest.raises(AlphabetError):
        nfa_membership(AB_STAR, "abc")


def test_unreachable_finals_mean_empty():
    A = nfa({(0, "a", 0), (2, "b", 1)}, {1})
    assert nfa_is_empty(A)
    assert not nfa_is_empty(AB_STAR)


def test_star_of_empty_language_is_lambda():
    assert lang(nfa_combine("star", Nfa.nothing("ab")), 4) == {""}


def test_intersection_example():
    # enumerated on both sides up to length 6
    assert lang(nfa_combine("intersect", A_STAR_B_STAR, AB_STAR), 6) == {"", "ab"}


def test_concat_gives_a_star_b_star():
    assert lang(nfa_combine("concat", A_STAR, B_STAR), 6, "ab") == lang(A_STAR_B_STAR, 6)


def test_union():
    assert lang(nfa_combine("union", Nfa.from_word("ab", "ab"), Nfa.from_word("ba", "ab")), 3) == {"ab", "ba"}


def test_combine_argument_errors():
    with pytest.raises(SemitrioError):
        nfa_combine("star", AB_STAR, AB_STAR)
    with pytest.raises(SemitrioError):
        nfa_combine("union", AB_STAR)
    with pytest.raises(SemitrioError):
        nfa_combine("xor", AB_STAR, AB_STAR)


def test_apply_hom_erasing():
    ac = nfa({(0, "a", 1), (1, "c", 0)}, {0}, alphabet="ac")
    h = Homomorphism.eraser("a", "c")
    assert lang(apply_hom(ac, h), 6) == {"a" * n for n in range(7)}


def test_inverse_hom_example():
    h = Homomorphism(("b", "f"), ("a",), {"b": "a", "f": ""})
    got = inverse_hom(nfa({(0, "a", 0)}, {0}, alphabet="a"), h)
    assert lang(got, 5) == {"".join(w) for w in enumerate_words("bf", 5)}


def test_identity_hom_keeps_language():
    h = Homomorphism.identity("ab")
    assert lang(apply_hom(AB_STAR, h), 6) == lang(AB_STAR, 6)
    assert lang(inverse_hom(AB_STAR, h), 6) == lang(AB_STAR, 6)


def test_homomorphism_flags():
    h = Homomorphism.eraser("ab", "c")
    assert h.is_weak_coding and h.is_erasing
    assert h("acbc") == ("a", "b")
    with pytest.raises(AlphabetError):
        Homomorphism(("a",), ("a",), {"a": "b"})


def test_shuffle_delta_example():
    A = shuffle_delta(Nfa.from_word("ab", "ab"), "C")
    assert A.accepts("CaCbC") and A.accepts("ab")
    assert not A.accepts("ba")
    with pytest.raises(AlphabetError):
        shuffle_delta(A, "a")


def test_parikh_examples():
    assert sl.members(parikh_nfa(AB_STAR), 6) == sl.members(sl.linear((0, 0), [(1, 1)]), 6)
    assert sl.members(parikh_nfa(A_STAR_B_STAR), 6) == sl.members(sl.natural(2), 6)
    assert sl.is_empty(parikh_nfa(Nfa.nothing("ab")))


def test_parikh_with_explicit_letter_order():
    A = Nfa.from_word("aab", "ab")
    assert sl.members(parikh_nfa(A, ("b", "a")), 5) == {(1, 2)}


@given(st.integers(0, 10**6))
def test_parikh_exact_on_random_automata(seed):
    A = random_nfa(random.Random(seed), letters=("a", "b", "c"))
    assert parikh_mismatches(parikh_nfa(A), A, 7) == []


@given(st.integers(0, 10**6))
def test_intersection_is_conjunction(seed):
    rng = random.Random(seed)
    A, B = random_nfa(rng), random_nfa(rng)
    C = nfa_combine("intersect", A, B)
    for w in enumerate_words("ab", 6):
        assert C.accepts(w) == (A.accepts(w) and B.accepts(w))


@given(st.integers(0, 10**6))
def test_inverse_then_apply_contains_original(seed):
    A = random_nfa(random.Random(seed))
    h = Homomorphism(("a", "b"), ("a", "b"), {"a": "b", "b": "a"})
    assert lang(apply_hom(inverse_hom(A, h), h), 6) == lang(A, 6)
