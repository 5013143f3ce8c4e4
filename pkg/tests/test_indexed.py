import pytest
from hypothesis import given, strategies as st

from semitrio import corpus as C
from semitrio.counter import accepted_words
from semitrio.errors import MalformedFormError, NotRightLinearError, SemitrioError
from semitrio.indexed import (IndexedGrammar, Production, SententialForm, classify, decide_emptiness_rli,
                              decide_infiniteness_rli, decide_membership_rli, derive, enumerate_language, explore,
                              grammar, initial_form, intersect_with_nfa, lem1_product, lem2_split,
                              npcm_to_rli_counter, parikh_rli, production as P, rli_counter_to_npcm,
                              semi_decide_emptiness)
from semitrio.oracle import cross_check, enumerate_words
from semitrio.regular import Nfa
from semitrio import semilinear as sl

from language_checks import split_image


def texts(words):
    return {"".join(w) for w in words}


def nfa(transitions, finals, alphabet):
    states = {0} | set(finals) | {p for p, _, _ in transitions} | {q for _, _, q in transitions}
    return Nfa(frozenset(states), tuple(alphabet), frozenset(transitions), 0, frozenset(finals))


def test_production_shapes_are_validated():
    with pytest.raises(SemitrioError):
        grammar([P("S", "aS", push="f")], "S", "a")
    with pytest.raises(SemitrioError):
        grammar([P("S", "a", increments=(1,))], "S", "a", counters=2)
    with pytest.raises(SemitrioError):
        grammar([P("S", "a", increments=(-1,))], "S", "a", counters=1)


def test_derive_pushes_pops_and_copies():
    G = C.doubling_grammar()
    form = SententialForm((("T", ("f", "g")),))
    (nxt,) = derive(G, form)
    assert nxt.items == (("T", ("g",)), ("T", ("g",)))
    assert derive(G, SententialForm((("T", ()),))) == set()
    with pytest.raises(MalformedFormError):
        derive(G, SententialForm(("b",)))


def test_push_then_pop_restores_index():
    G = grammar([P("S", "X", push="f"), P("X", "Y", pop="f"), P("Y", "a", pop="g")], "S", "a")
    (pushed,) = derive(G, SententialForm((("S", ("g",)),)))
    (popped,) = derive(G, pushed)
    assert popped.items == (("Y", ("g",)),)


def test_doubling_words():
    assert texts(enumerate_language(C.doubling_grammar(), 8, 40)) == {"a", "aa", "aaaa", "aaaaaaaa"}
    # without the bottom guard every nonempty block of a's is derivable
    assert texts(enumerate_language(C.unguarded_doubling_grammar(), 5, 40)) == {"a" * n for n in range(1, 6)}


def test_two_halves_language():
    G = C.two_halves_grammar()
    found = texts(enumerate_language(G, 10, 60))
    assert "abc$cba" in found and "ab$" not in found
    expected = {"".join(w) for w in enumerate_words("abc$", 7) if C.in_two_halves(w)}
    assert {w for w in found if len(w) <= 7} == expected


def test_equal_ab_by_direct_count():
    found = texts(enumerate_language(C.equal_ab_grammar(), 8, 40))
    assert found == {"".join(w) for w in enumerate_words("ab", 8) if w.count("a") == w.count("b")}


def test_copy_grammar():
    found = texts(enumerate_language(C.copy_grammar(), 7, 60))
    assert found == {"".join(w) + "$" + "".join(w) for w in enumerate_words("abc", 3)}


def test_exploration_flags():
    # only the length bound cuts equal_ab; the doubling grammar's push loop is cut by steps
    ex = explore(C.equal_ab_grammar(), 6, 20)
    assert ex.complete and not ex.exhausted
    assert not explore(C.doubling_grammar(), 6, 20).complete
    dead = grammar([P("S", "aS", pop="f")], "S", "a")
    assert semi_decide_emptiness(dead).outcome == "empty"
    assert semi_decide_emptiness(C.stuck_grammar(), 6, 20).outcome == "unknown"
    assert semi_decide_emptiness(C.equal_ab_grammar()).outcome == "nonempty"
    assert semi_decide_emptiness(C.two_halves_grammar(), 4, 30).witness == ("$",)


def test_classify():
    assert classify(C.two_halves_grammar()).right_linear
    d = classify(C.doubling_grammar())
    assert not d.linear and d.width >= 2
    c = classify(grammar([P("A", "aBb"), P("B", "")], "A", "ab"))
    assert c.linear and not c.right_linear


def test_intersect_with_nfa():
    abc = nfa({(0, "a", 0), (0, "", 1), (1, "b", 1), (1, "", 2), (2, "c", 2)}, {2}, "abc")
    G = intersect_with_nfa(C.anbncn_linear_grammar(), abc)
    assert texts(enumerate_language(G, 9, 60)) == {"", "abc", "aabbcc", "aaabbbccc"}
    dollar_first = nfa({(0, "$", 1)} | {(1, x, 1) for x in "abc$"}, {1}, "abc$")
    H = intersect_with_nfa(C.two_halves_grammar(), dollar_first)
    expected = {"".join(w) for w in enumerate_words("abc$", 7) if w[:1] == ("$",) and C.in_two_halves(w)}
    assert texts(enumerate_language(H, 7, 60)) == expected
    empty = nfa(set(), set(), "abc")
    assert enumerate_language(intersect_with_nfa(C.palindrome_grammar(), empty), 5, 30) == set()


def test_lem1_product_palindromes_with_equal_counts():
    G, M = C.palindrome_grammar(), C.equal_ab_ncm(("a", "b", "c"))
    H = lem1_product(G, M)
    accepted = accepted_words(M, 7)
    assert enumerate_language(H, 7, 90) == {w for w in enumerate_language(G, 7, 30) if w in accepted}


def test_lem1_product_trivial_machines():
    G = C.equal_ab_grammar()
    assert enumerate_language(lem1_product(G, C.universal_ncm()), 6, 60) == enumerate_language(G, 6, 30)
    assert enumerate_language(lem1_product(G, C.empty_ncm()), 6, 60) == set()


def test_lem2_without_counters_is_identity():
    G = C.palindrome_grammar()
    s = lem2_split(G)
    assert s.grammar == G and s.eraser(("a", "c")) == ("a", "c")


# the bound is the largest count any word of length <= 7 can force on one counter
@pytest.mark.parametrize("make,bound", [(C.equal_ab_grammar, 4), (C.two_halves_grammar, 2)])
def test_lem2_identity_right_linear(make, bound):
    G = make()
    assert split_image(G, lem2_split(G), 7, counter_bound=bound) == enumerate_language(G, 7, 60)


def test_lem2_identity_copy_with_counters():
    G = C.copy_grammar(counters=True)
    assert split_image(G, lem2_split(G), 7, counter_bound=None, extra=3) == enumerate_language(G, 7, 60)


def test_npcm_to_grammar_anbncn():
    G = npcm_to_rli_counter(C.anbncn_npcm())
    assert texts(enumerate_language(G, 9, 80)) == texts(accepted_words(C.anbncn_npcm(), 9))


def test_grammar_to_npcm_round_trip():
    G = C.equal_ab_grammar()
    M = rli_counter_to_npcm(G)
    assert cross_check(G, M, 6, max_steps=40).agree
    back = npcm_to_rli_counter(M)
    assert cross_check(G, back, 6, max_steps=120).agree


def test_converters_on_empty_machine():
    G = npcm_to_rli_counter(C.empty_npcm())
    assert decide_emptiness_rli(G)


def test_rli_deciders():
    assert not decide_emptiness_rli(C.equal_ab_grammar())
    assert decide_emptiness_rli(C.stuck_grammar())
    assert not decide_emptiness_rli(C.two_halves_grammar())
    assert decide_membership_rli(C.two_halves_grammar(), "ab$") is False
    assert decide_membership_rli(C.two_halves_grammar(), "cab$bca")
    assert decide_infiniteness_rli(C.equal_ab_grammar())
    assert not decide_infiniteness_rli(C.stuck_grammar())
    S = parikh_rli(C.equal_ab_grammar())
    assert sl.contains(S, (3, 3)) and not sl.contains(S, (3, 2))


def test_non_right_linear_is_rejected():
    with pytest.raises(NotRightLinearError):
        rli_counter_to_npcm(C.doubling_grammar())
    with pytest.raises(NotRightLinearError):
        decide_emptiness_rli(C.copy_grammar(counters=True))


@given(st.lists(st.sampled_from([(1, 0), (0, 1), (1, 1), (2, 0)]), min_size=1, max_size=6))
def test_counters_only_grow(incs):
    prods = [Production("S", ("S",), None, None, inc) for inc in incs] + [Production("S", (), None, None, (0, 0))]
    G = IndexedGrammar(frozenset({"S"}), ("a",), frozenset(), tuple(prods), "S", 2)
    form = initial_form(G)
    for _ in range(3):
        for nxt in derive(G, form):
            assert all(b >= a for a, b in zip(form.counters, nxt.counters))
        form = max(derive(G, form), key=lambda f: f.nonterminal_count)
    assert enumerate_language(G, 0, 8) == {()}
