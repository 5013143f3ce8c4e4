import random

import pytest
from hypothesis import given, strategies as st

from semitrio import semilinear as sl
from semitrio.corpus import anbn_npda
from semitrio.errors import AlphabetError, SemitrioError
from semitrio.oracle import enumerate_words, parikh_mismatches, random_cfg
from semitrio.pushdown import Cfg, Npda, cfg_from_rules, cfg_membership, npda_to_cfg, parikh_cfg

ANBN = cfg_from_rules({"S": ["aSb", ""]}, "S", "ab")
DYCK = cfg_from_rules({"S": ["", "(S)S"]}, "S", "()")


def balanced(w):
    depth = 0
    for x in w:
        depth += 1 if x == "(" else -1
        if depth < 0:
            return False
    return depth == 0


def test_membership_examples():
    assert cfg_membership(ANBN, "aabb")
    assert not cfg_membership(ANBN, "abba")
    assert cfg_membership(ANBN, "")


def test_membership_rejects_foreign_letters():
    with pytest.raises(AlphabetError):
        cfg_membership(ANBN, "abc")


def test_dyck_membership_matches_a_balance_check():
    for w in enumerate_words("()", 8):
        assert cfg_membership(DYCK, w) == balanced(w)


def test_grammar_validation():
    with pytest.raises(SemitrioError):
        Cfg(frozenset({"S"}), ("a",), frozenset({("S", ("X",))}), "S")
    with pytest.raises(SemitrioError):
        Cfg(frozenset({"S"}), ("a",), frozenset(), "T")


def test_npda_to_cfg_anbn():
    M = anbn_npda()
    G = npda_to_cfg(M)
    for w in enumerate_words("ab", 8):
        assert cfg_membership(G, w) == M.accepts(w) == (w == ("a",) * (len(w) // 2) + ("b",) * (len(w) // 2))


def test_npda_to_cfg_empty_language():
    M = Npda(frozenset({0, 1}), ("a",), ("Z",), frozenset({(0, "a", "Z", 0, ("Z",))}), 0, "Z", frozenset({1}))
    G = npda_to_cfg(M)
    assert not G.productions
    assert sl.is_empty(parikh_cfg(G, ("a",)))


def test_parikh_examples():
    assert sl.members(parikh_cfg(ANBN), 8) == {(n, n) for n in range(9)}
    free = cfg_from_rules({"S": ["aS", "bS", ""]}, "S", "ab")
    assert sl.members(parikh_cfg(free), 8) == sl.members(sl.natural(2), 8)


def random_npda(rng):
    moves = set()
    for _ in range(rng.randint(2, 6)):
        top = rng.choice("ZX")
        moves.add((rng.randrange(2), rng.choice(["", "a", "b"]), top, rng.randrange(2),
                   rng.choice([(), (top,), ("X", top)])))
    return Npda(frozenset({0, 1}), ("a", "b"), ("Z", "X"), frozenset(moves), 0, "Z", frozenset({rng.randrange(2)}))


@given(st.integers(0, 10**6))
def test_npda_to_cfg_preserves_language(seed):
    M = random_npda(random.Random(seed))
    G = npda_to_cfg(M)
    for w in enumerate_words("ab", 6):
        assert cfg_membership(G, w) == M.accepts(w, max_stack=16)


@given(st.integers(0, 10**6))
def test_parikh_exact_on_random_grammars(seed):
    G = random_cfg(random.Random(seed), letters=("a", "b", "c"))
    assert parikh_mismatches(parikh_cfg(G), G, 7) == []
