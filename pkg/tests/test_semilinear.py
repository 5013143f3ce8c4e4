from itertools import product

import pytest
from hypothesis import given, strategies as st

from semitrio import semilinear as sl
from semitrio.corpus import in_two_halves
from semitrio.counter import simulate
from semitrio.errors import DimensionError
from semitrio.semilinear import LinearSet, SemilinearSet
from semitrio.words import parikh

from strategies import linear_sets, semilinear_sets

L = sl.linear


def box(S, top):
    return sl.members(S, top)


def test_contains_examples():
    S = L((1, 0), [(1, 1)])
    assert sl.contains(S, (3, 2))
    assert not sl.contains(S, (2, 2))


def test_contains_rejects_wrong_dimension():
    with pytest.raises(DimensionError):
        sl.contains(L((1, 0), [(1, 1)]), (1, 2, 3))


def test_two_halves_image_contains_4_4_4_1():
    # vectors of v$w with both halves balanced, found by enumerating such words
    found = set()
    for n in range(0, 5):
        for m in range(0, 5 - n):
            w = "abc" * n + "$" + "abc" * m
            assert in_two_halves(w)
            found.add(parikh(w, "abc$"))
    assert (4, 4, 4, 1) in found
    S = L((0, 0, 0, 1), [(1, 1, 1, 0)])
    assert all(sl.contains(S, v) for v in found)


def test_union_examples():
    S = L((1, 0), [(1, 1)])
    assert box(sl.union(sl.empty(2), S), 20) == box(S, 20)
    assert box(sl.union(S, S), 20) == box(S, 20)
    assert box(sl.union(L((1, 0)), L((0, 1))), 20) == {(1, 0), (0, 1)}


def test_intersect_examples():
    got = sl.intersect(L((0, 0), [(2, 0), (0, 2)]), L((0, 0), [(3, 3)]))
    assert box(got, 24) == box(L((0, 0), [(6, 6)]), 24)
    assert sl.is_empty(sl.intersect(L((1, 0), [(2, 0)]), L((0, 0), [(2, 0)])))


def test_constrain_examples():
    assert box(sl.constrain_pairwise_equal(sl.natural(2), [(0, 1)]), 20) == box(L((0, 0), [(1, 1)]), 20)
    got = sl.constrain_pairwise_equal(L((1, 0), [(1, 0), (0, 1)]), [(0, 1)])
    assert box(got, 20) == box(L((1, 1), [(1, 1)]), 20)
    S = L((1, 0), [(1, 1)])
    assert box(sl.constrain_pairwise_equal(S, []), 20) == box(S, 20)


def test_project_examples():
    assert box(sl.project(L((1, 2), [(0, 3)]), [0]), 20) == {(1,)}
    assert box(sl.project(L((0, 0), [(1, 1)]), [0]), 20) == set((i,) for i in range(21))
    assert box(sl.project(L((0, 0, 0), [(1, 1, 1)]), [0, 1]), 20) == {(i, i) for i in range(21)}


def test_emptiness_and_finiteness():
    assert sl.is_empty(SemilinearSet(2, ()))
    assert sl.is_finite(L((3, 1)))
    assert not sl.is_finite(L((0, 0), [(1, 0)]))


def test_zero_periods_are_dropped():
    assert LinearSet((1, 2), ((0, 0), (1, 0))) == LinearSet((1, 2), ((1, 0),))
    assert sl.is_finite(L((1, 1), [(0, 0)]))


def test_simplicity():
    assert sl.is_simple(LinearSet((0, 0), ((1, 0), (0, 1))))
    assert not sl.is_simple(LinearSet((0, 0), ((1, 1), (2, 2))))
    assert sl.verify_disjoint_simple([LinearSet((0, 0), ((2, 0),)), LinearSet((1, 0), ((2, 0),))])
    assert not sl.verify_disjoint_simple([LinearSet((0, 0), ((1, 0),)), LinearSet((2, 0), ((1, 0),))])


def test_psi_inverse_examples():
    M = sl.psi_inverse_ncm(LinearSet((0, 0), ((1, 1),)), "ab")
    assert simulate(M, "abba")
    assert not simulate(M, "aab")
    single = sl.psi_inverse_ncm(LinearSet((1, 0)), "ab")
    accepted = {"".join(w) for n in range(4) for w in product("ab", repeat=n) if simulate(single, w)}
    assert accepted == {"a"}


def test_psi_inverse_agrees_with_contains_to_length_10():
    A = LinearSet((1, 2), ((1, 1),))
    M = sl.psi_inverse_ncm(A, "ab")
    for n in range(11):
        for w in product("ab", repeat=n):
            assert simulate(M, w) == (parikh(w, "ab") in A)


def test_minkowski_sum_and_star():
    S = sl.minkowski_sum(L((1, 0)), L((0, 1), [(0, 2)]))
    assert box(S, 6) == {(1, y) for y in (1, 3, 5)}
    T = sl.star(L((2,)))
    assert box(T, 10) == {(x,) for x in range(0, 11, 2)}


# -- properties checked against box enumeration ---------------------------------------

@given(st.integers(1, 3).flatmap(lambda k: st.tuples(semilinear_sets(k), semilinear_sets(k))))
def test_intersect_is_pointwise_and(pair):
    S1, S2 = pair
    assert box(sl.intersect(S1, S2), 16) == box(S1, 16) & box(S2, 16)


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(semilinear_sets(k), semilinear_sets(k))))
def test_union_is_pointwise_or(pair):
    S1, S2 = pair
    assert box(sl.union(S1, S2), 12) == box(S1, 12) | box(S2, 12)


@given(semilinear_sets(3), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=2))
def test_constrain_is_a_filter(S, pairs):
    got = box(sl.constrain_pairwise_equal(S, pairs), 16)
    assert got == {v for v in box(S, 16) if all(v[i] == v[j] for i, j in pairs)}


@given(semilinear_sets(3), st.sampled_from([[0], [1], [0, 2], [2, 1]]))
def test_project_is_existential(S, keep):
    top = 12
    reach = 4 + top * sum(max(p) for part in S.parts for p in part.periods)
    bounds = [top if i in keep else reach for i in range(3)]
    expected = {tuple(v[i] for i in keep) for v in sl.members(S, bounds)}
    assert box(sl.project(S, keep), top) == expected


@given(semilinear_sets(2))
def test_simplify_keeps_members(S):
    assert box(sl.simplify(S), 15) == box(S, 15)


@given(semilinear_sets(2))
def test_finiteness_matches_growth(S):
    small, big = box(S, 25), box(S, 50)
    assert sl.is_finite(S) == (small == big and not any(p.periods for p in S.parts))


@given(linear_sets(2))
def test_contains_agrees_with_members(A):
    S = SemilinearSet(2, (A,))
    inside = box(S, 10)
    for v in product(range(11), repeat=2):
        assert sl.contains(S, v) == (v in inside)
