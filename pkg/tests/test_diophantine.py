from itertools import product

import pytest
from hypothesis import given, strategies as st

from semitrio.diophantine import hilbert_basis, solve


def brute_minimal(rows, rhs, n, top):
    sols = [x for x in product(range(top + 1), repeat=n)
            if all(sum(a * b for a, b in zip(r, x)) == c for r, c in zip(rows, rhs))]
    return sorted(x for x in sols if not any(y != x and all(a <= b for a, b in zip(y, x)) for y in sols
                                             if sum(y) > 0 or sum(rhs) > 0))


def test_hilbert_basis_of_x_equals_y():
    assert hilbert_basis([[1, -1]], 2) == [(1, 1)]


def test_hilbert_basis_two_x_equals_three_y():
    assert hilbert_basis([[2, -3]], 2) == [(3, 2)]


def test_hilbert_basis_x_plus_y_equals_2z():
    # minimal solutions found by exhaustive search in the box [0, 6]^3
    assert hilbert_basis([[1, 1, -2]], 3) == [(0, 2, 1), (1, 1, 1), (2, 0, 1)]


def test_solve_inhomogeneous():
    particular, homogeneous = solve([[1, -1]], [2], 2)
    assert particular == [(2, 0)]
    assert homogeneous == [(1, 1)]


def test_solve_without_equations_gives_units():
    particular, homogeneous = solve([], [], 2)
    assert particular == [(0, 0)]
    assert sorted(homogeneous) == [(0, 1), (1, 0)]


def test_solve_rejects_mismatched_rhs():
    with pytest.raises(ValueError):
        solve([[1, 1]], [1, 2], 2)


coeffs = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@given(coeffs)
def test_hilbert_basis_matches_brute_force(row):
    basis = hilbert_basis([row], 3)
    brute = [x for x in brute_minimal([row], [0], 3, 6) if any(x)]
    assert all(sum(a * b for a, b in zip(row, z)) == 0 for z in basis)
    # every minimal solution inside the box is in the basis
    assert set(brute) <= set(basis)


@given(coeffs, st.integers(0, 4))
def test_particular_solutions_are_minimal_and_complete(row, c):
    particular, homogeneous = solve([row], [c], 3)
    for x in particular:
        assert sum(a * b for a, b in zip(row, x)) == c
    for x in product(range(7), repeat=3):
        if sum(a * b for a, b in zip(row, x)) == c:
            assert any(all(p <= q for p, q in zip(y, x)) for y in particular)
