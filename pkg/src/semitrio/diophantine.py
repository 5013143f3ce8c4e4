"""Non-negative integer solutions of linear Diophantine systems.

Minimal solutions are found with the Contejean-Devie completion procedure:
starting from the unit vectors, a candidate ``z`` is only ever extended by a
unit ``e_j`` whose column points "back towards zero" (``<Az, Ae_j> < 0``), and
candidates dominating an already found solution are discarded. The procedure
terminates and is complete for homogeneous systems. Inhomogeneous systems
``Ax = b`` are solved as the homogeneous ``Ax - bt = 0`` with ``t <= 1``.
"""

from __future__ import annotations

from typing import Sequence

Vector = tuple[int, ...]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _dominated(z: Vector, basis: list[Vector]) -> bool:
    for b in basis:
        if all(bi <= zi for bi, zi in zip(b, z)):
            return True
    return False


def _complete(columns: list[Vector], capped: int | None = None) -> list[Vector]:
    n = len(columns)
    m = len(columns[0]) if columns else 0
    zero = (0,) * m
    basis: list[Vector] = []
    frontier: dict[Vector, Vector] = {}
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        frontier[e] = columns[j]
    while frontier:
        solved = [z for z, a in frontier.items() if a == zero]
        basis.extend(solved)
        solved_set = set(solved)
        nxt: dict[Vector, Vector] = {}
        for z, a in frontier.items():
            if z in solved_set:
                continue
            for j in range(n):
                if capped is not None and j == capped and z[j] >= 1:
                    continue
                col = columns[j]
                if _dot(a, col) >= 0:
                    continue
                z2 = z[:j] + (z[j] + 1,) + z[j + 1:]
                if z2 in nxt or _dominated(z2, basis):
                    continue
                nxt[z2] = tuple(x + y for x, y in zip(a, col))
        frontier = nxt
    return basis


def hilbert_basis(rows: Sequence[Sequence[int]], n: int) -> list[Vector]:
    """Minimal non-zero solutions of ``A z = 0`` over the naturals.

    ``rows`` holds the ``m`` equations, each of length ``n``.
    """
    columns = [tuple(int(r[j]) for r in rows) for j in range(n)]
    return sorted(_complete(columns))


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[int], n: int) -> tuple[list[Vector], list[Vector]]:
    """Solve ``A x = b`` over the naturals.

    Returns ``(particular, homogeneous)``: the minimal solutions of the
    inhomogeneous system and the Hilbert basis of ``A x = 0``. Every solution
    is one particular solution plus a natural combination of the basis.
    """
    if len(rows) != len(rhs):
        raise ValueError("one right-hand side entry per equation is required")
    columns = [tuple(int(r[j]) for r in rows) for j in range(n)]
    columns.append(tuple(-int(x) for x in rhs))
    if not rows:
        # no equations: x = 0 is the only minimal solution, units span the rest
        units = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
        return [(0,) * n], units
    found = _complete(columns, capped=n)
    particular = sorted(z[:n] for z in found if z[n] == 1)
    homogeneous = sorted(z[:n] for z in found if z[n] == 0)
    return particular, homogeneous
