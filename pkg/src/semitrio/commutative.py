"""Least solutions of commutative polynomial systems over semilinear sets.

Parikh images of grammars and automata are the least solution of
``X = f(X)`` where each ``f_X`` is a union of monomials ``coef + Y_1 + ... + Y_r``
(``coef`` a semilinear set, the ``Y_i`` unknowns). Union is the semiring sum,
Minkowski sum the product, and the algebra is commutative and idempotent.

The system is split into strongly connected components and solved from the
leaves up. Inside a component Newton's iteration is used: with ``J`` the
Jacobian at the current approximation ``v``, the next one is ``J* f(v)``.
For commutative idempotent semirings this reaches the least solution after
as many rounds as the component has unknowns; linear components need one.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

import networkx as nx

from .semilinear import SemilinearSet, empty, minkowski_sum, simplify, star, union, zero

Var = Hashable
Monomial = tuple[SemilinearSet, tuple[Var, ...]]


def _sum(a: SemilinearSet, b: SemilinearSet) -> SemilinearSet:
    if not a.parts or not b.parts:
        return empty(a.dimension)
    return minkowski_sum(a, b)


def _join(a: SemilinearSet, b: SemilinearSet) -> SemilinearSet:
    if not a.parts:
        return b
    if not b.parts:
        return a
    return simplify(union(a, b))


def _evaluate(coef: SemilinearSet, variables: Iterable[Var], values: Mapping[Var, SemilinearSet]) -> SemilinearSet:
    out = coef
    for v in variables:
        if not out.parts:
            break
        out = _sum(out, values[v])
    return out


def solve_linear(
    unknowns: Sequence[Var],
    matrix: dict[Var, dict[Var, SemilinearSet]],
    rhs: dict[Var, SemilinearSet],
    k: int,
) -> dict[Var, SemilinearSet]:
    """Least solution of ``Z = M Z U b`` by Gauss-Jordan elimination."""
    M = {x: dict(matrix.get(x, {})) for x in unknowns}
    b = {x: rhs.get(x, empty(k)) for x in unknowns}
    for i in unknowns:
        loop = M[i].pop(i, None)
        if loop is not None and loop.parts:
            s = star(loop)
            M[i] = {j: _sum(s, c) for j, c in M[i].items()}
            b[i] = _sum(s, b[i])
        for r in unknowns:
            if r == i:
                continue
            via = M[r].pop(i, None)
            if via is None or not via.parts:
                continue
            for j, c in M[i].items():
                term = _sum(via, c)
                if term.parts:
                    M[r][j] = _join(M[r].get(j, empty(k)), term)
            b[r] = _join(b[r], _sum(via, b[i]))
    return b


def least_solution(system: Mapping[Var, Sequence[Monomial]], k: int) -> dict[Var, SemilinearSet]:
    """Least solution of the polynomial system; dimension ``k``."""
    graph = nx.DiGraph()
    graph.add_nodes_from(system)
    for x, monomials in system.items():
        for _, variables in monomials:
            for y in variables:
                graph.add_edge(x, y)
    condensed = nx.condensation(graph)
    values: dict[Var, SemilinearSet] = {}
    for comp in reversed(list(nx.topological_sort(condensed))):
        block = list(condensed.nodes[comp]["members"])
        inside = set(block)
        local: dict[Var, dict[tuple, SemilinearSet]] = {}
        for x in block:
            grouped: dict[tuple, SemilinearSet] = {}
            for coef, variables in system.get(x, ()):
                outer = [v for v in variables if v not in inside]
                inner = tuple(sorted((v for v in variables if v in inside), key=repr))
                c = _evaluate(coef, outer, values)
                if c.parts:
                    grouped[inner] = _join(grouped.get(inner, empty(k)), c)
            local[x] = grouped
        values.update(_solve_component(block, local, k))
    return values


def _solve_component(block: list[Var], local: dict[Var, dict[tuple, SemilinearSet]], k: int) -> dict[Var, SemilinearSet]:
    none = empty(k)
    nu = {x: local[x].get((), none) for x in block}
    recursive = any(vs for x in block for vs in local[x])
    if not recursive:
        return nu
    rounds = len(block) if any(len(vs) > 1 for x in block for vs in local[x]) else 1
    for _ in range(rounds):
        J: dict[Var, dict[Var, SemilinearSet]] = {x: {} for x in block}
        f: dict[Var, SemilinearSet] = {}
        for x in block:
            fx = none
            for variables, coef in local[x].items():
                fx = _join(fx, _evaluate(coef, variables, nu))
                for i, y in enumerate(variables):
                    rest = variables[:i] + variables[i + 1:]
                    d = _evaluate(coef, rest, nu)
                    if d.parts:
                        J[x][y] = _join(J[x].get(y, none), d)
            f[x] = fx
        nxt = solve_linear(block, J, f, k)
        if nxt == nu:
            break
        nu = nxt
    return nu


def singleton(v: Sequence[int]) -> SemilinearSet:
    from .semilinear import linear

    return linear(tuple(v))


__all__ = ["least_solution", "solve_linear", "singleton", "zero"]
