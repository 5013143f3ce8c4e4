"""Linear and semilinear subsets of N^k.

A linear set ``L(c; P)`` is ``{c + i_1 p_1 + ... + i_l p_l}``; a semilinear
set is a finite union of linear sets. Values are immutable. Zero periods are
dropped when a linear set is built, so finiteness is a syntactic property.

Besides the set operations this module carries the commutative algebra
(``minkowski_sum``, ``star``) that Parikh extraction is computed in, and
``simplify``, which removes parts and periods that are provably redundant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import diophantine
from .errors import DimensionError

Vector = tuple[int, ...]


def _vector(v: Iterable[int], name: str = "vector") -> Vector:
    t = tuple(int(x) for x in v)
    if any(x < 0 for x in t):
        raise DimensionError(f"{name} has a negative entry: {t}")
    return t


@dataclass(frozen=True)
class LinearSet:
    constant: Vector
    periods: tuple[Vector, ...] = ()

    def __post_init__(self):
        c = _vector(self.constant, "constant")
        if not c:
            raise DimensionError("dimension must be at least 1")
        kept = set()
        for p in self.periods:
            p = _vector(p, "period")
            if len(p) != len(c):
                raise DimensionError(f"period {p} does not match dimension {len(c)}")
            if any(p):
                kept.add(p)
        object.__setattr__(self, "constant", c)
        object.__setattr__(self, "periods", tuple(sorted(kept)))

    @property
    def dimension(self) -> int:
        return len(self.constant)

    def __contains__(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.dimension:
            raise DimensionError(f"vector {v} does not match dimension {self.dimension}")
        r = tuple(a - b for a, b in zip(v, self.constant))
        if any(x < 0 for x in r):
            return False
        return _in_span(r, self.periods)

    def __repr__(self):
        return f"L({self.constant}; {list(self.periods)})"


@dataclass(frozen=True)
class SemilinearSet:
    dimension: int
    parts: tuple[LinearSet, ...] = ()

    def __post_init__(self):
        if self.dimension < 1:
            raise DimensionError("dimension must be at least 1")
        parts = tuple(self.parts)
        for part in parts:
            if part.dimension != self.dimension:
                raise DimensionError(f"part {part} does not have dimension {self.dimension}")
        object.__setattr__(self, "parts", parts)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        if not self.parts:
            return f"SemilinearSet({self.dimension}, empty)"
        return " U ".join(repr(p) for p in self.parts)


# -- construction helpers ---------------------------------------------------

def linear(constant: Sequence[int], periods: Iterable[Sequence[int]] = ()) -> SemilinearSet:
    ls = LinearSet(tuple(constant), tuple(tuple(p) for p in periods))
    return SemilinearSet(ls.dimension, (ls,))


def empty(k: int) -> SemilinearSet:
    return SemilinearSet(k, ())


def zero(k: int) -> SemilinearSet:
    """The set holding only the zero vector (unit of ``minkowski_sum``)."""
    return SemilinearSet(k, (LinearSet((0,) * k),))


def unit(k: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(k))


def natural(k: int) -> SemilinearSet:
    """All of N^k."""
    return SemilinearSet(k, (LinearSet((0,) * k, tuple(unit(k, i) for i in range(k))),))


# -- membership -------------------------------------------------------------

@lru_cache(maxsize=500_000)
def _in_span(r: Vector, periods: tuple[Vector, ...]) -> bool:
    """Is ``r`` a natural combination of ``periods``? Bounded search, memoised."""
    if not any(r):
        return True
    if not periods:
        return False
    for i, x in enumerate(r):
        if x and not any(p[i] for p in periods):
            return False
    p, rest = periods[0], periods[1:]
    most = min(x // y for x, y in zip(r, p) if y)
    for t in range(most, -1, -1):
        if _in_span(tuple(x - t * y for x, y in zip(r, p)), rest):
            return True
    return False


def contains(S: SemilinearSet, v: Sequence[int]) -> bool:
    v = tuple(v)
    if len(v) != S.dimension:
        raise DimensionError(f"vector {v} does not match dimension {S.dimension}")
    return any(v in part for part in S.parts)


def members(S: SemilinearSet, bounds: int | Sequence[int]) -> set[Vector]:
    """Every member of ``S`` inside the box ``[0, bounds]`` (per coordinate if a sequence)."""
    k = S.dimension
    if isinstance(bounds, int):
        bounds = (bounds,) * k
    bounds = tuple(bounds)
    found: set[Vector] = set()
    for part in S.parts:
        c = part.constant
        if any(x > b for x, b in zip(c, bounds)):
            continue
        seen = {c}
        stack = [c]
        while stack:
            v = stack.pop()
            for p in part.periods:
                w = tuple(x + y for x, y in zip(v, p))
                if w not in seen and all(x <= b for x, b in zip(w, bounds)):
                    seen.add(w)
                    stack.append(w)
        found |= seen
    return found


# -- simplification ---------------------------------------------------------

def _reduce_periods(part: LinearSet) -> LinearSet:
    periods = list(part.periods)
    changed = True
    while changed:
        changed = False
        # try the largest periods first: they are the likeliest to be sums of others
        for p in sorted(periods, key=lambda p: (-sum(p), p)):
            others = tuple(q for q in periods if q != p)
            if _in_span(p, others):
                periods.remove(p)
                changed = True
                break
    if len(periods) == len(part.periods):
        return part
    return LinearSet(part.constant, tuple(periods))


def _subsumes(big: LinearSet, small: LinearSet) -> bool:
    """Sufficient test for ``small`` being a subset of ``big``."""
    r = tuple(a - b for a, b in zip(small.constant, big.constant))
    if any(x < 0 for x in r) or not _in_span(r, big.periods):
        return False
    bp = set(big.periods)
    return all(p in bp or _in_span(p, big.periods) for p in small.periods)


def _merge(a: LinearSet, b: LinearSet) -> LinearSet | None:
    """``L(c; P) U L(c + q; P + q) = L(c; P + q)``."""
    if len(b.periods) != len(a.periods) + 1:
        return None
    extra = set(b.periods) - set(a.periods)
    if len(extra) != 1 or not set(a.periods) <= set(b.periods):
        return None
    (q,) = extra
    if tuple(x + y for x, y in zip(a.constant, q)) != b.constant:
        return None
    return LinearSet(a.constant, b.periods)


def simplify(S: SemilinearSet) -> SemilinearSet:
    """Drop redundant periods, merge adjacent parts and remove subsumed parts.

    The result denotes exactly the same set.
    """
    parts = list(dict.fromkeys(_reduce_periods(p) for p in S.parts))
    merged = True
    while merged and len(parts) > 1:
        merged = False
        for i, j in product(range(len(parts)), repeat=2):
            if i == j:
                continue
            m = _merge(parts[i], parts[j])
            if m is not None:
                parts = [p for t, p in enumerate(parts) if t not in (i, j)]
                parts.append(_reduce_periods(m))
                merged = True
                break
    parts.sort(key=lambda p: (-len(p.periods), sum(p.constant), p.constant))
    kept: list[LinearSet] = []
    for part in parts:
        if any(_subsumes(k, part) for k in kept):
            continue
        kept = [k for k in kept if not _subsumes(part, k)]
        kept.append(part)
    return SemilinearSet(S.dimension, tuple(kept))


# -- set operations ---------------------------------------------------------

def _same_dimension(S1: SemilinearSet, S2: SemilinearSet):
    if S1.dimension != S2.dimension:
        raise DimensionError(f"dimensions differ: {S1.dimension} vs {S2.dimension}")


def union(S1: SemilinearSet, S2: SemilinearSet) -> SemilinearSet:
    _same_dimension(S1, S2)
    return SemilinearSet(S1.dimension, S1.parts + S2.parts)


def _combine(periods: Sequence[Vector], coeffs: Sequence[int], k: int) -> Vector:
    v = [0] * k
    for p, x in zip(periods, coeffs):
        if x:
            for i in range(k):
                v[i] += x * p[i]
    return tuple(v)


def _intersect_linear(a: LinearSet, b: LinearSet) -> list[LinearSet]:
    if not a.periods:
        return [a] if a.constant in b else []
    if not b.periods:
        return [b] if b.constant in a else []
    k = a.dimension
    n1, n2 = len(a.periods), len(b.periods)
    # c1 + P1 x = c2 + P2 y   <=>   [P1 | -P2] (x, y) = c2 - c1
    rows = [[p[i] for p in a.periods] + [-q[i] for q in b.periods] for i in range(k)]
    rhs = [y - x for x, y in zip(a.constant, b.constant)]
    particular, homogeneous = diophantine.solve(rows, rhs, n1 + n2)
    if not particular:
        return []
    periods = tuple(_combine(a.periods, h[:n1], k) for h in homogeneous)
    out = []
    for s in particular:
        shift = _combine(a.periods, s[:n1], k)
        out.append(LinearSet(tuple(x + y for x, y in zip(a.constant, shift)), periods))
    return out


def intersect(S1: SemilinearSet, S2: SemilinearSet) -> SemilinearSet:
    _same_dimension(S1, S2)
    parts = []
    for a in S1.parts:
        for b in S2.parts:
            parts.extend(_intersect_linear(a, b))
    return simplify(SemilinearSet(S1.dimension, tuple(parts)))


def _check_index(i: int, k: int):
    if not 0 <= i < k:
        raise DimensionError(f"coordinate {i} out of range for dimension {k}")


def equality_set(k: int, pairs: Sequence[tuple[int, int]]) -> SemilinearSet:
    """``{v in N^k : v_i = v_j for every listed pair}``.

    Built from the pair graph: one period per connected group of tied
    coordinates (the sum of its unit vectors), unit periods elsewhere.
    """
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in pairs:
        _check_index(i, k)
        _check_index(j, k)
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    periods = [tuple(1 if i in g else 0 for i in range(k)) for g in groups.values()]
    return linear((0,) * k, periods)


def constrain_pairwise_equal(S: SemilinearSet, pairs: Sequence[tuple[int, int]]) -> SemilinearSet:
    """``{v in S : v_i = v_j for each (i, j) in pairs}``.

    Solved per part in the space of period coefficients, which gives the
    same set as ``intersect(S, equality_set(k, pairs))`` with fewer unknowns.
    """
    k = S.dimension
    for i, j in pairs:
        _check_index(i, k)
        _check_index(j, k)
    pairs = [(i, j) for i, j in pairs if i != j]
    if not pairs:
        return S
    parts = []
    for part in S.parts:
        c, P = part.constant, part.periods
        rows = [[p[i] - p[j] for p in P] for i, j in pairs]
        rhs = [c[j] - c[i] for i, j in pairs]
        if not P:
            if all(x == 0 for x in rhs):
                parts.append(part)
            continue
        particular, homogeneous = diophantine.solve(rows, rhs, len(P))
        periods = tuple(_combine(P, h, k) for h in homogeneous)
        for s in particular:
            shift = _combine(P, s, k)
            parts.append(LinearSet(tuple(x + y for x, y in zip(c, shift)), periods))
    return simplify(SemilinearSet(k, tuple(parts)))


def project(S: SemilinearSet, keep: Sequence[int]) -> SemilinearSet:
    keep = list(keep)
    for i in keep:
        _check_index(i, S.dimension)
    if len(set(keep)) != len(keep):
        raise DimensionError(f"projection indices repeat: {keep}")
    if not keep:
        raise DimensionError("projection must keep at least one coordinate")
    parts = tuple(
        LinearSet(tuple(p.constant[i] for i in keep), tuple(tuple(q[i] for i in keep) for q in p.periods))
        for p in S.parts
    )
    return simplify(SemilinearSet(len(keep), parts))


def is_empty(S: SemilinearSet) -> bool:
    return not S.parts


def is_finite(S: SemilinearSet) -> bool:
    return all(not p.periods for p in S.parts)


def _rank(vectors: Sequence[Vector]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_simple(A: LinearSet) -> bool:
    """Periods linearly independent over the rationals."""
    return _rank(A.periods) == len(A.periods)


def verify_disjoint_simple(sets: Sequence[LinearSet]) -> bool:
    if not all(is_simple(a) for a in sets):
        return False
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if _intersect_linear(sets[i], sets[j]):
                return False
    return True


# -- commutative algebra used by Parikh extraction --------------------------

def minkowski_sum(S1: SemilinearSet, S2: SemilinearSet) -> SemilinearSet:
    _same_dimension(S1, S2)
    parts = [
        LinearSet(tuple(x + y for x, y in zip(a.constant, b.constant)), a.periods + b.periods)
        for a in S1.parts
        for b in S2.parts
    ]
    return simplify(SemilinearSet(S1.dimension, tuple(parts)))


def star(S: SemilinearSet) -> SemilinearSet:
    """``{0} U S U (S + S) U ...``.

    Period-free parts collapse into one linear set; every other part ``L(c; P)``
    contributes the factor ``{0} U L(c; P + c)``.
    """
    k = S.dimension
    simple = [p.constant for p in S.parts if not p.periods]
    result = linear((0,) * k, simple)
    for part in S.parts:
        if not part.periods:
            continue
        factor = SemilinearSet(k, (LinearSet((0,) * k), LinearSet(part.constant, part.periods + (part.constant,))))
        result = minkowski_sum(result, factor)
    return result


def psi_inverse_ncm(A: LinearSet, alphabet: Sequence[str]):
    """A one-reversal counter machine accepting every word whose Parikh vector lies in ``A``.

    Counter ``j`` is loaded with the constant's ``j``-th entry, each period is
    pumped any number of times by lambda-loops, and then every input letter
    ``a_j`` takes one from counter ``j``. The machine accepts at the end of the
    input once all counters are empty.
    """
    from .counter import Ncm, NcmTransition, expand_signs

    alphabet = tuple(alphabet)
    n = len(alphabet)
    if A.dimension != n:
        raise DimensionError(f"linear set has dimension {A.dimension}, alphabet has {n} letters")
    transitions = []
    any_signs = "*" * n
    fresh = iter(range(10**9))

    def add_vector(src, dst, v):
        """Lambda chain from src to dst adding v (unit steps)."""
        steps = max(v) if any(v) else 0
        if steps == 0:
            for s in expand_signs(any_signs):
                transitions.append(NcmTransition(src, "", s, dst, (0,) * n))
            return
        cur = src
        for t in range(steps):
            nxt = dst if t == steps - 1 else ("chain", next(fresh))
            effect = tuple(1 if x > t else 0 for x in v)
            for s in expand_signs(any_signs):
                transitions.append(NcmTransition(cur, "", s, nxt, effect))
            cur = nxt

    add_vector("load", ("pump", 0), A.constant)
    for i, p in enumerate(A.periods):
        add_vector(("pump", i), ("pump", i), p)
        add_vector(("pump", i), ("pump", i + 1), (0,) * n)
    add_vector(("pump", len(A.periods)), "read", (0,) * n)
    for j, a in enumerate(alphabet):
        pattern = "".join("n" if i == j else "*" for i in range(n))
        effect = tuple(-1 if i == j else 0 for i in range(n))
        for s in expand_signs(pattern):
            transitions.append(NcmTransition("read", a, s, "read", effect))
    states = {"load", "read"} | {t.source for t in transitions} | {t.target for t in transitions}
    return Ncm(
        states=frozenset(states),
        alphabet=alphabet,
        counters=n,
        reversals=1,
        transitions=frozenset(transitions),
        initial="load",
        finals=frozenset({"read"}),
    )
