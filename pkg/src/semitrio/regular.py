"""Nondeterministic finite automata, homomorphisms and regular closure operations.

Transitions are triples ``(p, a, q)``; the empty string ``""`` marks a
lambda move. States can be any hashable value (constructions nest states in
tuples to keep operands apart).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from . import semilinear
from .commutative import least_solution
from .errors import AlphabetError, DimensionError, SemitrioError
from .semilinear import SemilinearSet
from .words import Word, as_word

State = Hashable
LAMBDA = ""


@dataclass(frozen=True)
class Nfa:
    states: frozenset
    alphabet: tuple[str, ...]
    transitions: frozenset
    initial: State
    finals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise AlphabetError(f"alphabet letters repeat: {self.alphabet}")
        if LAMBDA in self.alphabet:
            raise AlphabetError("the empty string is reserved for lambda moves")
        if self.initial not in self.states:
            raise SemitrioError(f"initial state {self.initial!r} is not a state")
        if not self.finals <= self.states:
            raise SemitrioError(f"final states {set(self.finals - self.states)} are not states")
        letters = set(self.alphabet)
        for p, a, q in self.transitions:
            if p not in self.states or q not in self.states:
                raise SemitrioError(f"transition {(p, a, q)} uses an undeclared state")
            if a != LAMBDA and a not in letters:
                raise AlphabetError(f"transition {(p, a, q)} reads a letter outside the alphabet")

    # -- derived lookup tables; cached_property writes __dict__ directly
    @cached_property
    def _moves(self) -> dict:
        moves: dict = {}
        for p, a, q in self.transitions:
            moves.setdefault((p, a), set()).add(q)
        return moves

    def closure(self, states: Iterable[State]) -> frozenset:
        seen = set(states)
        stack = list(seen)
        while stack:
            p = stack.pop()
            for q in self._moves.get((p, LAMBDA), ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def step(self, states: Iterable[State], a: str) -> frozenset:
        nxt = set()
        for p in states:
            nxt |= self._moves.get((p, a), set())
        return self.closure(nxt)

    def run(self, w) -> frozenset:
        current = self.closure([self.initial])
        for a in as_word(w):
            current = self.step(current, a)
            if not current:
                break
        return current

    def accepts(self, w) -> bool:
        w = as_word(w)
        unknown = set(w) - set(self.alphabet)
        if unknown:
            raise AlphabetError(f"letters {sorted(unknown)} are not in the alphabet")
        return bool(self.run(w) & self.finals)

    def reachable(self) -> set:
        seen = {self.initial}
        queue = deque(seen)
        succ: dict = {}
        for p, _, q in self.transitions:
            succ.setdefault(p, set()).add(q)
        while queue:
            p = queue.popleft()
            for q in succ.get(p, ()):
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    def coreachable(self) -> set:
        pred: dict = {}
        for p, _, q in self.transitions:
            pred.setdefault(q, set()).add(p)
        seen = set(self.finals)
        queue = deque(seen)
        while queue:
            q = queue.popleft()
            for p in pred.get(q, ()):
                if p not in seen:
                    seen.add(p)
                    queue.append(p)
        return seen

    def trim(self) -> "Nfa":
        """Keep states that are both reachable and co-reachable (plus the initial state)."""
        useful = self.reachable() & self.coreachable()
        useful.add(self.initial)
        return Nfa(
            states=frozenset(useful),
            alphabet=self.alphabet,
            transitions=frozenset(t for t in self.transitions if t[0] in useful and t[2] in useful),
            initial=self.initial,
            finals=self.finals & useful,
        )

    def is_empty(self) -> bool:
        return not (self.reachable() & self.finals)

    # -- small factories
    @classmethod
    def from_word(cls, w, alphabet: Sequence[str]) -> "Nfa":
        w = as_word(w)
        return cls(
            states=frozenset(range(len(w) + 1)),
            alphabet=tuple(alphabet),
            transitions=frozenset((i, a, i + 1) for i, a in enumerate(w)),
            initial=0,
            finals=frozenset({len(w)}),
        )

    @classmethod
    def universal(cls, alphabet: Sequence[str]) -> "Nfa":
        return cls(frozenset({0}), tuple(alphabet), frozenset((0, a, 0) for a in alphabet), 0, frozenset({0}))

    @classmethod
    def nothing(cls, alphabet: Sequence[str]) -> "Nfa":
        return cls(frozenset({0}), tuple(alphabet), frozenset(), 0, frozenset())


@dataclass(frozen=True)
class Homomorphism:
    """Letter-to-word map. ``image[a]`` is a word over ``codomain``."""

    domain: tuple[str, ...]
    codomain: tuple[str, ...]
    image: Mapping[str, Word] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "codomain", tuple(self.codomain))
        image = {a: as_word(w) for a, w in dict(self.image).items()}
        missing = set(self.domain) - set(image)
        if missing:
            raise AlphabetError(f"letters {sorted(missing)} have no image")
        extra = set(image) - set(self.domain)
        if extra:
            raise AlphabetError(f"images given for letters {sorted(extra)} outside the domain")
        cod = set(self.codomain)
        for a, w in image.items():
            if not set(w) <= cod:
                raise AlphabetError(f"image of {a!r} leaves the codomain: {w}")
        object.__setattr__(self, "image", image)

    @property
    def is_weak_coding(self) -> bool:
        return all(len(w) <= 1 for w in self.image.values())

    @property
    def is_erasing(self) -> bool:
        return any(len(w) == 0 for w in self.image.values())

    def __call__(self, w) -> Word:
        out: list[str] = []
        for a in as_word(w):
            try:
                out.extend(self.image[a])
            except KeyError:
                raise AlphabetError(f"letter {a!r} outside the domain") from None
        return tuple(out)

    @classmethod
    def eraser(cls, keep: Sequence[str], erase: Sequence[str]) -> "Homomorphism":
        """Fix ``keep`` and erase ``erase`` (the h_c / h_Sigma maps)."""
        image = {a: (a,) for a in keep}
        image.update({c: () for c in erase})
        return cls(tuple(keep) + tuple(erase), tuple(keep), image)

    @classmethod
    def identity(cls, alphabet: Sequence[str]) -> "Homomorphism":
        return cls(tuple(alphabet), tuple(alphabet), {a: (a,) for a in alphabet})


# -- operations -------------------------------------------------------------

def nfa_membership(A: Nfa, w) -> bool:
    return A.accepts(w)


def nfa_is_empty(A: Nfa) -> bool:
    return A.is_empty()


def _tagged(A: Nfa, tag) -> tuple[set, set]:
    return {(tag, p) for p in A.states}, {((tag, p), a, (tag, q)) for p, a, q in A.transitions}


def _merged_alphabet(A: Nfa, B: Nfa) -> tuple[str, ...]:
    return A.alphabet + tuple(a for a in B.alphabet if a not in A.alphabet)


def nfa_combine(op: str, A: Nfa, B: Nfa | None = None) -> Nfa:
    """Union, concatenation, Kleene star or intersection of NFA languages."""
    if op == "star":
        if B is not None:
            raise SemitrioError("star takes exactly one automaton")
        states, trans = _tagged(A, 0)
        start = ("star", 0)
        trans.add((start, LAMBDA, (0, A.initial)))
        trans |= {((0, f), LAMBDA, start) for f in A.finals}
        return Nfa(frozenset(states | {start}), A.alphabet, frozenset(trans), start, frozenset({start}))
    if B is None:
        raise SemitrioError(f"{op} takes two automata")
    if op == "intersect":
        if set(A.alphabet) != set(B.alphabet):
            raise AlphabetError("intersection requires a shared alphabet")
        return _product(A, B)
    sa, ta = _tagged(A, 0)
    sb, tb = _tagged(B, 1)
    alphabet = _merged_alphabet(A, B)
    if op == "union":
        start = ("union", 0)
        trans = ta | tb | {(start, LAMBDA, (0, A.initial)), (start, LAMBDA, (1, B.initial))}
        finals = {(0, f) for f in A.finals} | {(1, f) for f in B.finals}
        return Nfa(frozenset(sa | sb | {start}), alphabet, frozenset(trans), start, frozenset(finals))
    if op == "concat":
        trans = ta | tb | {((0, f), LAMBDA, (1, B.initial)) for f in A.finals}
        return Nfa(frozenset(sa | sb), alphabet, frozenset(trans), (0, A.initial), frozenset((1, f) for f in B.finals))
    raise SemitrioError(f"unknown operation {op!r}")


def _product(A: Nfa, B: Nfa) -> Nfa:
    start = (A.initial, B.initial)
    seen = {start}
    queue = deque([start])
    trans = set()
    bmoves: dict = {}
    for p, a, q in B.transitions:
        bmoves.setdefault((p, a), set()).add(q)
    amoves: dict = {}
    for p, a, q in A.transitions:
        amoves.setdefault(p, []).append((a, q))
    while queue:
        p, r = queue.popleft()
        succ = []
        for a, q in amoves.get(p, ()):
            if a == LAMBDA:
                succ.append((LAMBDA, (q, r)))
            else:
                succ.extend((a, (q, s)) for s in bmoves.get((r, a), ()))
        succ.extend((LAMBDA, (p, s)) for s in bmoves.get((r, LAMBDA), ()))
        for a, nxt in succ:
            trans.add(((p, r), a, nxt))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    finals = {(p, r) for p, r in seen if p in A.finals and r in B.finals}
    return Nfa(frozenset(seen), A.alphabet, frozenset(trans), start, frozenset(finals))


def apply_hom(A: Nfa, h: Homomorphism) -> Nfa:
    """Automaton for ``h(L(A))``: each transition becomes a path spelling its image."""
    if not set(A.alphabet) <= set(h.domain):
        raise AlphabetError("automaton letters are outside the homomorphism's domain")
    states = set(A.states)
    trans = set()
    for n, (p, a, q) in enumerate(sorted(A.transitions, key=repr)):
        word = () if a == LAMBDA else h.image[a]
        if len(word) <= 1:
            trans.add((p, word[0] if word else LAMBDA, q))
            continue
        cur = p
        for i, b in enumerate(word):
            nxt = q if i == len(word) - 1 else ("hom", n, i)
            states.add(nxt)
            trans.add((cur, b, nxt))
            cur = nxt
    return Nfa(frozenset(states), h.codomain, frozenset(trans), A.initial, A.finals)


def inverse_hom(A: Nfa, h: Homomorphism) -> Nfa:
    """Automaton for ``h^-1(L(A))`` over ``h``'s domain."""
    if not all(set(w) <= set(A.alphabet) for w in h.image.values()):
        raise AlphabetError("homomorphism images leave the automaton's alphabet")
    trans = set()
    for p in A.states:
        start = A.closure([p])
        for d in h.domain:
            current = start
            for b in h.image[d]:
                current = A.step(current, b)
            trans |= {(p, d, q) for q in current}
    finals = {q for q in A.states if A.closure([q]) & A.finals}
    return Nfa(A.states, h.domain, frozenset(trans), A.initial, frozenset(finals))


def shuffle_delta(A: Nfa, delta: Sequence[str]) -> Nfa:
    """``L(A)`` with letters of ``delta`` inserted anywhere (self-loops on every state)."""
    delta = tuple(delta)
    clash = set(delta) & set(A.alphabet)
    if clash:
        raise AlphabetError(f"letters {sorted(clash)} already belong to the automaton")
    loops = {(p, d, p) for p in A.states for d in delta}
    return Nfa(A.states, A.alphabet + delta, A.transitions | loops, A.initial, A.finals)


def parikh_nfa(A: Nfa, letters: Sequence[str] | None = None) -> SemilinearSet:
    """Parikh image of ``L(A)`` in the order of ``letters`` (default: the alphabet).

    Letters left out of ``letters`` are treated as lambda, which projects the
    image onto the listed coordinates.
    """
    letters = tuple(A.alphabet if letters is None else letters)
    if not letters:
        raise DimensionError("Parikh images need at least one coordinate")
    k = len(letters)
    index = {a: i for i, a in enumerate(letters)}
    A = A.trim()
    if not A.finals:
        return semilinear.empty(k)
    coef_cache: dict = {}

    def weight(a):
        if a not in coef_cache:
            v = [0] * k
            if a in index:
                v[index[a]] = 1
            coef_cache[a] = semilinear.linear(tuple(v))
        return coef_cache[a]

    system: dict = {p: [] for p in A.states}
    for p, a, q in A.transitions:
        system[p].append((weight(a), (q,)))
    for f in A.finals:
        system[f].append((semilinear.zero(k), ()))
    return least_solution(system, k)[A.initial]
