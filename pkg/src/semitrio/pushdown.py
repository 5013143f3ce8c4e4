"""Context-free grammars, pushdown automata and their Parikh images."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Sequence

from . import semilinear
from .commutative import least_solution
from .errors import AlphabetError, DimensionError, SemitrioError
from .semilinear import SemilinearSet
from .words import as_word

Symbol = Hashable
LAMBDA = ""


@dataclass(frozen=True)
class Cfg:
    nonterminals: frozenset
    terminals: tuple[str, ...]
    productions: frozenset  # of (head, body) with body a tuple of symbols
    start: Symbol

    def __post_init__(self):
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        object.__setattr__(self, "terminals", tuple(self.terminals))
        object.__setattr__(self, "productions", frozenset((h, tuple(b)) for h, b in self.productions))
        if set(self.terminals) & self.nonterminals:
            raise SemitrioError("terminals and nonterminals overlap")
        if self.start not in self.nonterminals:
            raise SemitrioError(f"start symbol {self.start!r} is not a nonterminal")
        known = self.nonterminals | set(self.terminals)
        for head, body in self.productions:
            if head not in self.nonterminals:
                raise SemitrioError(f"production head {head!r} is not a nonterminal")
            for s in body:
                if s not in known:
                    raise SemitrioError(f"production {head!r} -> {body} uses undeclared symbol {s!r}")

    @cached_property
    def by_head(self) -> dict:
        table: dict = {}
        for head, body in sorted(self.productions, key=repr):
            table.setdefault(head, []).append(body)
        return table

    def is_nonterminal(self, s) -> bool:
        return s in self.nonterminals

    def trim(self) -> "Cfg":
        """Drop unproductive and unreachable nonterminals."""
        productive: set = set()
        changed = True
        while changed:
            changed = False
            for head, body in self.productions:
                if head not in productive and all(s in productive or s not in self.nonterminals for s in body):
                    productive.add(head)
                    changed = True
        prods = {(h, b) for h, b in self.productions if h in productive and all(s in productive or s not in self.nonterminals for s in b)}
        reach = {self.start}
        queue = deque(reach)
        heads: dict = {}
        for h, b in prods:
            heads.setdefault(h, []).append(b)
        while queue:
            x = queue.popleft()
            for b in heads.get(x, ()):
                for s in b:
                    if s in self.nonterminals and s not in reach:
                        reach.add(s)
                        queue.append(s)
        prods = {(h, b) for h, b in prods if h in reach}
        return Cfg(frozenset(reach), self.terminals, frozenset(prods), self.start)


@dataclass(frozen=True)
class Npda:
    """Pushdown automaton accepting by final state at the end of the input.

    A transition ``(p, a, X, q, push)`` pops the top symbol ``X`` and pushes
    the word ``push`` (its first symbol ends on top); ``a == ""`` is a lambda move.
    """

    states: frozenset
    alphabet: tuple[str, ...]
    stack_alphabet: tuple
    transitions: frozenset
    initial: Hashable
    initial_stack: Hashable
    finals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "stack_alphabet", tuple(self.stack_alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(
            self, "transitions", frozenset((p, a, x, q, tuple(push)) for p, a, x, q, push in self.transitions)
        )
        gamma = set(self.stack_alphabet)
        if self.initial not in self.states or not self.finals <= self.states:
            raise SemitrioError("initial and final states must be declared")
        if self.initial_stack not in gamma:
            raise SemitrioError("initial stack symbol must be in the stack alphabet")
        letters = set(self.alphabet)
        for p, a, x, q, push in self.transitions:
            if p not in self.states or q not in self.states:
                raise SemitrioError(f"transition from {p!r} to {q!r} uses an undeclared state")
            if a != LAMBDA and a not in letters:
                raise AlphabetError(f"transition reads {a!r} outside the alphabet")
            if x not in gamma or not set(push) <= gamma:
                raise SemitrioError("transition uses an undeclared stack symbol")

    @cached_property
    def _moves(self) -> dict:
        table: dict = {}
        for p, a, x, q, push in self.transitions:
            table.setdefault((p, a, x), []).append((q, push))
        return table

    def accepts(self, w, max_stack: int | None = None, max_configs: int = 200_000) -> bool:
        """Bounded breadth-first search; ``True`` is always a real accepting run."""
        w = as_word(w)
        unknown = set(w) - set(self.alphabet)
        if unknown:
            raise AlphabetError(f"letters {sorted(unknown)} are not in the alphabet")
        if max_stack is None:
            max_stack = 2 * (len(w) + len(self.states)) + 4
        start = (self.initial, 0, (self.initial_stack,))
        seen = {start}
        queue = deque([start])
        while queue:
            p, i, stack = queue.popleft()
            if i == len(w) and p in self.finals:
                return True
            if not stack:
                continue
            top, rest = stack[-1], stack[:-1]
            options = [(LAMBDA, i)]
            if i < len(w):
                options.append((w[i], i + 1))
            for a, j in options:
                for q, push in self._moves.get((p, a, top), ()):
                    new = rest + tuple(reversed(push))
                    if len(new) > max_stack:
                        continue
                    c = (q, j, new)
                    if c not in seen:
                        if len(seen) >= max_configs:
                            return False
                        seen.add(c)
                        queue.append(c)
        return False


# -- grammar membership -----------------------------------------------------

def _binarize(G: Cfg) -> tuple[list, set]:
    """Bodies of length <= 2, using fresh nonterminals for longer bodies."""
    prods = []
    nts = set(G.nonterminals)
    for n, (head, body) in enumerate(sorted(G.productions, key=repr)):
        cur = head
        i = 0
        while len(body) - i > 2:
            nxt = ("bin", n, i)
            nts.add(nxt)
            prods.append((cur, (body[i], nxt)))
            cur = nxt
            i += 1
        prods.append((cur, body[i:]))
    return prods, nts


def cfg_membership(G: Cfg, w) -> bool:
    """Chart parsing over binarized productions; lambda and unit productions allowed."""
    w = as_word(w)
    unknown = set(w) - set(G.terminals)
    if unknown:
        raise AlphabetError(f"letters {sorted(unknown)} are not terminals")
    prods, nts = _binarize(G)
    n = len(w)
    nullable: set = set()
    changed = True
    while changed:
        changed = False
        for head, body in prods:
            if head not in nullable and all(s in nullable for s in body):
                nullable.add(head)
                changed = True
    chart: dict = {(i, i): set(nullable) for i in range(n + 1)}

    def derives(s, i, j):
        if s in nts:
            return s in chart.get((i, j), ())
        return j == i + 1 and w[i] == s

    for length in range(1, n + 1):
        for i in range(n - length + 1):
            j = i + length
            cell = chart.setdefault((i, j), set())
            changed = True
            while changed:
                changed = False
                for head, body in prods:
                    if head in cell:
                        continue
                    ok = False
                    if len(body) == 1:
                        ok = derives(body[0], i, j)
                    elif len(body) == 2:
                        ok = any(derives(body[0], i, k) and derives(body[1], k, j) for k in range(i, j + 1))
                    if ok:
                        cell.add(head)
                        changed = True
    return G.start in chart[(0, n)]


# -- pushdown automaton to grammar -------------------------------------------

def npda_to_cfg(M: Npda) -> Cfg:
    """Triple construction; nonterminal ``(p, X, q)`` derives the words that take
    ``p`` with ``X`` on top to ``q`` with ``X`` popped.

    Acceptance by final state is first turned into acceptance by empty stack
    with a fresh bottom marker and a draining state. Only productive triples
    are generated.
    """
    bottom = ("bottom",)
    start_state, drain = ("start",), ("drain",)
    gamma = tuple(M.stack_alphabet) + (bottom,)
    moves = list(M.transitions)
    moves.append((start_state, LAMBDA, bottom, M.initial, (M.initial_stack, bottom)))
    for x in gamma:
        for f in M.finals:
            moves.append((f, LAMBDA, x, drain, ()))
        moves.append((drain, LAMBDA, x, drain, ()))

    summaries: dict = {}  # (p, X) -> set of q
    productive: set = set()

    def chains(r, push):
        ends = [(r, ())]
        for y in push:
            nxt = []
            for s, mids in ends:
                for q in summaries.get((s, y), ()):
                    nxt.append((q, mids + (s,)))
            ends = nxt
            if not ends:
                break
        return ends

    changed = True
    while changed:
        changed = False
        for p, a, x, r, push in moves:
            for q, _ in chains(r, push):
                if (p, x, q) not in productive:
                    productive.add((p, x, q))
                    summaries.setdefault((p, x), set()).add(q)
                    changed = True

    prods = set()
    for p, a, x, r, push in moves:
        lead = (a,) if a != LAMBDA else ()
        for q, mids in chains(r, push):
            states = mids + (q,)
            body = tuple((states[i], y, states[i + 1]) for i, y in enumerate(push))
            prods.add(((p, x, q), lead + body))
    start = ("S",)
    for q in summaries.get((start_state, bottom), ()):
        prods.add((start, ((start_state, bottom, q),)))
    nts = {start} | {h for h, _ in prods}
    return Cfg(frozenset(nts), M.alphabet, frozenset(prods), start).trim()


def parikh_cfg(G: Cfg, letters: Sequence[str] | None = None) -> SemilinearSet:
    """Parikh image of ``L(G)`` in the order of ``letters`` (default: the terminals).

    Terminals missing from ``letters`` count as lambda.
    """
    letters = tuple(G.terminals if letters is None else letters)
    if not letters:
        raise DimensionError("Parikh images need at least one coordinate")
    k = len(letters)
    index = {a: i for i, a in enumerate(letters)}
    G = G.trim()
    system: dict = {x: [] for x in G.nonterminals}
    for head, body in G.productions:
        v = [0] * k
        variables = []
        for s in body:
            if s in G.nonterminals:
                variables.append(s)
            elif s in index:
                v[index[s]] += 1
        system[head].append((semilinear.linear(tuple(v)), tuple(variables)))
    if not G.productions:
        return semilinear.empty(k)
    return least_solution(system, k)[G.start]


def cfg_from_rules(rules: dict[str, Sequence[str]], start: str, terminals: Sequence[str]) -> Cfg:
    """Small convenience: ``{"S": ["aSb", ""]}`` with one-character symbols."""
    prods = {(h, tuple(b)) for h, bodies in rules.items() for b in bodies}
    return Cfg(frozenset(rules), tuple(terminals), frozenset(prods), start)


__all__ = ["Cfg", "Npda", "cfg_membership", "npda_to_cfg", "parikh_cfg", "cfg_from_rules"]
