"""Brute-force reference procedures and seeded random models for testing.

Nothing here is clever: words are enumerated, runs are searched for
directly, and Parikh images are read off the accepted words.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .counter import Encoding, Ncm, NcmTransition, Npcm, NpcmTransition, accepted_words, expand_signs, simulate
from .cstack import Rncsa, simulate_rncsa
from .indexed import IndexedGrammar, enumerate_language
from .pushdown import Cfg, Npda, cfg_membership
from .regular import Nfa
from .semilinear import LinearSet, _rank, members
from .words import Word, as_word, parikh

LAMBDA = ""


def enumerate_words(alphabet: Sequence[str], max_len: int) -> list[Word]:
    """All words of length ``<= max_len`` in length-lexicographic order."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    letters = tuple(alphabet)
    return [w for n in range(max_len + 1) for w in product(letters, repeat=n)]


def length_lex(words) -> list[Word]:
    return sorted(words, key=lambda w: (len(w), w))


def alphabet_of(model) -> tuple[str, ...]:
    return tuple(model.terminals if isinstance(model, (Cfg, IndexedGrammar)) else model.alphabet)


def membership(model, w, max_steps: int = 40, counter_bound: int | None = None) -> bool:
    """The most direct membership procedure each model class has."""
    w = as_word(w)
    if isinstance(model, Nfa):
        return model.accepts(w)
    if isinstance(model, Cfg):
        return cfg_membership(model, w)
    if isinstance(model, Npda):
        return model.accepts(w)
    if isinstance(model, Rncsa):
        return simulate_rncsa(model, w, counter_bound=counter_bound)
    if isinstance(model, (Ncm, Npcm)):
        return simulate(model, w, counter_bound=counter_bound)
    if isinstance(model, IndexedGrammar):
        return w in enumerate_language(model, len(w), max_steps)
    raise TypeError(f"no membership procedure for {type(model).__name__}")


def language(model, max_len: int, max_steps: int = 40, counter_bound: int | None = None) -> set[Word]:
    """Accepted words of length ``<= max_len``.

    Counter machines and grammars are searched once for all lengths; other
    models are queried word by word.
    """
    if isinstance(model, (Ncm, Npcm)):
        return accepted_words(model, max_len, counter_bound=counter_bound)
    if isinstance(model, IndexedGrammar):
        return enumerate_language(model, max_len, max_steps)
    return {
        w for w in enumerate_words(alphabet_of(model), max_len)
        if membership(model, w, max_steps=max_steps, counter_bound=counter_bound)
    }


def oracle_parikh(model, max_len: int, letters: Sequence[str] | None = None, **bounds) -> set[tuple[int, ...]]:
    letters = alphabet_of(model) if letters is None else tuple(letters)
    return {parikh(w, letters) for w in language(model, max_len, **bounds)}


def parikh_mismatches(S, model, max_len: int, letters: Sequence[str] | None = None, **bounds) -> list[str]:
    """Differences between ``S`` and the image of the accepted words of length ``<= max_len``.

    A vector of ``S`` with coordinate sum ``<= max_len`` can only come from
    a word of that length, so both directions are exact on those vectors.
    """
    seen = oracle_parikh(model, max_len, letters, **bounds)
    extracted = {v for v in members(S, max_len) if sum(v) <= max_len}
    problems = [f"enumerated but not extracted: {v}" for v in sorted(seen - extracted)]
    problems += [f"extracted but not enumerated: {v}" for v in sorted(extracted - seen)]
    return problems


@dataclass
class Report:
    """Words of length ``<= max_len`` accepted by exactly one of two models."""

    max_len: int
    only_first: list = field(default_factory=list)
    only_second: list = field(default_factory=list)

    @property
    def disagreements(self) -> list[Word]:
        return length_lex(self.only_first + self.only_second)

    @property
    def agree(self) -> bool:
        return not self.only_first and not self.only_second

    def __str__(self):
        if self.agree:
            return f"agree on all words up to length {self.max_len}"
        shown = ", ".join("".join(w) or "λ" for w in self.disagreements[:10])
        return f"{len(self.disagreements)} disagreement(s) up to length {self.max_len}: {shown}"


def cross_check(first, second, max_len: int, **bounds) -> Report:
    if set(alphabet_of(first)) != set(alphabet_of(second)):
        raise ValueError("cross_check needs models over the same alphabet")
    a = language(first, max_len, **bounds)
    b = language(second, max_len, **bounds)
    return Report(max_len, length_lex(a - b), length_lex(b - a))


def decoded_language(enc: Encoding, max_len: int, count_bound: int, stack_bound: int = 24) -> set[Word]:
    """Erased images of carrier words in which all counter letters occur equally often.

    Searches the carrier directly, keeping the visible prefix, the counts of
    every counter letter (each at most ``count_bound``) and, for a pushdown
    carrier, the stack.
    """
    carrier = enc.carrier
    pairs = enc.pairs
    slot = {x: (i, j) for i, pair in enumerate(pairs) for j, x in enumerate(pair)}
    visible = set(carrier.alphabet) - set(slot)
    pushdown = isinstance(carrier, Npda)
    if pushdown:
        moves: dict = {}
        for p, a, x, q, push in carrier.transitions:
            moves.setdefault((p, x), []).append((a, q, push))
        start = (carrier.initial, (carrier.initial_stack,), (), ((0, 0),) * len(pairs))
    else:
        moves = {}
        for p, a, q in carrier.transitions:
            moves.setdefault(p, []).append((a, q, None))
        start = (carrier.initial, (), (), ((0, 0),) * len(pairs))
    seen = {start}
    queue = deque([start])
    found = set()
    while queue:
        q, stack, word, counts = queue.popleft()
        if q in carrier.finals and len({x for pair in counts for x in pair}) <= 1:
            found.add(word)
        if pushdown:
            if not stack:
                continue
            options = moves.get((q, stack[-1]), ())
        else:
            options = moves.get(q, ())
        for a, r, push in options:
            new_word, new_counts = word, counts
            if a in visible:
                if len(word) >= max_len:
                    continue
                new_word = word + (a,)
            elif a != LAMBDA:
                i, j = slot[a]
                pair = list(counts[i])
                pair[j] += 1
                if pair[j] > count_bound:
                    continue
                new_counts = counts[:i] + (tuple(pair),) + counts[i + 1:]
            new_stack = stack
            if pushdown:
                new_stack = stack[:-1] + tuple(reversed(push))
                if len(new_stack) > stack_bound:
                    continue
            conf = (r, new_stack, new_word, new_counts)
            if conf not in seen:
                seen.add(conf)
                queue.append(conf)
    return found


# -- seeded random models ----------------------------------------------------

def random_nfa(rng: random.Random, max_states: int = 4, letters: Sequence[str] = ("a", "b"), density: float = 0.3) -> Nfa:
    n = rng.randint(1, max_states)
    transitions = {
        (p, a, q)
        for p in range(n) for q in range(n) for a in tuple(letters) + (LAMBDA,)
        if rng.random() < (density / 2 if a == LAMBDA else density)
    }
    finals = {q for q in range(n) if rng.random() < 0.4} or {rng.randrange(n)}
    return Nfa(frozenset(range(n)), tuple(letters), frozenset(transitions), 0, frozenset(finals))


def random_cfg(rng: random.Random, max_nonterminals: int = 3, letters: Sequence[str] = ("a", "b"), max_body: int = 3) -> Cfg:
    names = ["S", "T", "U"][: rng.randint(1, max_nonterminals)]
    symbols = list(names) + list(letters)
    prods = set()
    for head in names:
        for _ in range(rng.randint(1, 3)):
            prods.add((head, tuple(rng.choice(symbols) for _ in range(rng.randint(0, max_body)))))
    return Cfg(frozenset(names), tuple(letters), frozenset(prods), "S")


def _random_move(rng: random.Random, k: int) -> tuple[tuple[str, ...], tuple[int, ...]]:
    signs, effect = [], []
    for _ in range(k):
        e = rng.choice((-1, 0, 0, 1))
        s = "n" if e == -1 else rng.choice("zn*")
        signs.append(s)
        effect.append(e)
    return "".join(signs), tuple(effect)


def random_ncm(rng: random.Random, max_states: int = 3, letters: Sequence[str] = ("a", "b"),
               counters: int = 1, reversals: int = 1, moves: int = 7) -> Ncm:
    n = rng.randint(1, max_states)
    transitions = set()
    for _ in range(moves):
        p, q = rng.randrange(n), rng.randrange(n)
        a = rng.choice(tuple(letters) + (LAMBDA,))
        pattern, effect = _random_move(rng, counters)
        for s in expand_signs(pattern):
            transitions.add(NcmTransition(p, a, s, q, effect))
    finals = {q for q in range(n) if rng.random() < 0.5} or {rng.randrange(n)}
    return Ncm(frozenset(range(n)), tuple(letters), counters, reversals, frozenset(transitions), 0, frozenset(finals))


def random_npcm(rng: random.Random, max_states: int = 3, letters: Sequence[str] = ("a", "b"),
                counters: int = 1, reversals: int = 1, moves: int = 8) -> Npcm:
    n = rng.randint(1, max_states)
    gamma = ("Z", "X")
    transitions = set()
    for _ in range(moves):
        p, q = rng.randrange(n), rng.randrange(n)
        a = rng.choice(tuple(letters) + (LAMBDA,))
        top = rng.choice(gamma)
        push = rng.choice(((), (top,), ("X", top)))
        pattern, effect = _random_move(rng, counters)
        for s in expand_signs(pattern):
            transitions.add(NpcmTransition(p, a, top, s, q, push, effect))
    finals = {q for q in range(n) if rng.random() < 0.5} or {rng.randrange(n)}
    return Npcm(frozenset(range(n)), tuple(letters), gamma, counters, reversals,
                frozenset(transitions), 0, "Z", frozenset(finals))


def random_linear_set(rng: random.Random, k: int, max_periods: int = 2, max_entry: int = 3,
                      simple: bool = False) -> LinearSet:
    """Random linear set; with ``simple`` the periods are linearly independent."""
    constant = tuple(rng.randint(0, max_entry) for _ in range(k))
    periods: list = []
    for _ in range(rng.randint(0, max_periods)):
        p = tuple(rng.randint(0, max_entry) for _ in range(k))
        if not any(p):
            continue
        if simple and _rank(periods + [p]) <= len(periods):
            continue
        periods.append(p)
    return LinearSet(constant, tuple(periods))


__all__ = [
    "enumerate_words", "length_lex", "alphabet_of", "membership", "language", "oracle_parikh",
    "parikh_mismatches", "Report", "cross_check", "decoded_language",
    "random_nfa", "random_cfg", "random_ncm", "random_npcm", "random_linear_set",
]
