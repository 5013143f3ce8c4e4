"""Restricted checking stack automata with reversal-bounded counters.

While reading the input the machine may only append to its stack. Once the
input is exhausted it may switch, once, into a read phase: the stack is
frozen between the markers ``<`` (bottom) and ``>`` (top), the head starts on
``>`` and moves two-way over it. Counters behave as in ``Ncm`` in both phases.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable

from .counter import LAMBDA, _apply, _check_move
from .errors import AlphabetError, SemitrioError
from .words import as_word

BOTTOM, TOP = "<", ">"


@dataclass(frozen=True)
class WriteTransition:
    """Reads ``letter`` (or nothing), appends ``push`` to the stack."""

    source: Hashable
    letter: str
    signs: tuple[str, ...]
    target: Hashable
    push: tuple
    effect: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "push", tuple(self.push))
        object.__setattr__(self, "effect", tuple(int(e) for e in self.effect))


@dataclass(frozen=True)
class ReadTransition:
    """Sees ``symbol`` under the head, moves it by ``move`` in ``{-1, 0, 1}``."""

    source: Hashable
    symbol: Hashable
    signs: tuple[str, ...]
    target: Hashable
    move: int
    effect: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "effect", tuple(int(e) for e in self.effect))


@dataclass(frozen=True)
class Rncsa:
    """``switches`` holds pairs ``(p, q)``: from write state ``p`` at the end of
    the input, enter read state ``q``. Write and read states are disjoint."""

    states: frozenset
    read_states: frozenset
    alphabet: tuple[str, ...]
    stack_alphabet: tuple
    counters: int
    reversals: int
    write_transitions: frozenset
    read_transitions: frozenset
    switches: frozenset
    initial: Hashable
    finals: frozenset

    def __post_init__(self):
        for name in ("states", "read_states", "write_transitions", "read_transitions", "switches", "finals"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "stack_alphabet", tuple(self.stack_alphabet))
        if self.counters < 0 or self.reversals < 0:
            raise SemitrioError("counter count and reversal bound must be non-negative")
        if len(set(self.alphabet)) != len(self.alphabet) or LAMBDA in self.alphabet:
            raise AlphabetError("alphabet letters must be distinct and non-empty")
        if self.states & self.read_states:
            raise SemitrioError("write and read states must be disjoint")
        if {BOTTOM, TOP} & set(self.stack_alphabet):
            raise SemitrioError("'<' and '>' are reserved stack markers")
        if self.initial not in self.states:
            raise SemitrioError("the initial state must be a write state")
        if not self.finals <= self.states | self.read_states:
            raise SemitrioError("final states must be declared")
        letters, gamma = set(self.alphabet), set(self.stack_alphabet)
        for t in self.write_transitions:
            if t.source not in self.states or t.target not in self.states:
                raise SemitrioError(f"write transition {t} leaves the write states")
            if t.letter != LAMBDA and t.letter not in letters:
                raise AlphabetError(f"transition reads {t.letter!r} outside the alphabet")
            if not set(t.push) <= gamma:
                raise SemitrioError(f"write transition {t} pushes an undeclared symbol")
            _check_move(self.counters, t.signs, t.effect, f"write {t.source!r} -> {t.target!r}")
        for t in self.read_transitions:
            if t.source not in self.read_states or t.target not in self.read_states:
                raise SemitrioError(f"read transition {t} leaves the read states")
            if t.symbol not in gamma | {BOTTOM, TOP}:
                raise SemitrioError(f"read transition {t} sees an undeclared symbol")
            if t.move not in (-1, 0, 1):
                raise SemitrioError("head moves must be -1, 0 or 1")
            _check_move(self.counters, t.signs, t.effect, f"read {t.source!r} -> {t.target!r}")
        for p, q in self.switches:
            if p not in self.states or q not in self.read_states:
                raise SemitrioError(f"switch {p!r} -> {q!r} must go from a write to a read state")

    @cached_property
    def _write_moves(self) -> dict:
        table: dict = {}
        for t in self.write_transitions:
            table.setdefault((t.source, t.letter, t.signs), []).append(t)
        return table

    @cached_property
    def _read_moves(self) -> dict:
        table: dict = {}
        for t in self.read_transitions:
            table.setdefault((t.source, t.symbol, t.signs), []).append(t)
        return table


def _signs(counters) -> tuple[str, ...]:
    return tuple("z" if c == 0 else "n" for c in counters)


def simulate_rncsa(
    M: Rncsa,
    w,
    counter_bound: int | None = None,
    max_steps: int | None = None,
    stack_bound: int | None = None,
) -> bool:
    """Bounded search for an accepting run; ``True`` is always a real run.

    ``max_steps`` bounds the read-phase moves after each switch, by default
    ``|stack| * (counter_bound + 2)``.
    """
    w = as_word(w)
    unknown = set(w) - set(M.alphabet)
    if unknown:
        raise AlphabetError(f"letters {sorted(unknown)} are not in the alphabet")
    if counter_bound is None:
        counter_bound = 3 * len(w) + 6
    if stack_bound is None:
        stack_bound = 2 * (len(w) + len(M.states)) + 4
    k = M.counters

    def accepting(state, counters):
        return state in M.finals and not any(counters)

    start = (M.initial, 0, (0,) * k, (0,) * k, ())
    seen = {start}
    queue = deque([start])
    frozen = []
    while queue:
        q, i, counters, revs, stack = queue.popleft()
        if i == len(w):
            if accepting(q, counters):
                return True
            frozen.append((q, counters, revs, stack))
        signs = _signs(counters)
        options = [(LAMBDA, i)] + ([(w[i], i + 1)] if i < len(w) else [])
        for a, j in options:
            for t in M._write_moves.get((q, a, signs), ()):
                applied = _apply(counters, revs, t.effect, counter_bound, M.reversals)
                if applied is None or len(stack) + len(t.push) > stack_bound:
                    continue
                conf = (t.target, j, applied[0], applied[1], stack + t.push)
                if conf not in seen:
                    seen.add(conf)
                    queue.append(conf)

    targets: dict = {}
    for p, r in M.switches:
        targets.setdefault(p, []).append(r)
    for q, counters, revs, stack in frozen:
        for r in targets.get(q, ()):
            tape = (BOTTOM,) + stack + (TOP,)
            limit = max_steps if max_steps is not None else max(len(stack), 1) * (counter_bound + 2)
            if _read_phase(M, tape, (r, len(tape) - 1, counters, revs), limit, counter_bound):
                return True
    return False


def _read_phase(M: Rncsa, tape, start, limit: int, counter_bound: int) -> bool:
    seen = {start}
    frontier = [start]
    for _ in range(limit + 1):
        nxt = []
        for r, h, counters, revs in frontier:
            if r in M.finals and not any(counters):
                return True
            for t in M._read_moves.get((r, tape[h], _signs(counters)), ()):
                g = h + t.move
                if not 0 <= g < len(tape):
                    continue
                applied = _apply(counters, revs, t.effect, counter_bound, M.reversals)
                if applied is None:
                    continue
                conf = (t.target, g, applied[0], applied[1])
                if conf not in seen:
                    seen.add(conf)
                    nxt.append(conf)
        if not nxt:
            return False
        frontier = nxt
    return False


def divisibility_witness() -> Rncsa:
    """Accepts ``a^i b^j`` with ``i, j >= 1`` exactly when ``i`` divides ``j``.

    The write phase copies the a's to the stack and counts the b's. The read
    phase sweeps the a's back and forth, decrementing once per cell, and
    accepts when the counter is zero on reaching a marker.
    """
    write = [
        WriteTransition("start", "a", ("z",), "as", ("a",), (0,)),
        WriteTransition("as", "a", ("z",), "as", ("a",), (0,)),
        WriteTransition("as", "b", ("z",), "bs", (), (1,)),
        WriteTransition("bs", "b", ("n",), "bs", (), (1,)),
    ]
    read = [
        ReadTransition("enter", TOP, ("n",), "left", -1, (0,)),
        ReadTransition("left", "a", ("n",), "left", -1, (-1,)),
        ReadTransition("right", "a", ("n",), "right", 1, (-1,)),
        ReadTransition("left", BOTTOM, ("n",), "right", 1, (0,)),
        ReadTransition("right", TOP, ("n",), "left", -1, (0,)),
        ReadTransition("left", BOTTOM, ("z",), "accept", 0, (0,)),
        ReadTransition("right", TOP, ("z",), "accept", 0, (0,)),
    ]
    return Rncsa(
        states=frozenset({"start", "as", "bs"}),
        read_states=frozenset({"enter", "left", "right", "accept"}),
        alphabet=("a", "b"),
        stack_alphabet=("a",),
        counters=1,
        reversals=1,
        write_transitions=frozenset(write),
        read_transitions=frozenset(read),
        switches=frozenset({("bs", "enter")}),
        initial="start",
        finals=frozenset({"accept"}),
    )


__all__ = ["Rncsa", "WriteTransition", "ReadTransition", "simulate_rncsa", "divisibility_witness", "BOTTOM", "TOP"]
