"""Reversal-bounded counter machines, with and without a pushdown.

A machine accepts a word when some run reads all of it, stops in a final
state and has every counter at zero. Transitions test each counter for zero
(``"z"``) or non-zero (``"n"``); the pattern is total over the counters.
Effects are in ``{-1, 0, 1}`` and a decrement needs an ``"n"`` test.

A counter reverses when it switches between non-decreasing and
non-increasing mode; runs with more than ``reversals`` switches on some
counter are not runs of the machine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Hashable, NamedTuple, Sequence

from . import semilinear
from .errors import AlphabetError, SemitrioError
from .pushdown import Npda, npda_to_cfg, parikh_cfg
from .regular import Homomorphism, Nfa, parikh_nfa
from .semilinear import SemilinearSet
from .words import as_word, fresh_letters

State = Hashable
LAMBDA = ""


def expand_signs(pattern: str | Sequence[str]) -> list[tuple[str, ...]]:
    """Expand ``"*"`` wildcards: ``"z*"`` (or ``"z,*"``) gives ``[("z","z"), ("z","n")]``."""
    if isinstance(pattern, str):
        pattern = [p for p in pattern.replace(",", "").replace(" ", "")]
    choices = []
    for p in pattern:
        if p == "*":
            choices.append(("z", "n"))
        elif p in ("z", "n"):
            choices.append((p,))
        else:
            raise SemitrioError(f"sign must be 'z', 'n' or '*', got {p!r}")
    return [tuple(c) for c in product(*choices)]


def _check_move(k: int, signs: tuple, effect: tuple, where: str):
    if len(signs) != k or len(effect) != k:
        raise SemitrioError(f"{where}: sign pattern and effect need {k} entries")
    for s, e in zip(signs, effect):
        if s not in ("z", "n"):
            raise SemitrioError(f"{where}: sign must be 'z' or 'n', got {s!r}")
        if e not in (-1, 0, 1):
            raise SemitrioError(f"{where}: counter effects must be -1, 0 or 1")
        if e == -1 and s == "z":
            raise SemitrioError(f"{where}: a decrement needs a non-zero test")


@dataclass(frozen=True)
class NcmTransition:
    source: State
    letter: str
    signs: tuple[str, ...]
    target: State
    effect: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "effect", tuple(int(e) for e in self.effect))


@dataclass(frozen=True)
class NpcmTransition:
    """Pops ``top``, pushes ``push`` (first symbol ends on top)."""

    source: State
    letter: str
    top: Hashable
    signs: tuple[str, ...]
    target: State
    push: tuple
    effect: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "push", tuple(self.push))
        object.__setattr__(self, "effect", tuple(int(e) for e in self.effect))


def _validate_common(M):
    if M.counters < 0 or M.reversals < 0:
        raise SemitrioError("counter count and reversal bound must be non-negative")
    if len(set(M.alphabet)) != len(M.alphabet) or LAMBDA in M.alphabet:
        raise AlphabetError("alphabet letters must be distinct and non-empty")
    if M.initial not in M.states or not M.finals <= M.states:
        raise SemitrioError("initial and final states must be declared")
    letters = set(M.alphabet)
    for t in M.transitions:
        if t.source not in M.states or t.target not in M.states:
            raise SemitrioError(f"transition {t} uses an undeclared state")
        if t.letter != LAMBDA and t.letter not in letters:
            raise AlphabetError(f"transition reads {t.letter!r} outside the alphabet")
        _check_move(M.counters, t.signs, t.effect, f"transition {t.source!r} -> {t.target!r}")


@dataclass(frozen=True)
class Ncm:
    states: frozenset
    alphabet: tuple[str, ...]
    counters: int
    reversals: int
    transitions: frozenset
    initial: State
    finals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))
        _validate_common(self)

    @cached_property
    def _moves(self) -> dict:
        table: dict = {}
        for t in self.transitions:
            table.setdefault((t.source, t.letter, t.signs), []).append(t)
        return table


@dataclass(frozen=True)
class Npcm:
    states: frozenset
    alphabet: tuple[str, ...]
    stack_alphabet: tuple
    counters: int
    reversals: int
    transitions: frozenset
    initial: State
    initial_stack: Hashable
    finals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "stack_alphabet", tuple(self.stack_alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "finals", frozenset(self.finals))
        _validate_common(self)
        gamma = set(self.stack_alphabet)
        if self.initial_stack not in gamma:
            raise SemitrioError("initial stack symbol must be in the stack alphabet")
        for t in self.transitions:
            if t.top not in gamma or not set(t.push) <= gamma:
                raise SemitrioError(f"transition {t} uses an undeclared stack symbol")

    @cached_property
    def _moves(self) -> dict:
        table: dict = {}
        for t in self.transitions:
            table.setdefault((t.source, t.letter, t.top, t.signs), []).append(t)
        return table


class Configuration(NamedTuple):
    state: State
    position: int
    counters: tuple[int, ...]
    reversals: tuple[int, ...]  # odd count = currently non-increasing
    stack: tuple = ()  # top is the last element


# -- bounded simulation ------------------------------------------------------

def _apply(counters, reversals, effect, bound, limit):
    new_c = []
    new_r = []
    for c, r, e in zip(counters, reversals, effect):
        c += e
        if c > bound:
            return None
        if (e > 0 and r % 2 == 1) or (e < 0 and r % 2 == 0):
            r += 1
            if r > limit:
                return None
        new_c.append(c)
        new_r.append(r)
    return tuple(new_c), tuple(new_r)


def successors(M: Ncm | Npcm, w, conf: Configuration, counter_bound: int, stack_bound: int | None = None):
    """One-step successors of ``conf`` on input ``w`` within the bounds."""
    signs = tuple("z" if c == 0 else "n" for c in conf.counters)
    options = [(LAMBDA, conf.position)]
    if conf.position < len(w):
        options.append((w[conf.position], conf.position + 1))
    pushdown = isinstance(M, Npcm)
    for a, j in options:
        if pushdown:
            if not conf.stack:
                continue
            moves = M._moves.get((conf.state, a, conf.stack[-1], signs), ())
        else:
            moves = M._moves.get((conf.state, a, signs), ())
        for t in moves:
            applied = _apply(conf.counters, conf.reversals, t.effect, counter_bound, M.reversals)
            if applied is None:
                continue
            stack = conf.stack
            if pushdown:
                stack = stack[:-1] + tuple(reversed(t.push))
                if stack_bound is not None and len(stack) > stack_bound:
                    continue
            yield Configuration(t.target, j, applied[0], applied[1], stack)


def simulate(
    M,
    w,
    counter_bound: int | None = None,
    max_steps: int | None = None,
    stack_bound: int | None = None,
) -> bool:
    """Breadth-first search for an accepting run within the bounds.

    ``True`` is always backed by a real run; ``False`` only says none was
    found with counters ``<= counter_bound`` and at most ``max_steps``
    configurations explored.
    """
    if hasattr(M, "read_transitions"):
        from .cstack import simulate_rncsa

        return simulate_rncsa(M, w, counter_bound=counter_bound, max_steps=max_steps)
    w = as_word(w)
    unknown = set(w) - set(M.alphabet)
    if unknown:
        raise AlphabetError(f"letters {sorted(unknown)} are not in the alphabet")
    if counter_bound is None:
        counter_bound = 3 * len(w) + 6
    if max_steps is None:
        # the bounds already make the search finite; this only caps runaway cases
        max_steps = 2_000_000
    pushdown = isinstance(M, Npcm)
    if pushdown and stack_bound is None:
        stack_bound = 2 * (len(w) + len(M.states)) + 4
    k = M.counters
    start = Configuration(M.initial, 0, (0,) * k, (0,) * k, (M.initial_stack,) if pushdown else ())
    seen = {start}
    queue = deque([start])
    while queue:
        conf = queue.popleft()
        if conf.position == len(w) and conf.state in M.finals and not any(conf.counters):
            return True
        for nxt in successors(M, w, conf, counter_bound, stack_bound):
            if nxt not in seen:
                if len(seen) >= max_steps:
                    return False
                seen.add(nxt)
                queue.append(nxt)
    return False


def accepted_words(
    M: Ncm | Npcm,
    max_len: int,
    counter_bound: int | None = None,
    stack_bound: int | None = None,
    max_configs: int = 5_000_000,
) -> set[tuple[str, ...]]:
    """Every word of length ``<= max_len`` with an accepting run inside the bounds.

    One breadth-first search over (configuration, prefix) pairs, so words that
    share a prefix share the work. Same bounds as ``simulate`` for words of
    length ``max_len``.
    """
    if counter_bound is None:
        counter_bound = 3 * max_len + 6
    pushdown = isinstance(M, Npcm)
    if pushdown and stack_bound is None:
        stack_bound = 2 * (max_len + len(M.states)) + 4
    k = M.counters
    letters = M.alphabet
    start = (M.initial, (), (0,) * k, (0,) * k, (M.initial_stack,) if pushdown else ())
    seen = {start}
    queue = deque([start])
    found = set()
    while queue:
        q, word, counters, revs, stack = queue.popleft()
        if q in M.finals and not any(counters):
            found.add(word)
        signs = tuple("z" if c == 0 else "n" for c in counters)
        options = [LAMBDA] + (list(letters) if len(word) < max_len else [])
        for a in options:
            if pushdown:
                if not stack:
                    continue
                moves = M._moves.get((q, a, stack[-1], signs), ())
            else:
                moves = M._moves.get((q, a, signs), ())
            for t in moves:
                applied = _apply(counters, revs, t.effect, counter_bound, M.reversals)
                if applied is None:
                    continue
                new_stack = stack
                if pushdown:
                    new_stack = stack[:-1] + tuple(reversed(t.push))
                    if len(new_stack) > stack_bound:
                        continue
                conf = (t.target, word + (a,) if a else word, applied[0], applied[1], new_stack)
                if conf not in seen:
                    if len(seen) >= max_configs:
                        raise SemitrioError("configuration budget exhausted")
                    seen.add(conf)
                    queue.append(conf)
    return found


# -- reversal normalization --------------------------------------------------

def _sub_patterns(sign: str, width: int, active: int, need: int | None):
    """Sub-counter sign patterns for one original counter.

    Only the first ``active`` sub-counters can be non-zero; ``need`` must be.
    """
    out = []
    for combo in product("zn", repeat=active):
        if sign == "z" and "n" in combo:
            continue
        if sign == "n" and "n" not in combo:
            continue
        if need is not None and combo[need] != "n":
            continue
        out.append(combo + ("z",) * (width - active))
    return out


def normalize_one_reversal(M: Ncm) -> Ncm:
    """Language-equal machine whose counters all make at most one reversal.

    Each counter becomes one sub-counter per non-decreasing phase; the
    original value is their sum. Phase numbers live in the state.
    """
    if M.reversals <= 1:
        return M
    k, l = M.counters, M.reversals
    width = (l + 2) // 2
    by_source: dict = {}
    for t in M.transitions:
        by_source.setdefault(t.source, []).append(t)
    start = (M.initial, (0,) * k)
    seen = {start}
    queue = deque([start])
    out = set()
    while queue:
        q, phases = queue.popleft()
        for t in by_source.get(q, ()):
            per_counter = []
            for j in range(k):
                ph, e = phases[j], t.effect[j]
                active = ph // 2 + 1
                options = []
                if e == 0:
                    for pat in _sub_patterns(t.signs[j], width, active, None):
                        options.append((pat, (0,) * width, ph))
                elif e == 1:
                    nph = ph if ph % 2 == 0 else ph + 1
                    if nph <= l:
                        eff = tuple(1 if u == nph // 2 else 0 for u in range(width))
                        for pat in _sub_patterns(t.signs[j], width, active, None):
                            options.append((pat, eff, nph))
                else:
                    nph = ph if ph % 2 == 1 else ph + 1
                    if nph <= l:
                        for u in range(active):
                            eff = tuple(-1 if v == u else 0 for v in range(width))
                            for pat in _sub_patterns(t.signs[j], width, active, u):
                                options.append((pat, eff, nph))
                per_counter.append(options)
            for choice in product(*per_counter):
                signs = tuple(s for pat, _, _ in choice for s in pat)
                effect = tuple(e for _, eff, _ in choice for e in eff)
                target = (t.target, tuple(nph for _, _, nph in choice))
                out.add(NcmTransition((q, phases), t.letter, signs, target, effect))
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
    finals = {s for s in seen if s[0] in M.finals}
    return Ncm(frozenset(seen), M.alphabet, k * width, 1, frozenset(out), start, frozenset(finals))


# -- letter encodings ----------------------------------------------------------

@dataclass(frozen=True)
class Encoding:
    """Carrier over ``alphabet + counter letters`` with ``pairs[i] = (b_i, c_i)``.

    The encoded language is the eraser's image of the carrier words in which
    every counter letter occurs equally often.
    """

    carrier: Nfa | Npda
    pairs: tuple[tuple[str, str], ...]
    eraser: Homomorphism

    @property
    def counter_letters(self) -> tuple[str, ...]:
        return tuple(x for pair in self.pairs for x in pair)


# counter phases inside the encoding
_IDLE, _UP, _DOWN, _DONE = 0, 1, 2, 3


def _phase_moves(signs, effect, phases, pairs):
    """Options ``(emitted letters, new phases)`` for one move, or none if blocked."""
    per_counter = []
    for j, (s, e) in enumerate(zip(signs, effect)):
        ph = phases[j]
        zero = ph in (_IDLE, _DONE)
        if (s == "z") != zero:
            return []
        if e == 0:
            per_counter.append([((), ph)])
        elif e == 1:
            if ph not in (_IDLE, _UP):
                return []
            per_counter.append([((pairs[j][0],), _UP)])
        else:
            # guess whether this decrement empties the counter
            per_counter.append([((pairs[j][1],), _DOWN), ((pairs[j][1],), _DONE)])
    return [
        (tuple(x for emitted, _ in choice for x in emitted), tuple(ph for _, ph in choice))
        for choice in product(*per_counter)
    ]


def _counter_letters(M) -> tuple[tuple[str, str], ...]:
    bs = fresh_letters("b", M.counters, M.alphabet)
    cs = fresh_letters("c", M.counters, set(M.alphabet) | set(bs))
    return tuple(zip(bs, cs))


def lem0_encode(M: Ncm) -> Encoding:
    """Counter-free carrier automaton for an NCM.

    The automaton emits ``b_i`` for each increment and ``c_i`` for each
    decrement of counter ``i`` and tracks whether each counter is idle,
    rising, falling or emptied again. A decrement guesses whether it is the
    last one, so zero tests are exact once ``b_i`` and ``c_i`` counts agree.
    A preamble ``(b_1 c_1)* ... (b_k c_k)*`` lets every pair reach a common
    count.
    """
    M = normalize_one_reversal(M)
    k = M.counters
    pairs = _counter_letters(M)
    extra = tuple(x for p in pairs for x in p)
    by_source: dict = {}
    for t in M.transitions:
        by_source.setdefault(t.source, []).append(t)
    trans = set()
    states = set()
    for j in range(k):
        pad, mid = ("pad", j), ("pad-mid", j)
        states |= {pad, mid}
        trans |= {(pad, pairs[j][0], mid), (mid, pairs[j][1], pad), (pad, LAMBDA, ("pad", j + 1))}
    start = (M.initial, (_IDLE,) * k)
    states |= {("pad", k), start}
    trans.add((("pad", k), LAMBDA, start))
    queue = deque([start])
    seen = {start}
    chain = 0
    while queue:
        q, phases = queue.popleft()
        for t in by_source.get(q, ()):
            for emitted, nph in _phase_moves(t.signs, t.effect, phases, pairs):
                target = (t.target, nph)
                word = ((t.letter,) if t.letter else ()) + emitted
                cur = (q, phases)
                if not word:
                    trans.add((cur, LAMBDA, target))
                for i, x in enumerate(word):
                    nxt = target if i == len(word) - 1 else ("step", chain, i)
                    states.add(nxt)
                    trans.add((cur, x, nxt))
                    cur = nxt
                chain += 1
                states.add(target)
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
    finals = {(q, ph) for q, ph in seen if q in M.finals and all(p in (_IDLE, _DONE) for p in ph)}
    carrier = Nfa(frozenset(states), M.alphabet + extra, frozenset(trans), ("pad", 0), frozenset(finals))
    return Encoding(carrier, pairs, Homomorphism.eraser(M.alphabet, extra))


def lem0_encode_npcm(M: Npcm) -> Encoding:
    """Counter-free pushdown carrier for an NPCM; same scheme as ``lem0_encode``."""
    if M.reversals > 1:
        raise SemitrioError("pushdown counter machines must already be one-reversal here")
    k = M.counters
    pairs = _counter_letters(M)
    extra = tuple(x for p in pairs for x in p)
    gamma = M.stack_alphabet
    by_source: dict = {}
    for t in M.transitions:
        by_source.setdefault(t.source, []).append(t)
    trans = set()
    states = set()

    def emit(src, letter, dst):
        for x in gamma:
            trans.add((src, letter, x, dst, (x,)))

    for j in range(k):
        pad, mid = ("pad", j), ("pad-mid", j)
        states |= {pad, mid}
        emit(pad, pairs[j][0], mid)
        emit(mid, pairs[j][1], pad)
        emit(pad, LAMBDA, ("pad", j + 1))
    start = (M.initial, (_IDLE,) * k)
    states |= {("pad", k), start}
    emit(("pad", k), LAMBDA, start)
    queue = deque([start])
    seen = {start}
    chain = 0
    while queue:
        q, phases = queue.popleft()
        for t in by_source.get(q, ()):
            for emitted, nph in _phase_moves(t.signs, t.effect, phases, pairs):
                target = (t.target, nph)
                cur = (q, phases)
                if not emitted:
                    trans.add((cur, t.letter, t.top, target, t.push))
                else:
                    nxt = ("step", chain, 0)
                    states.add(nxt)
                    trans.add((cur, t.letter, t.top, nxt, t.push))
                    cur = nxt
                    for i, x in enumerate(emitted):
                        nxt = target if i == len(emitted) - 1 else ("step", chain, i + 1)
                        states.add(nxt)
                        emit(cur, x, nxt)
                        cur = nxt
                chain += 1
                states.add(target)
                if target not in seen:
                    seen.add(target)
                    queue.append(target)
    finals = {(q, ph) for q, ph in seen if q in M.finals and all(p in (_IDLE, _DONE) for p in ph)}
    carrier = Npda(frozenset(states), M.alphabet + extra, gamma, frozenset(trans), ("pad", 0), M.initial_stack, frozenset(finals))
    return Encoding(carrier, pairs, Homomorphism.eraser(M.alphabet, extra))


def normalize_npcm(M: Npcm) -> Npcm:
    """One-reversal form of an NPCM (the counter-splitting of ``normalize_one_reversal``)."""
    if M.reversals <= 1:
        return M
    # reuse the NCM construction on a machine whose "letters" carry the stack move
    tags = {}
    fake = set()
    for t in M.transitions:
        tag = f"#{len(tags)}"
        tags[tag] = t
        fake.add(NcmTransition(t.source, tag, t.signs, t.target, t.effect))
    N = normalize_one_reversal(Ncm(M.states, tuple(tags), M.counters, M.reversals, frozenset(fake), M.initial, M.finals))
    out = set()
    for t in N.transitions:
        orig = tags[t.letter]
        out.add(NpcmTransition(t.source, orig.letter, orig.top, t.signs, t.target, orig.push, t.effect))
    return Npcm(N.states, M.alphabet, M.stack_alphabet, N.counters, 1, frozenset(out), N.initial, M.initial_stack, N.finals)


# -- Parikh images -----------------------------------------------------------

def _constrain_and_project(S: SemilinearSet, n: int, m: int, keep_sigma: bool) -> SemilinearSet:
    """Counter coordinates ``n .. n+m-1`` all equal, then drop them."""
    if m > 1:
        S = semilinear.constrain_pairwise_equal(S, [(n, n + i) for i in range(1, m)])
    keep = list(range(n)) if keep_sigma else [n] if m else []
    if not keep:
        return S
    return semilinear.project(S, keep)


def _image(M, keep_sigma: bool = True) -> SemilinearSet:
    if isinstance(M, Npcm):
        M = normalize_npcm(M)
    else:
        M = normalize_one_reversal(M)
    n = len(M.alphabet)
    if M.counters == 0:
        if isinstance(M, Npcm):
            return parikh_cfg(npda_to_cfg(_strip_counters(M)), M.alphabet)
        return parikh_nfa(_strip_counters(M), M.alphabet)
    if isinstance(M, Npcm):
        enc = lem0_encode_npcm(M)
        letters = (M.alphabet if keep_sigma else ()) + enc.counter_letters
        S = parikh_cfg(npda_to_cfg(enc.carrier), letters)
    else:
        enc = lem0_encode(M)
        letters = (M.alphabet if keep_sigma else ()) + enc.counter_letters
        S = parikh_nfa(enc.carrier, letters)
    return _constrain_and_project(S, n if keep_sigma else 0, len(enc.counter_letters), keep_sigma)


def _strip_counters(M):
    if isinstance(M, Npcm):
        return Npda(M.states, M.alphabet, M.stack_alphabet,
                    frozenset((t.source, t.letter, t.top, t.target, t.push) for t in M.transitions),
                    M.initial, M.initial_stack, M.finals)
    return Nfa(M.states, M.alphabet, frozenset((t.source, t.letter, t.target) for t in M.transitions), M.initial, M.finals)


def parikh_ncm(M: Ncm) -> SemilinearSet:
    """Parikh image of ``L(M)`` over ``M.alphabet``."""
    return _image(M)


def parikh_npcm(M: Npcm) -> SemilinearSet:
    """Parikh image of ``L(M)`` over ``M.alphabet``."""
    return _image(M)


# -- deciders ----------------------------------------------------------------

def decide_emptiness(M: Ncm | Npcm) -> bool:
    """Exact emptiness test; only the counter letters need to be counted."""
    if M.counters == 0:
        stripped = _strip_counters(M)
        if isinstance(stripped, Nfa):
            return stripped.is_empty()
        return not npda_to_cfg(stripped).productions
    return semilinear.is_empty(_image(M, keep_sigma=False))


def decide_infiniteness(M: Ncm | Npcm) -> bool:
    return not semilinear.is_finite(_image(M))


def decide_membership(M: Ncm | Npcm, w) -> bool:
    """Emptiness of the product with the one-word automaton for ``w``."""
    w = as_word(w)
    unknown = set(w) - set(M.alphabet)
    if unknown:
        raise AlphabetError(f"letters {sorted(unknown)} are not in the alphabet")
    A = Nfa.from_word(w, M.alphabet)
    if isinstance(M, Npcm):
        return not decide_emptiness(_product_nfa_npcm(A, M))
    return not decide_emptiness(product_nfa_ncm(A, M))


# -- products ------------------------------------------------------------------

def _same_alphabet(a: Sequence[str], b: Sequence[str]):
    if set(a) != set(b):
        raise AlphabetError(f"alphabets differ: {sorted(a)} vs {sorted(b)}")


def _all_signs(k: int) -> list[tuple[str, ...]]:
    return expand_signs("*" * k)


def product_nfa_ncm(A: Nfa, M: Ncm) -> Ncm:
    """NCM for ``L(A) & L(M)``; lambda moves of either side interleave."""
    _same_alphabet(A.alphabet, M.alphabet)
    k = M.counters
    idle = (0,) * k
    amoves: dict = {}
    for p, a, q in A.transitions:
        amoves.setdefault(p, []).append((a, q))
    mmoves: dict = {}
    for t in M.transitions:
        mmoves.setdefault(t.source, []).append(t)
    start = (A.initial, M.initial)
    seen = {start}
    queue = deque([start])
    out = set()
    while queue:
        p, r = queue.popleft()
        nxt = []
        for a, q in amoves.get(p, ()):
            if a == LAMBDA:
                nxt.extend(NcmTransition((p, r), LAMBDA, s, (q, r), idle) for s in _all_signs(k))
        for t in mmoves.get(r, ()):
            if t.letter == LAMBDA:
                nxt.append(NcmTransition((p, r), LAMBDA, t.signs, (p, t.target), t.effect))
            else:
                nxt.extend(NcmTransition((p, r), t.letter, t.signs, (q, t.target), t.effect)
                           for a, q in amoves.get(p, ()) if a == t.letter)
        for t in nxt:
            out.add(t)
            if t.target not in seen:
                seen.add(t.target)
                queue.append(t.target)
    finals = {(p, r) for p, r in seen if p in A.finals and r in M.finals}
    return Ncm(frozenset(seen), M.alphabet, k, M.reversals, frozenset(out), start, frozenset(finals))


def _product_nfa_npcm(A: Nfa, M: Npcm) -> Npcm:
    _same_alphabet(A.alphabet, M.alphabet)
    k = M.counters
    idle = (0,) * k
    amoves: dict = {}
    for p, a, q in A.transitions:
        amoves.setdefault(p, []).append((a, q))
    mmoves: dict = {}
    for t in M.transitions:
        mmoves.setdefault(t.source, []).append(t)
    start = (A.initial, M.initial)
    seen = {start}
    queue = deque([start])
    out = set()
    while queue:
        p, r = queue.popleft()
        nxt = []
        for a, q in amoves.get(p, ()):
            if a == LAMBDA:
                nxt.extend(NpcmTransition((p, r), LAMBDA, x, s, (q, r), (x,), idle)
                           for x in M.stack_alphabet for s in _all_signs(k))
        for t in mmoves.get(r, ()):
            if t.letter == LAMBDA:
                nxt.append(NpcmTransition((p, r), LAMBDA, t.top, t.signs, (p, t.target), t.push, t.effect))
            else:
                nxt.extend(NpcmTransition((p, r), t.letter, t.top, t.signs, (q, t.target), t.push, t.effect)
                           for a, q in amoves.get(p, ()) if a == t.letter)
        for t in nxt:
            out.add(t)
            if t.target not in seen:
                seen.add(t.target)
                queue.append(t.target)
    finals = {(p, r) for p, r in seen if p in A.finals and r in M.finals}
    return Npcm(frozenset(seen), M.alphabet, M.stack_alphabet, k, M.reversals, frozenset(out), start,
                M.initial_stack, frozenset(finals))


def product_npda_ncm(P: Npda, M: Ncm) -> Npcm:
    """NPCM for ``L(P) & L(M)``: the pushdown of ``P`` with the counters of ``M``."""
    _same_alphabet(P.alphabet, M.alphabet)
    k = M.counters
    idle = (0,) * k
    pmoves: dict = {}
    for p, a, x, q, push in P.transitions:
        pmoves.setdefault(p, []).append((a, x, q, push))
    mmoves: dict = {}
    for t in M.transitions:
        mmoves.setdefault(t.source, []).append(t)
    start = (P.initial, M.initial)
    seen = {start}
    queue = deque([start])
    out = set()
    while queue:
        p, r = queue.popleft()
        nxt = []
        for a, x, q, push in pmoves.get(p, ()):
            if a == LAMBDA:
                nxt.extend(NpcmTransition((p, r), LAMBDA, x, s, (q, r), push, idle) for s in _all_signs(k))
            else:
                nxt.extend(NpcmTransition((p, r), a, x, t.signs, (q, t.target), push, t.effect)
                           for t in mmoves.get(r, ()) if t.letter == a)
        for t in mmoves.get(r, ()):
            if t.letter == LAMBDA:
                nxt.extend(NpcmTransition((p, r), LAMBDA, x, t.signs, (p, t.target), (x,), t.effect)
                           for x in P.stack_alphabet)
        for t in nxt:
            out.add(t)
            if t.target not in seen:
                seen.add(t.target)
                queue.append(t.target)
    finals = {(p, r) for p, r in seen if p in P.finals and r in M.finals}
    return Npcm(frozenset(seen), M.alphabet, P.stack_alphabet, k, M.reversals, frozenset(out), start,
                P.initial_stack, frozenset(finals))


def product_ncm_ncm(M1: Ncm, M2: Ncm) -> Ncm:
    """NCM for ``L(M1) & L(M2)`` with the counters of both side by side.

    Operands with different reversal bounds are first brought to one reversal.
    """
    _same_alphabet(M1.alphabet, M2.alphabet)
    if M1.reversals != M2.reversals:
        M1, M2 = normalize_one_reversal(M1), normalize_one_reversal(M2)
    k1, k2 = M1.counters, M2.counters
    moves1: dict = {}
    for t in M1.transitions:
        moves1.setdefault(t.source, []).append(t)
    moves2: dict = {}
    for t in M2.transitions:
        moves2.setdefault(t.source, []).append(t)
    start = (M1.initial, M2.initial)
    seen = {start}
    queue = deque([start])
    out = set()
    while queue:
        p, r = queue.popleft()
        nxt = []
        for t in moves1.get(p, ()):
            if t.letter == LAMBDA:
                nxt.extend(NcmTransition((p, r), LAMBDA, t.signs + s, (t.target, r), t.effect + (0,) * k2)
                           for s in _all_signs(k2))
            else:
                nxt.extend(NcmTransition((p, r), t.letter, t.signs + u.signs, (t.target, u.target), t.effect + u.effect)
                           for u in moves2.get(r, ()) if u.letter == t.letter)
        for u in moves2.get(r, ()):
            if u.letter == LAMBDA:
                nxt.extend(NcmTransition((p, r), LAMBDA, s + u.signs, (p, u.target), (0,) * k1 + u.effect)
                           for s in _all_signs(k1))
        for t in nxt:
            out.add(t)
            if t.target not in seen:
                seen.add(t.target)
                queue.append(t.target)
    finals = {(p, r) for p, r in seen if p in M1.finals and r in M2.finals}
    return Ncm(frozenset(seen), M1.alphabet, k1 + k2, max(M1.reversals, M2.reversals), frozenset(out), start,
               frozenset(finals))


__all__ = [
    "NcmTransition", "NpcmTransition", "Ncm", "Npcm", "Configuration", "Encoding",
    "expand_signs", "simulate", "successors", "accepted_words", "normalize_one_reversal", "normalize_npcm",
    "lem0_encode", "lem0_encode_npcm", "parikh_ncm", "parikh_npcm",
    "decide_emptiness", "decide_infiniteness", "decide_membership",
    "product_nfa_ncm", "product_npda_ncm", "product_ncm_ncm",
]
