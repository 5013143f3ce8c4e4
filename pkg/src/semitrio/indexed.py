"""Indexed grammars, optionally with monotone counters.

A production has one of three shapes:

* ``A -> nu``        (``push`` and ``pop`` unset), every nonterminal of ``nu``
  inherits ``A``'s index word;
* ``A -> B f``       (``push = f``), ``body == (B,)``;
* ``A f -> nu``      (``pop = f``), the rest of the index word is inherited.

Index words are tuples with the top (most recently pushed) index first. With
``counters = k`` each production adds a vector of ``k`` non-negative
increments, and a terminal word is generated only when all ``k`` counters
end up equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from . import semilinear
from .counter import Ncm, NcmTransition, Npcm, NpcmTransition, expand_signs, lem0_encode, lem0_encode_npcm, normalize_npcm
from .errors import AlphabetError, MalformedFormError, NotRightLinearError, SemitrioError
from .pushdown import npda_to_cfg, parikh_cfg
from .regular import Homomorphism, Nfa
from .semilinear import SemilinearSet
from .words import Word, as_word, fresh_letters

Symbol = Hashable
LAMBDA = ""


@dataclass(frozen=True)
class Production:
    head: Symbol
    body: tuple
    push: Hashable | None = None
    pop: Hashable | None = None
    increments: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        object.__setattr__(self, "increments", tuple(int(c) for c in self.increments))

    @property
    def shape(self) -> int:
        if self.push is not None:
            return 2
        if self.pop is not None:
            return 3
        return 1

    def __repr__(self):
        head = f"{self.head}{self.pop}" if self.pop is not None else f"{self.head}"
        body = " ".join(map(str, self.body)) or "λ"
        if self.push is not None:
            body += f" {self.push}"
        inc = f" {list(self.increments)}" if self.increments else ""
        return f"{head} -> {body}{inc}"


@dataclass(frozen=True)
class IndexedGrammar:
    nonterminals: frozenset
    terminals: tuple[str, ...]
    indices: frozenset
    productions: tuple[Production, ...]
    start: Symbol
    counters: int = 0

    def __post_init__(self):
        object.__setattr__(self, "nonterminals", frozenset(self.nonterminals))
        object.__setattr__(self, "terminals", tuple(self.terminals))
        object.__setattr__(self, "indices", frozenset(self.indices))
        object.__setattr__(self, "productions", tuple(dict.fromkeys(self.productions)))
        V, T, I = self.nonterminals, set(self.terminals), self.indices
        if V & T or V & I or T & I:
            raise SemitrioError("nonterminals, terminals and indices must be pairwise disjoint")
        if LAMBDA in T:
            raise AlphabetError("the empty string cannot be a terminal")
        if self.start not in V:
            raise SemitrioError(f"start symbol {self.start!r} is not a nonterminal")
        if self.counters < 0:
            raise SemitrioError("counter count must be non-negative")
        for p in self.productions:
            if p.head not in V:
                raise SemitrioError(f"{p!r}: head is not a nonterminal")
            if p.push is not None and p.pop is not None:
                raise SemitrioError(f"{p!r}: a production cannot both push and pop")
            if p.push is not None and (len(p.body) != 1 or p.body[0] not in V):
                raise SemitrioError(f"{p!r}: a pushing production has exactly one nonterminal as body")
            for f in (p.push, p.pop):
                if f is not None and f not in I:
                    raise SemitrioError(f"{p!r}: {f!r} is not an index")
            for s in p.body:
                if s not in V and s not in T:
                    raise SemitrioError(f"{p!r}: undeclared symbol {s!r}")
            if len(p.increments) != self.counters or any(c < 0 for c in p.increments):
                raise SemitrioError(f"{p!r}: needs {self.counters} non-negative increments")

    @cached_property
    def by_head(self) -> dict:
        table: dict = {}
        for p in self.productions:
            table.setdefault(p.head, []).append(p)
        return table

    @cached_property
    def _terminal_set(self) -> frozenset:
        return frozenset(self.terminals)

    def underlying(self) -> "IndexedGrammar":
        """The same grammar with the counters removed."""
        prods = tuple(Production(p.head, p.body, p.push, p.pop, ()) for p in self.productions)
        return IndexedGrammar(self.nonterminals, self.terminals, self.indices, prods, self.start, 0)


# counter grammars are indexed grammars with counters > 0
CounterIndexedGrammar = IndexedGrammar


def production(head, body=(), push=None, pop=None, increments=()) -> Production:
    """Helper accepting a body string of one-character symbols."""
    return Production(head, tuple(body), push, pop, tuple(increments))


def grammar(productions: Sequence[Production], start, terminals: Iterable[str], counters: int = 0) -> IndexedGrammar:
    """Build a grammar, reading nonterminals and indices off the productions."""
    terminals = tuple(terminals)
    tset = set(terminals)
    nts = {start} | {p.head for p in productions}
    nts |= {s for p in productions for s in p.body if s not in tset}
    idx = {f for p in productions for f in (p.push, p.pop) if f is not None}
    return IndexedGrammar(frozenset(nts), terminals, frozenset(idx), tuple(productions), start, counters)


# -- sentential forms and single steps ------------------------------------------

@dataclass(frozen=True)
class SententialForm:
    """Items are terminals (strings) or ``(nonterminal, index word)`` pairs."""

    items: tuple
    counters: tuple[int, ...] = ()

    @property
    def nonterminal_count(self) -> int:
        return sum(1 for x in self.items if not isinstance(x, str))

    def is_terminal(self) -> bool:
        return all(isinstance(x, str) for x in self.items)

    def word(self) -> Word:
        return tuple(x for x in self.items if isinstance(x, str))

    def __repr__(self):
        parts = []
        for x in self.items:
            parts.append(x if isinstance(x, str) else f"{x[0]}[{''.join(map(str, x[1]))}]")
        return f"({' '.join(parts) or 'λ'}, {list(self.counters)})"


def initial_form(G: IndexedGrammar) -> SententialForm:
    return SententialForm(((G.start, ()),), (0,) * G.counters)


def _check_form(G: IndexedGrammar, form: SententialForm):
    if len(form.counters) != G.counters:
        raise MalformedFormError(f"form has {len(form.counters)} counters, grammar has {G.counters}")
    for x in form.items:
        if isinstance(x, str):
            if x not in G._terminal_set:
                raise MalformedFormError(f"{x!r} is not a terminal")
        elif not (isinstance(x, tuple) and len(x) == 2 and x[0] in G.nonterminals
                  and isinstance(x[1], tuple) and all(f in G.indices for f in x[1])):
            raise MalformedFormError(f"{x!r} is not a (nonterminal, index word) pair")


def _expand(G: IndexedGrammar, p: Production, index: tuple):
    """Items replacing ``(p.head, index)``, or ``None`` if ``p`` does not apply."""
    if p.push is not None:
        return ((p.body[0], (p.push,) + index),)
    if p.pop is not None:
        if not index or index[0] != p.pop:
            return None
        index = index[1:]
    return tuple(s if s in G._terminal_set else (s, index) for s in p.body)


def _add(counters, inc):
    return tuple(c + d for c, d in zip(counters, inc)) if inc else counters


def derive(G: IndexedGrammar, form: SententialForm) -> set[SententialForm]:
    """All one-step successors of ``form``, rewriting at any position."""
    _check_form(G, form)
    out = set()
    for i, x in enumerate(form.items):
        if isinstance(x, str):
            continue
        A, index = x
        for p in G.by_head.get(A, ()):
            new = _expand(G, p, index)
            if new is not None:
                out.add(SententialForm(form.items[:i] + new + form.items[i + 1:], _add(form.counters, p.increments)))
    return out


# -- bounded enumeration ---------------------------------------------------------

def _min_yields(G: IndexedGrammar) -> dict:
    """Fewest terminals any derivation from each nonterminal can produce, ignoring indices."""
    inf = float("inf")
    best = {A: inf for A in G.nonterminals}
    changed = True
    while changed:
        changed = False
        for p in G.productions:
            y = sum(0 if s in G._terminal_set else best[s] for s in p.body) + sum(1 for s in p.body if s in G._terminal_set)
            if y < best[p.head]:
                best[p.head] = y
                changed = True
    return best


def _reach(G: IndexedGrammar) -> dict:
    succ = {A: {s for p in G.by_head.get(A, ()) for s in p.body if s in G.nonterminals} for A in G.nonterminals}
    reach = {}
    for A in G.nonterminals:
        seen = {A}
        stack = [A]
        while stack:
            for B in succ[stack.pop()]:
                if B not in seen:
                    seen.add(B)
                    stack.append(B)
        reach[A] = frozenset(seen)
    return reach


class _PairBounds:
    """How fast the difference of two counters can still move.

    For a set of nonterminals, a pair ``(i, j)`` is bounded when no reachable
    production changes ``n_i - n_j`` without also emitting terminals; then the
    difference moves by at most ``rate`` per future terminal.
    """

    def __init__(self, G: IndexedGrammar):
        self.G = G
        self.reach = _reach(G)
        k = G.counters
        self.pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
        self.per_head: dict = {}
        for A in G.nonterminals:
            free, rate = set(), {}
            for B in self.reach[A]:
                for p in G.by_head.get(B, ()):
                    t = sum(1 for s in p.body if s in G._terminal_set)
                    for i, j in self.pairs:
                        d = abs(p.increments[i] - p.increments[j])
                        if not d:
                            continue
                        if t == 0:
                            free.add((i, j))
                        else:
                            rate[(i, j)] = max(rate.get((i, j), 0), d / t)
            self.per_head[A] = (free, rate)
        self.cache: dict = {}

    def bounds(self, heads: frozenset) -> list:
        if heads not in self.cache:
            free, rate = set(), {}
            for A in heads:
                f, r = self.per_head[A]
                free |= f
                for pair, x in r.items():
                    rate[pair] = max(rate.get(pair, 0), x)
            self.cache[heads] = [(i, j, rate.get((i, j), 0)) for i, j in self.pairs if (i, j) not in free]
        return self.cache[heads]


@dataclass
class Exploration:
    words: set
    exhausted: bool  # True when no branch was cut at all
    width: int  # most nonterminals seen in one explored form
    forms: int = 0
    complete: bool = True  # True when only the length bound cut branches: words is all of L up to max_len


def explore(G: IndexedGrammar, max_len: int, max_steps: int) -> Exploration:
    """Leftmost breadth-first derivation search.

    Forms are deduplicated on their items plus the counter differences (only
    equality of the final counters matters). Branches are cut when the
    terminals they must produce exceed ``max_len`` or when the counters can no
    longer meet within the remaining steps and terminals.
    """
    if max_len < 0 or max_steps < 0:
        raise SemitrioError("bounds must be non-negative")
    least = _min_yields(G)
    pair_bounds = _PairBounds(G) if G.counters > 1 else None
    top_inc = max((max(p.increments) for p in G.productions if p.increments), default=0)
    start = initial_form(G)
    k = G.counters

    def key(form):
        low = min(form.counters) if k else 0
        return form.items, tuple(c - low for c in form.counters)

    seen = {key(start)}
    frontier = [start]
    words: set = set()
    exhausted = True
    complete = True
    width = 1
    count = 1
    for depth in range(max_steps + 1):
        nxt = []
        for form in frontier:
            i = next((j for j, x in enumerate(form.items) if not isinstance(x, str)), None)
            if i is None:
                if k == 0 or len(set(form.counters)) == 1:
                    words.add(form.word())
                continue
            if depth == max_steps:
                exhausted = complete = False
                continue
            A, index = form.items[i]
            for p in G.by_head.get(A, ()):
                new = _expand(G, p, index)
                if new is None:
                    continue
                items = form.items[:i] + new + form.items[i + 1:]
                need = sum(1 if isinstance(x, str) else least[x[0]] for x in items)
                if need > max_len:
                    if need != float("inf"):
                        exhausted = False
                    continue
                counters = _add(form.counters, p.increments)
                stuck = k > 1 and _counters_stuck(items, counters, max_len, max_steps - depth - 1, top_inc, pair_bounds)
                if stuck:
                    exhausted = False
                    complete = complete and stuck == "length"
                    continue
                child = SententialForm(items, counters)
                kk = key(child)
                if kk in seen:
                    continue
                seen.add(kk)
                count += 1
                width = max(width, child.nonterminal_count)
                nxt.append(child)
        frontier = nxt
        if not frontier:
            break
    return Exploration(words, exhausted, width, count, complete)


def _counters_stuck(items, counters, max_len, steps_left, top_inc, pair_bounds) -> str | None:
    """Which bound, if any, provably keeps the counters from ending up equal."""
    gap = max(counters) - min(counters)
    if not gap:
        return None
    if gap > steps_left * top_inc:
        return "steps"
    heads = frozenset(x[0] for x in items if not isinstance(x, str))
    budget = max_len - sum(1 for x in items if isinstance(x, str))
    for i, j, rate in pair_bounds.bounds(heads):
        if abs(counters[i] - counters[j]) > rate * budget:
            return "length"
    return None


def enumerate_language(G: IndexedGrammar, max_len: int, max_steps: int) -> set[Word]:
    """Terminal words of length ``<= max_len`` derivable within ``max_steps`` steps
    whose final counters are all equal."""
    return explore(G, max_len, max_steps).words


# -- classification ----------------------------------------------------------------

@dataclass(frozen=True)
class GrammarClass:
    linear: bool
    right_linear: bool
    width: int  # observed, not proven


def _is_linear(G: IndexedGrammar) -> bool:
    return all(sum(1 for s in p.body if s in G.nonterminals) <= 1 for p in G.productions)


def _is_right_linear(G: IndexedGrammar) -> bool:
    if not _is_linear(G):
        return False
    for p in G.productions:
        if p.body and p.body[-1] in G.nonterminals:
            continue
        if any(s in G.nonterminals for s in p.body):
            return False
    return True


def classify(G: IndexedGrammar, max_len: int = 6, max_steps: int = 12) -> GrammarClass:
    return GrammarClass(_is_linear(G), _is_right_linear(G), explore(G, max_len, max_steps).width)


# -- intersection with regular languages -------------------------------------------

def _split_bodies(G: IndexedGrammar) -> IndexedGrammar:
    """Equivalent grammar whose bodies are λ, a, Y, aY, Ya or YZ."""
    prods = []
    nts = set(G.nonterminals)
    zero = (0,) * G.counters
    fresh = 0

    def short(body):
        return len(body) <= 1 or (len(body) == 2 and (body[0] in nts or body[1] in nts))

    for p in G.productions:
        body, head, pop, inc = p.body, p.head, p.pop, p.increments
        if p.push is not None:
            prods.append(p)
            continue
        while not short(body):
            x = ("split", fresh)
            fresh += 1
            nts.add(x)
            rest = body[1:]
            prods.append(Production(head, (body[0], x), None, pop, inc))
            head, pop, inc, body = x, None, zero, rest
        prods.append(Production(head, body, None, pop, inc))
    return IndexedGrammar(frozenset(nts), G.terminals, G.indices, tuple(prods), G.start, G.counters)


def _weighted_intersection(G: IndexedGrammar, A: Nfa, weights: dict[str, int]) -> IndexedGrammar:
    """Triple construction against ``A``; letters in ``weights`` are not terminals
    but bump the counter with that number (after ``G``'s own counters)."""
    G = _split_bodies(G)
    extra = len(set(weights.values()))
    k = G.counters + extra
    terminals = set(G.terminals)
    letter_edges: dict = {}
    free_out: dict = {}
    free_in: dict = {}
    for p, a, q in A.transitions:
        if a == LAMBDA or a in weights:
            inc = [0] * k
            if a != LAMBDA:
                inc[G.counters + weights[a]] += 1
            free_out.setdefault(p, []).append((q, tuple(inc)))
            free_in.setdefault(q, []).append((p, tuple(inc)))
        else:
            letter_edges.setdefault(a, []).append((p, q))
    pad = (0,) * extra
    states = sorted(A.states, key=repr)
    start = ("start",)
    prods = [Production(start, ((A.initial, G.start, f),), None, None, (0,) * k) for f in A.finals]
    seen = {(A.initial, G.start, f) for f in A.finals}
    queue = deque(seen)
    nts = {start}

    def want(x):
        if x not in seen:
            seen.add(x)
            queue.append(x)
        return x

    while queue:
        triple = queue.popleft()
        nts.add(triple)
        p, X, q = triple
        for r, inc in free_out.get(p, ()):
            prods.append(Production(triple, (want((r, X, q)),), None, None, inc))
        for r, inc in free_in.get(q, ()):
            prods.append(Production(triple, (want((p, X, r)),), None, None, inc))
        for pr in G.by_head.get(X, ()):
            inc = pr.increments + pad
            body = pr.body
            if pr.push is not None:
                prods.append(Production(triple, (want((p, body[0], q)),), pr.push, None, inc))
                continue
            kinds = tuple(s in terminals for s in body)
            bodies = []
            if not body:
                if p == q:
                    bodies.append(())
            elif kinds == (True,):
                if (p, q) in letter_edges.get(body[0], ()):
                    bodies.append(body)
            elif kinds == (False,):
                bodies.append(((p, body[0], q),))
            elif kinds == (True, False):
                bodies += [(body[0], (r, body[1], q)) for s, r in letter_edges.get(body[0], ()) if s == p]
            elif kinds == (False, True):
                bodies += [((p, body[0], r), body[1]) for r, s in letter_edges.get(body[1], ()) if s == q]
            else:
                bodies += [((p, body[0], r), (r, body[1], q)) for r in states]
            for b in bodies:
                for s in b:
                    if not isinstance(s, str):
                        want(s)
                prods.append(Production(triple, b, None, pr.pop, inc))
    result = IndexedGrammar(frozenset(nts), G.terminals, G.indices, tuple(prods), start, k)
    return _trim(result)


def _trim(G: IndexedGrammar) -> IndexedGrammar:
    """Drop nonterminals that are unproductive (ignoring indices) or unreachable."""
    live: set = set()
    changed = True
    while changed:
        changed = False
        for p in G.productions:
            if p.head not in live and all(s in G._terminal_set or s in live for s in p.body):
                live.add(p.head)
                changed = True
    prods = [p for p in G.productions if p.head in live and all(s in G._terminal_set or s in live for s in p.body)]
    heads: dict = {}
    for p in prods:
        heads.setdefault(p.head, []).append(p)
    reach = {G.start}
    queue = deque(reach)
    while queue:
        x = queue.popleft()
        for p in heads.get(x, ()):
            for s in p.body:
                if s not in G._terminal_set and s not in reach:
                    reach.add(s)
                    queue.append(s)
    prods = tuple(p for p in prods if p.head in reach)
    idx = frozenset(f for p in prods for f in (p.push, p.pop) if f is not None) | G.indices
    return IndexedGrammar(frozenset(reach), G.terminals, idx, prods, G.start, G.counters)


def intersect_with_nfa(G: IndexedGrammar, A: Nfa) -> IndexedGrammar:
    """Grammar for ``L(G) & L(A)``; nonterminal ``(p, X, q)`` derives the words of
    ``X`` that drive ``A`` from ``p`` to ``q``. Counters are carried unchanged."""
    if set(G.terminals) != set(A.alphabet):
        raise AlphabetError(f"alphabets differ: {sorted(G.terminals)} vs {sorted(A.alphabet)}")
    return _weighted_intersection(G, A, {})


# -- counters from machines and back ---------------------------------------------

def lem1_product(G: IndexedGrammar, M: Ncm) -> IndexedGrammar:
    """Counter grammar for ``L(G) & L(M)``.

    ``M``'s counter letters are read off the carrier automaton of its letter
    encoding and turned into increments; a preamble loop raises ``G``'s own
    counters together so both groups can meet at a common value.
    """
    if set(G.terminals) != set(M.alphabet):
        raise AlphabetError(f"alphabets differ: {sorted(G.terminals)} vs {sorted(M.alphabet)}")
    enc = lem0_encode(M)
    weights = {x: i for i, x in enumerate(enc.counter_letters)}
    H = _weighted_intersection(G, enc.carrier, weights)
    if G.counters and weights:
        top = ("padded",)
        inc_g = (1,) * G.counters + (0,) * len(weights)
        zero = (0,) * H.counters
        prods = H.productions + (
            Production(top, (top,), None, None, inc_g),
            Production(top, (H.start,), None, None, zero),
        )
        H = IndexedGrammar(H.nonterminals | {top}, H.terminals, H.indices, prods, top, H.counters)
    return H


def equal_counts_ncm(alphabet: Sequence[str], letters: Sequence[str]) -> Ncm:
    """NCM for the words over ``alphabet`` using each of ``letters`` equally often."""
    alphabet, letters = tuple(alphabet), tuple(letters)
    k = len(letters)
    anything = expand_signs("*" * k)
    if k <= 1:
        # nothing to compare
        t = [NcmTransition("read", x, s, "read", (0,) * k) for x in alphabet for s in anything]
        return Ncm(frozenset({"read"}), alphabet, k, k, frozenset(t), "read", frozenset({"read"}))
    t = []
    for x in alphabet:
        effect = tuple(1 if x == c else 0 for c in letters)
        t += [NcmTransition("read", x, s, "read", effect) for s in anything]
    t += [NcmTransition("read", LAMBDA, s, "drain", (0,) * k) for s in anything]
    t.append(NcmTransition("drain", LAMBDA, ("n",) * k, "drain", (-1,) * k))
    return Ncm(frozenset({"read", "drain"}), alphabet, k, 1, frozenset(t), "read", frozenset({"drain"}))


@dataclass(frozen=True)
class Split:
    grammar: IndexedGrammar
    machine: Ncm
    eraser: Homomorphism


def lem2_split(G: IndexedGrammar) -> Split:
    """``L(G) = h(L(G1) & L(M))``: increments become counter letters on the left
    of each body, ``M`` checks the letters occur equally often, ``h`` erases them."""
    if G.counters == 0:
        return Split(G, equal_counts_ncm(G.terminals, ()), Homomorphism.identity(G.terminals))
    letters = tuple(fresh_letters("c", G.counters, set(G.terminals) | {str(x) for x in G.nonterminals | G.indices}))
    prods = []
    nts = set(G.nonterminals)
    for n, p in enumerate(G.productions):
        lead = tuple(c for c, d in zip(letters, p.increments) for _ in range(d))
        if p.push is not None and lead:
            mid = ("emit", n)
            nts.add(mid)
            prods.append(Production(p.head, lead + (mid,)))
            prods.append(Production(mid, p.body, p.push))
        else:
            prods.append(Production(p.head, lead + p.body, p.push, p.pop))
    G1 = IndexedGrammar(frozenset(nts), G.terminals + letters, G.indices, tuple(prods), G.start, 0)
    M = equal_counts_ncm(G.terminals + letters, letters)
    return Split(G1, M, Homomorphism.eraser(G.terminals, letters))


def _require_right_linear(G: IndexedGrammar):
    if not _is_right_linear(G):
        raise NotRightLinearError("the grammar is not right-linear")


def rli_counter_to_npcm(G: IndexedGrammar) -> Npcm:
    """NPCM for a right-linear counter grammar.

    The state is the current nonterminal and the pushdown holds its index
    word above a bottom marker. Increments are applied one unit per lambda
    step; at the end all counters are emptied together, so they must agree.
    """
    _require_right_linear(G)
    k = G.counters
    bottom = ("bottom",)
    gamma = tuple(sorted(G.indices, key=repr)) + (bottom,)
    end, drain = ("end",), ("drain",)
    any_signs = expand_signs("*" * k)
    trans = set()
    states = {("nt", A) for A in G.nonterminals} | {end, drain}

    def keep(src, letter, dst, effect):
        for x in gamma:
            for s in any_signs:
                trans.add(NpcmTransition(src, letter, x, s, dst, (x,), effect))

    for n, p in enumerate(G.productions):
        src = ("nt", p.head)
        body = p.body
        target = ("nt", body[-1]) if body and body[-1] in G.nonterminals else end
        letters = [s for s in body if s in G._terminal_set]
        units = []
        for j, d in enumerate(p.increments):
            units += [tuple(1 if i == j else 0 for i in range(k))] * d
        steps = [(a, (0,) * k) for a in letters] + [(LAMBDA, u) for u in units]
        # first step carries the stack operation
        first = ("step", n, 0) if steps else target
        states.add(first)
        if p.push is not None:
            for x in gamma:
                for s in any_signs:
                    trans.add(NpcmTransition(src, LAMBDA, x, s, first, (p.push, x), (0,) * k))
        elif p.pop is not None:
            for s in any_signs:
                trans.add(NpcmTransition(src, LAMBDA, p.pop, s, first, (), (0,) * k))
        else:
            keep(src, LAMBDA, first, (0,) * k)
        cur = first
        for i, (a, eff) in enumerate(steps):
            nxt = target if i == len(steps) - 1 else ("step", n, i + 1)
            states.add(nxt)
            keep(cur, a, nxt, eff)
            cur = nxt
    if k:
        keep(end, LAMBDA, drain, (0,) * k)
        for x in gamma:
            trans.add(NpcmTransition(drain, LAMBDA, x, ("n",) * k, drain, (x,), (-1,) * k))
        finals = {drain}
    else:
        finals = {end}
    return Npcm(frozenset(states), G.terminals, gamma, k, 1 if k else 0, frozenset(trans),
                ("nt", G.start), bottom, frozenset(finals))


def npcm_to_rli_counter(M: Npcm) -> IndexedGrammar:
    """Right-linear counter grammar for an NPCM.

    The pushdown carrier of the letter encoding is read as a grammar: states
    become nonterminals, the stack becomes the index word, and counter letters
    become increments.
    """
    M = normalize_npcm(M)
    enc = lem0_encode_npcm(M)
    P = enc.carrier
    weights = {x: i for i, x in enumerate(enc.counter_letters)}
    k = len(weights)
    terminals = tuple(M.alphabet)
    taken = set(terminals)
    index_name = {}
    for x in P.stack_alphabet:
        name = str(x)
        while name in taken:
            name = "_" + name
        taken.add(name)
        index_name[x] = name
    nt = {}

    def N(q):
        if q not in nt:
            nt[q] = ("q", len(nt))
        return nt[q]

    start = ("q", "start")
    zero = (0,) * k
    prods = [Production(start, (N(P.initial),), index_name[P.initial_stack], None, zero)]
    for n, (p, a, x, q, push) in enumerate(sorted(P.transitions, key=repr)):
        inc = [0] * k
        lead: tuple = ()
        if a in weights:
            inc[weights[a]] = 1
        elif a != LAMBDA:
            lead = (a,)
        # pop x while emitting, then push the new word one index at a time (last symbol first)
        cur = N(q) if not push else ("push", n, len(push))
        prods.append(Production(N(p), lead + (cur,), None, index_name[x], tuple(inc)))
        for i in range(len(push), 0, -1):
            nxt = N(q) if i == 1 else ("push", n, i - 1)
            prods.append(Production(cur, (nxt,), index_name[push[i - 1]], None, zero))
            cur = nxt
    for f in P.finals:
        prods.append(Production(N(f), (), None, None, zero))
    nts = {start} | {p.head for p in prods} | {s for p in prods for s in p.body if s not in taken}
    G = IndexedGrammar(frozenset(nts), terminals, frozenset(index_name.values()), tuple(prods), start, k)
    return _trim(G)


# -- deciders ------------------------------------------------------------------------

def parikh_rli(G: IndexedGrammar) -> SemilinearSet:
    """Parikh image of a right-linear counter grammar over its terminals.

    Increments become counter letters, the counter-free grammar is run as a
    pushdown automaton, and the counter-letter coordinates are forced equal
    and dropped.
    """
    _require_right_linear(G)
    split = lem2_split(G)
    n = len(G.terminals)
    letters = split.grammar.terminals
    P = rli_counter_to_npcm(split.grammar)
    S = parikh_cfg(npda_to_cfg(_as_npda(P)), letters)
    if G.counters > 1:
        S = semilinear.constrain_pairwise_equal(S, [(n, n + i) for i in range(1, G.counters)])
    return semilinear.project(S, list(range(n)))


def _as_npda(P: Npcm):
    from .pushdown import Npda

    return Npda(P.states, P.alphabet, P.stack_alphabet,
                frozenset((t.source, t.letter, t.top, t.target, t.push) for t in P.transitions),
                P.initial, P.initial_stack, P.finals)


def decide_emptiness_rli(G: IndexedGrammar) -> bool:
    """Exact emptiness for right-linear counter grammars."""
    _require_right_linear(G)
    split = lem2_split(G)
    P = _as_npda(rli_counter_to_npcm(split.grammar))
    cfg = npda_to_cfg(P)
    if not cfg.productions:
        return True
    if G.counters <= 1:
        return False
    letters = split.grammar.terminals[len(G.terminals):]
    S = parikh_cfg(cfg, letters)
    S = semilinear.constrain_pairwise_equal(S, [(0, i) for i in range(1, G.counters)])
    return semilinear.is_empty(S)


def decide_membership_rli(G: IndexedGrammar, w) -> bool:
    w = as_word(w)
    unknown = set(w) - set(G.terminals)
    if unknown:
        raise AlphabetError(f"letters {sorted(unknown)} are not terminals")
    return not decide_emptiness_rli(intersect_with_nfa(G, Nfa.from_word(w, G.terminals)))


def decide_infiniteness_rli(G: IndexedGrammar) -> bool:
    return not semilinear.is_finite(parikh_rli(G))


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "nonempty", "empty" or "unknown"
    witness: Word | None = None


def semi_decide_emptiness(G: IndexedGrammar, max_len: int = 8, max_steps: int = 30) -> Verdict:
    """Bounded search; "empty" only when the search finished without cutting any branch."""
    ex = explore(G, max_len, max_steps)
    if ex.words:
        return Verdict("nonempty", min(ex.words, key=lambda w: (len(w), w)))
    if ex.exhausted:
        return Verdict("empty")
    return Verdict("unknown")


__all__ = [
    "Production", "IndexedGrammar", "CounterIndexedGrammar", "SententialForm", "GrammarClass",
    "Exploration", "Split", "Verdict", "production", "grammar", "initial_form", "derive", "explore",
    "enumerate_language", "classify", "intersect_with_nfa", "lem1_product", "lem2_split",
    "equal_counts_ncm", "rli_counter_to_npcm", "npcm_to_rli_counter", "parikh_rli",
    "decide_emptiness_rli", "decide_membership_rli", "decide_infiniteness_rli", "semi_decide_emptiness",
]
