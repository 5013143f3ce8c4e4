"""Hand-built machines and grammars used by tests, demos and fixtures."""

from __future__ import annotations

from .counter import Ncm, NcmTransition, Npcm, NpcmTransition, expand_signs
from .pushdown import Npda


def _ncm(transitions, **kw) -> Ncm:
    states = {t.source for t in transitions} | {t.target for t in transitions} | {kw["initial"]} | set(kw["finals"])
    return Ncm(states=frozenset(states), transitions=frozenset(transitions), **kw)


def _moves(source, letter, pattern, target, effect):
    return [NcmTransition(source, letter, s, target, effect) for s in expand_signs(pattern)]


def anbn_ncm() -> Ncm:
    """``{a^n b^n : n >= 0}`` with one counter."""
    t = []
    t += _moves("p", "a", "*", "p", (1,))
    t += _moves("p", "", "*", "q", (0,))
    t += _moves("q", "b", "n", "q", (-1,))
    return _ncm(t, alphabet=("a", "b"), counters=1, reversals=1, initial="p", finals={"q"})


def anbncn_ncm() -> Ncm:
    """``{a^n b^n c^n : n >= 0}`` with two counters."""
    t = []
    t += _moves("p", "a", "**", "p", (1, 1))
    t += _moves("p", "", "**", "q", (0, 0))
    t += _moves("q", "b", "n*", "q", (-1, 0))
    t += _moves("q", "", "**", "r", (0, 0))
    t += _moves("r", "c", "*n", "r", (0, -1))
    return _ncm(t, alphabet=("a", "b", "c"), counters=2, reversals=1, initial="p", finals={"r"})


def equal_ab_ncm(alphabet=("a", "b")) -> Ncm:
    """Words with as many ``a`` as ``b``; other letters are free."""
    t = []
    for x in alphabet:
        effect = (1, 0) if x == "a" else (0, 1) if x == "b" else (0, 0)
        t += _moves("read", x, "**", "read", effect)
    t += _moves("read", "", "**", "drain", (0, 0))
    t += _moves("drain", "", "nn", "drain", (-1, -1))
    return _ncm(t, alphabet=tuple(alphabet), counters=2, reversals=1, initial="read", finals={"drain"})


def equal_bc_ncm(alphabet=("a", "b", "c")) -> Ncm:
    """Words with as many ``b`` as ``c``."""
    t = []
    for x in alphabet:
        effect = (1, 0) if x == "b" else (0, 1) if x == "c" else (0, 0)
        t += _moves("read", x, "**", "read", effect)
    t += _moves("read", "", "**", "drain", (0, 0))
    t += _moves("drain", "", "nn", "drain", (-1, -1))
    return _ncm(t, alphabet=tuple(alphabet), counters=2, reversals=1, initial="read", finals={"drain"})


def two_blocks_ncm() -> Ncm:
    """``{a^n b^n a^m b^m : n, m >= 1}`` reusing one counter (three reversals)."""
    t = []
    t += _moves("s0", "a", "*", "s1", (1,))
    t += _moves("s1", "a", "*", "s1", (1,))
    t += _moves("s1", "b", "n", "s2", (-1,))
    t += _moves("s2", "b", "n", "s2", (-1,))
    t += _moves("s2", "a", "z", "s3", (1,))
    t += _moves("s3", "a", "*", "s3", (1,))
    t += _moves("s3", "b", "n", "s4", (-1,))
    t += _moves("s4", "b", "n", "s4", (-1,))
    return _ncm(t, alphabet=("a", "b"), counters=1, reversals=3, initial="s0", finals={"s4"})


def single_letter_ncm() -> Ncm:
    """``{a}``; one idle counter."""
    t = _moves("p", "a", "z", "q", (0,))
    return _ncm(t, alphabet=("a", "b"), counters=1, reversals=1, initial="p", finals={"q"})


def empty_ncm(alphabet=("a", "b")) -> Ncm:
    """No accepting state is reachable."""
    t = _moves("p", "a", "*", "p", (1,))
    return _ncm(t, alphabet=tuple(alphabet), counters=1, reversals=1, initial="p", finals=set())


def universal_ncm(alphabet=("a", "b")) -> Ncm:
    t = []
    for x in alphabet:
        t += _moves("p", x, "z", "p", (0,))
    return _ncm(t, alphabet=tuple(alphabet), counters=1, reversals=1, initial="p", finals={"p"})


def staircase_complement_ncm() -> Ncm:
    """Complement of ``{a # aa # ... # a^k # : k >= 1}`` over ``{a, #}``.

    One branch runs the complement of the automaton for ``a#(a+#)*``. The other
    picks two neighbouring blocks ``a^m # a^n #`` with ``n != m + 1``: the
    counter holds ``m``, the first ``a`` of the second block is skipped and the
    rest decrement it.
    """
    t = []
    # branch 1: bad format or a first block other than "a"
    dfa = {(0, "a"): 1, (0, "#"): 4, (1, "#"): 2, (1, "a"): 4, (2, "a"): 3, (2, "#"): 4,
           (3, "a"): 3, (3, "#"): 2, (4, "a"): 4, (4, "#"): 4}
    for (p, x), q in dfa.items():
        t += _moves(("fmt", p), x, "z", ("fmt", q), (0,))
    t += _moves("init", "", "z", ("fmt", 0), (0,))
    # branch 2: a mismatch between two neighbouring blocks
    t += _moves("init", "", "*", "count", (0,))
    t += _moves("init", "a", "*", "skip", (0,))
    t += _moves("init", "#", "*", "skip", (0,))
    t += _moves("init", "#", "*", "count", (0,))
    t += _moves("skip", "a", "*", "skip", (0,))
    t += _moves("skip", "#", "*", "skip", (0,))
    t += _moves("skip", "#", "*", "count", (0,))
    t += _moves("count", "a", "*", "count", (1,))
    t += _moves("count", "#", "*", "first", (0,))
    t += _moves("first", "#", "*", "tail", (0,))  # empty second block
    t += _moves("first", "a", "*", "match", (0,))
    t += _moves("match", "a", "n", "match", (-1,))
    t += _moves("match", "a", "z", "over", (0,))  # second block too long
    t += _moves("match", "#", "n", "tail", (0,))  # second block too short
    t += _moves("over", "a", "z", "over", (0,))
    t += _moves("over", "#", "z", "tail", (0,))
    t += _moves("tail", "a", "*", "tail", (0,))
    t += _moves("tail", "#", "*", "tail", (0,))
    t += _moves("tail", "", "n", "tail", (-1,))
    finals = {("fmt", 0), ("fmt", 1), ("fmt", 3), ("fmt", 4), "tail"}
    return _ncm(t, alphabet=("a", "#"), counters=1, reversals=1, initial="init", finals=finals)


def in_staircase(w) -> bool:
    """Direct membership in ``{a # aa # ... # a^k # : k >= 1}``."""
    s = "".join(w)
    if not s.endswith("#"):
        return False
    blocks = s[:-1].split("#")
    return all(b == "a" * (i + 1) for i, b in enumerate(blocks))


def _npcm(transitions, **kw) -> Npcm:
    states = {t.source for t in transitions} | {t.target for t in transitions} | {kw["initial"]} | set(kw["finals"])
    return Npcm(states=frozenset(states), transitions=frozenset(transitions), **kw)


def _pmoves(source, letter, top, pattern, target, push, effect):
    return [NpcmTransition(source, letter, top, s, target, push, effect) for s in expand_signs(pattern)]


def anbncn_npcm() -> Npcm:
    """``{a^n b^n c^n : n >= 1}``: the stack matches ``a``/``b``, the counter ``c``."""
    t = []
    t += _pmoves("s", "a", "Z", "*", "p", ("A", "Z"), (1,))
    t += _pmoves("p", "a", "A", "*", "p", ("A", "A"), (1,))
    t += _pmoves("p", "b", "A", "*", "q", (), (0,))
    t += _pmoves("q", "b", "A", "*", "q", (), (0,))
    t += _pmoves("q", "c", "Z", "n", "r", ("Z",), (-1,))
    t += _pmoves("r", "c", "Z", "n", "r", ("Z",), (-1,))
    return _npcm(t, alphabet=("a", "b", "c"), stack_alphabet=("Z", "A"), counters=1, reversals=1,
                 initial="s", initial_stack="Z", finals={"r"})


def balanced_equal_npcm() -> Npcm:
    """Balanced parentheses with as many ``a`` as ``b`` in between."""
    t = []
    for x in ("Z", "P"):
        t += _pmoves("read", "a", x, "**", "read", (x,), (1, 0))
        t += _pmoves("read", "b", x, "**", "read", (x,), (0, 1))
        t += _pmoves("read", "(", x, "**", "read", ("P", x), (0, 0))
    t += _pmoves("read", ")", "P", "**", "read", (), (0, 0))
    t += _pmoves("read", "", "Z", "**", "drain", ("Z",), (0, 0))
    t += _pmoves("drain", "", "Z", "nn", "drain", ("Z",), (-1, -1))
    return _npcm(t, alphabet=("a", "b", "(", ")"), stack_alphabet=("Z", "P"), counters=2, reversals=1,
                 initial="read", initial_stack="Z", finals={"drain"})


def empty_npcm() -> Npcm:
    t = _pmoves("s", "a", "Z", "*", "s", ("Z",), (1,))
    return _npcm(t, alphabet=("a", "b"), stack_alphabet=("Z",), counters=1, reversals=1,
                 initial="s", initial_stack="Z", finals=set())


def anbn_npda() -> Npda:
    """``{a^n b^n : n >= 0}`` by final state."""
    t = {
        (0, "a", "Z", 0, ("A", "Z")), (0, "a", "A", 0, ("A", "A")),
        (0, "", "Z", 1, ("Z",)), (0, "", "A", 1, ("A",)),
        (1, "b", "A", 1, ()), (1, "", "Z", 2, ("Z",)),
    }
    return Npda(frozenset({0, 1, 2}), ("a", "b"), ("Z", "A"), frozenset(t), 0, "Z", frozenset({2}))


def anbn_then_c_npda() -> Npda:
    """``{a^n b^n c^m : n, m >= 0}`` by final state."""
    t = {
        (0, "a", "Z", 0, ("A", "Z")), (0, "a", "A", 0, ("A", "A")),
        (0, "", "Z", 1, ("Z",)), (0, "", "A", 1, ("A",)),
        (1, "b", "A", 1, ()), (1, "", "Z", 2, ("Z",)),
        (2, "c", "Z", 2, ("Z",)),
    }
    return Npda(frozenset({0, 1, 2}), ("a", "b", "c"), ("Z", "A"), frozenset(t), 0, "Z", frozenset({2}))


def ncm_corpus() -> dict[str, Ncm]:
    return {
        "anbn": anbn_ncm(),
        "anbncn": anbncn_ncm(),
        "staircase-complement": staircase_complement_ncm(),
        "equal-ab": equal_ab_ncm(),
        "two-blocks": two_blocks_ncm(),
        "single-a": single_letter_ncm(),
        "empty": empty_ncm(),
    }


def npcm_corpus() -> dict[str, Npcm]:
    return {
        "anbncn": anbncn_npcm(),
        "balanced-equal": balanced_equal_npcm(),
        "empty": empty_npcm(),
    }


# -- grammars -------------------------------------------------------------------

def doubling_grammar():
    """``{a^(2^n) : n >= 0}``.

    Every ``T`` copies the index word it inherits; only the bottom index ``g``
    lets ``T`` finish, so all copies finish at the same depth.
    """
    from .indexed import grammar, production as P

    prods = [P("Z", "S", push="g"), P("S", "S", push="f"), P("S", "T"), P("T", "TT", pop="f"), P("T", "a", pop="g")]
    return grammar(prods, "Z", "a")


def unguarded_doubling_grammar():
    """``S -> Sf | T, Tf -> TT, T -> a``: ``T -> a`` ignores the index, so every
    ``a^n`` with ``n >= 1`` is generated."""
    from .indexed import grammar, production as P

    return grammar([P("S", "S", push="f"), P("S", "T"), P("T", "TT", pop="f"), P("T", "a")], "S", "a")


def two_halves_grammar():
    """``{v$w : v and w each have equally many a, b and c}`` with six counters."""
    from .indexed import grammar, production as P

    z = (0,) * 6

    def unit(i):
        return tuple(1 if j == i else 0 for j in range(6))

    prods = [
        P("S", "S", increments=(1, 1, 1, 0, 0, 0)),
        P("S", "S", increments=(0, 0, 0, 1, 1, 1)),
        P("S", "T", increments=z),
        P("T", "aT", increments=unit(0)),
        P("T", "bT", increments=unit(1)),
        P("T", "cT", increments=unit(2)),
        P("T", "$R", increments=z),
        P("R", "aR", increments=unit(3)),
        P("R", "bR", increments=unit(4)),
        P("R", "cR", increments=unit(5)),
        P("R", "", increments=z),
    ]
    return grammar(prods, "S", "abc$", counters=6)


def in_two_halves(w) -> bool:
    s = "".join(w)
    if s.count("$") != 1:
        return False
    return all(h.count("a") == h.count("b") == h.count("c") and set(h) <= set("abc") for h in s.split("$"))


def equal_ab_grammar():
    """``S -> (aS,1,0) | (bS,0,1) | (λ,0,0)``: words with as many ``a`` as ``b``."""
    from .indexed import grammar, production as P

    return grammar([P("S", "aS", increments=(1, 0)), P("S", "bS", increments=(0, 1)), P("S", "", increments=(0, 0))],
                   "S", "ab", counters=2)


def stuck_grammar():
    """``S -> (aS,1,0) | (a,1,0)``: the counters never agree."""
    from .indexed import grammar, production as P

    return grammar([P("S", "aS", increments=(1, 0)), P("S", "a", increments=(1, 0))], "S", "a", counters=2)


def anbncn_linear_grammar():
    """``{a^n b^n c^n}``: linear, with indices counting the ``a``s and a bottom index ``g``."""
    from .indexed import grammar, production as P

    prods = [
        P("Z", "S", push="g"),
        P("S", "aX"), P("X", "S", push="f"), P("S", "T"),
        P("T", "bTc", pop="f"), P("T", "", pop="g"),
    ]
    return grammar(prods, "Z", "abc")


def palindrome_grammar():
    """``{w c w^R : w in {a,b}*}`` as a linear grammar without indices."""
    from .indexed import grammar, production as P

    return grammar([P("S", "aSa"), P("S", "bSb"), P("S", "c")], "S", "abc")


def copy_grammar(counters: bool = False):
    """``{w$w : w in {a,b,c}*}``, optionally also asking ``|w|_a + |w|_b = |w|_c``.

    The first copy is emitted while its letters are pushed as indices; ``T``
    then pops them and writes each one to its right, restoring the order.
    """
    from .indexed import grammar, production as P

    k = 2 if counters else 0
    z = (0,) * k
    prods = [P("Z", ("S",), push="g", increments=z), P("S", ("$", "T"), increments=z), P("T", (), pop="g", increments=z)]
    for x in "abc":
        inc = ((1, 0) if x in "ab" else (0, 1)) if counters else ()
        prods += [
            P("S", (x, "X" + x), increments=inc),
            P("X" + x, ("S",), push="f" + x, increments=z),
            P("T", ("T", x), pop="f" + x, increments=z),
        ]
    return grammar(prods, "Z", "abc$", counters=k)
