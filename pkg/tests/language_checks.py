"""Language-level checks shared by the indexed-grammar tests and the acceptance run."""

from semitrio.counter import Npcm, NpcmTransition, accepted_words, product_npda_ncm, simulate
from semitrio.indexed import _as_npda, _is_right_linear, enumerate_language, rli_counter_to_npcm


def erase_npcm(M: Npcm, letters) -> Npcm:
    """``M`` with the given letters turned into lambda moves."""
    letters = set(letters)
    moves = frozenset(
        NpcmTransition(t.source, "" if t.letter in letters else t.letter, t.top, t.signs, t.target, t.push, t.effect)
        for t in M.transitions
    )
    return Npcm(M.states, tuple(a for a in M.alphabet if a not in letters), M.stack_alphabet, M.counters,
                M.reversals, moves, M.initial, M.initial_stack, M.finals)


def split_image(G, split, max_len, counter_bound, extra=None, max_steps=80):
    """Words of length ``<= max_len`` in ``h(L(G1) & L(M))``.

    Right-linear splits run as one product machine with the counter letters
    erased. Otherwise ``G1`` is enumerated up to ``max_len + extra`` letters,
    filtered through ``M`` and erased.
    """
    added = set(split.grammar.terminals) - set(G.terminals)
    if _is_right_linear(split.grammar):
        P = _as_npda(rli_counter_to_npcm(split.grammar))
        E = erase_npcm(product_npda_ncm(P, split.machine), added)
        return accepted_words(E, max_len, counter_bound=counter_bound, stack_bound=max_len + 4)
    found = enumerate_language(split.grammar, max_len + extra, max_steps)
    images = {split.eraser(w) for w in found if simulate(split.machine, w)}
    return {w for w in images if len(w) <= max_len}
