"""Parikh images of a few classic languages, printed as linear sets."""

from semitrio import corpus as C
from semitrio.counter import parikh_ncm, parikh_npcm
from semitrio.indexed import parikh_rli
from semitrio.pushdown import npda_to_cfg, parikh_cfg


def show(name, S, letters):
    print(f"{name} over {''.join(letters)}:")
    for part in S.parts:
        periods = ", ".join(map(str, part.periods)) or "none"
        print(f"  {part.constant} + periods {periods}")


show("a^n b^n (pushdown)", parikh_cfg(npda_to_cfg(C.anbn_npda()), "ab"), "ab")
show("a^n b^n c^n (two counters)", parikh_ncm(C.anbncn_ncm()), "abc")
show("balanced brackets, equal a and b", parikh_npcm(C.balanced_equal_npcm()), "ab()")
show("two halves with equal a, b, c", parikh_rli(C.two_halves_grammar()), "abc$")
