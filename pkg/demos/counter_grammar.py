"""A six-counter grammar for v$w where each half has equally many a, b and c.

Lists the short words, splits the counters off into a counter machine, and
decides a few membership questions exactly.
"""

from semitrio import corpus as C
from semitrio.indexed import decide_membership_rli, enumerate_language, lem2_split

G = C.two_halves_grammar()
words = sorted(("".join(w) for w in enumerate_language(G, 7, 40)), key=lambda w: (len(w), w))
print(f"{len(words)} words up to length 7, e.g. {words[:8]}")

split = lem2_split(G)
print(f"without counters: {len(split.grammar.productions)} productions over {''.join(split.grammar.terminals)}")
print(f"checking machine: {split.machine.counters} counters")

for w in ("abc$cab", "aabbcc$", "ab$ab", "abcabc$cba"):
    print(f"{w:>12}: {decide_membership_rli(G, w)}")
