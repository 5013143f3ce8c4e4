"""Expected exit codes of the command-line tool on the fixture documents."""

import contextlib
import io
from pathlib import Path

from semitrio.cli import main

FIXTURES = Path(__file__).parent / "fixtures"

# fixture: (word in the language, exit codes for
#           parikh, decide empty, decide infinite, decide member, enumerate, oracle-check)
EXPECTED = {
    "ab-star.nfa.json": ("abab", (0, 1, 0, 0, 0, 0)),
    "anbn.cfg.json": ("aabb", (0, 1, 0, 0, 0, 0)),
    "anbn.ncm.json": ("ab", (0, 1, 0, 0, 0, 0)),
    "anbn.npda.json": ("aabb", (0, 1, 0, 0, 0, 0)),
    "anbncn.ncm.json": ("abc", (0, 1, 0, 0, 0, 0)),
    "anbncn.npcm.json": ("aabbcc", (0, 1, 0, 0, 0, 0)),
    "balanced-equal.npcm.json": ("(ab)", (0, 1, 0, 0, 0, 0)),
    "diagonal.semilinear.json": ("2,2", (2, 1, 0, 0, 2, 2)),
    "divisibility.rncsa.json": ("aabbbb", (2, 1, 3, 0, 0, 2)),
    "doubling.indexed-grammar.json": ("aaaa", (2, 1, 3, 0, 0, 2)),
    "empty.ncm.json": ("ab", (0, 0, 1, 1, 0, 0)),
    "empty.nfa.json": ("", (0, 0, 1, 1, 0, 0)),
    "equal-ab.counter-indexed-grammar.json": ("abba", (0, 1, 0, 0, 0, 0)),
    "erase-c.homomorphism.json": ("a", (2, 2, 2, 2, 2, 2)),
    "palindrome.indexed-grammar.json": ("abcba", (0, 1, 0, 0, 0, 0)),
    "single-a.cfg.json": ("a", (0, 1, 1, 0, 0, 0)),
    "staircase-complement.ncm.json": ("aa", (0, 1, 0, 0, 0, 0)),
    "stuck.counter-indexed-grammar.json": ("a", (0, 0, 1, 1, 0, 0)),
    "two-halves.counter-indexed-grammar.json": ("cab$bca", (0, 1, 0, 0, 0, 0)),
    "universal.ncm.json": ("abc", (0, 1, 0, 0, 0, 0)),
}

# commands outside the per-fixture grid: (argv, exit code)
EXTRA = [
    (["decide", "member", "anbn.cfg.json", "aab"], 1),
    (["decide", "member", "divisibility.rncsa.json", "aabbb"], 3),
    (["decide", "member", "anbn.ncm.json"], 2),
    (["decide", "empty", "anbn.ncm.json", "ab"], 2),
    (["decide", "member", "anbn.ncm.json", "abz"], 2),
    (["parikh", "no-such-file.json"], 2),
    (["convert", "npcm", "doubling.indexed-grammar.json"], 2),
    (["convert", "cfg", "anbn.ncm.json"], 2),
    (["convert", "product", "anbn.ncm.json"], 2),
    (["oracle-check", "anbn.cfg.json", "anbn.npda.json"], 0),
    (["oracle-check", "anbn.cfg.json", "ab-star.nfa.json"], 1),
    (["oracle-check", "anbn.cfg.json", "anbn.npda.json", "anbn.ncm.json"], 2),
    (["oracle-check", "--seed", "3"], 0),
    (["enumerate", "anbn.ncm.json", "--max-len", "-1"], 2),
]


def run(argv):
    """Exit code, standard output and standard error of one invocation."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main([str(FIXTURES / a) if a.endswith(".json") else a for a in argv])
    return code, out.getvalue(), err.getvalue()


def grid():
    """``(argv, expected exit code)`` for every fixture and command."""
    for name, (word, codes) in EXPECTED.items():
        commands = (["parikh", name], ["decide", "empty", name], ["decide", "infinite", name],
                    ["decide", "member", name, word], ["enumerate", name, "--max-len", "5"],
                    ["oracle-check", name, "--max-len", "6"])
        yield from zip(commands, codes)
    yield from EXTRA
