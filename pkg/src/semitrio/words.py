"""Word helpers shared by every model.

A word is a tuple of letters; letters are strings. A plain ``str`` is
accepted anywhere a word is expected and is split into one-character
letters, which keeps single-character alphabets pleasant to use.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[str, ...]


def as_word(w: str | Sequence[str]) -> Word:
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def show(w: Iterable[str]) -> str:
    """Render a word for humans; multi-character letters are space separated."""
    w = tuple(w)
    if all(len(a) == 1 for a in w):
        return "".join(w)
    return " ".join(w)


def parikh(w: Sequence[str], alphabet: Sequence[str]) -> tuple[int, ...]:
    """Letter counts of ``w`` in the order of ``alphabet`` (other letters ignored)."""
    index = {a: i for i, a in enumerate(alphabet)}
    v = [0] * len(alphabet)
    for a in as_word(w):
        i = index.get(a)
        if i is not None:
            v[i] += 1
    return tuple(v)


def fresh_letters(prefix: str, n: int, avoid: Iterable[str]) -> list[str]:
    """``n`` letter names ``prefix1 .. prefixn`` made unique against ``avoid``."""
    taken = set(avoid)
    base = prefix
    while any(f"{base}{i}" in taken for i in range(1, n + 1)):
        base = "_" + base
    return [f"{base}{i}" for i in range(1, n + 1)]
