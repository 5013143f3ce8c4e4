"""JSON documents for every model class.

A document is a JSON object with ``kind``, ``version`` (``"1"``) and the
fields of its kind. Tuples are written as lists and read back as tuples, so
states such as ``["nt", "S"]`` survive a round trip. Unknown fields are
rejected.
"""

from __future__ import annotations

import json
from typing import Any

from .counter import Ncm, NcmTransition, Npcm, NpcmTransition, expand_signs
from .cstack import ReadTransition, Rncsa, WriteTransition
from .errors import DocumentError, SemitrioError
from .indexed import IndexedGrammar, Production
from .pushdown import Cfg, Npda
from .regular import Homomorphism, Nfa
from .semilinear import LinearSet, SemilinearSet

VERSION = "1"

_FIELDS = {
    "nfa": ({"states", "alphabet", "transitions", "initial", "finals"}, set()),
    "cfg": ({"nonterminals", "terminals", "productions", "start"}, set()),
    "npda": ({"states", "alphabet", "stack_alphabet", "transitions", "initial", "initial_stack", "finals"}, set()),
    "ncm": ({"states", "alphabet", "counters", "reversals", "transitions", "initial", "finals"}, set()),
    "npcm": ({"states", "alphabet", "stack_alphabet", "counters", "reversals", "transitions", "initial",
              "initial_stack", "finals"}, set()),
    "indexed-grammar": ({"nonterminals", "terminals", "indices", "productions", "start"}, set()),
    "counter-indexed-grammar": ({"nonterminals", "terminals", "indices", "productions", "start", "counters"}, set()),
    "rncsa": ({"states", "read_states", "alphabet", "stack_alphabet", "counters", "reversals", "write_transitions",
               "read_transitions", "switches", "initial", "finals"}, set()),
    "semilinear": ({"dimension", "parts"}, {"letters"}),
    "homomorphism": ({"domain", "codomain", "image"}, set()),
}
KINDS = tuple(_FIELDS)


def _enc(x: Any) -> Any:
    if isinstance(x, (tuple, list)):
        return [_enc(y) for y in x]
    if isinstance(x, (frozenset, set)):
        return sorted((_enc(y) for y in x), key=repr)
    if x is None or isinstance(x, (str, int, bool)):
        return x
    raise DocumentError(f"cannot serialize {x!r}")


def _dec(x: Any) -> Any:
    if isinstance(x, list):
        return tuple(_dec(y) for y in x)
    if isinstance(x, dict):
        raise DocumentError("objects are not allowed as symbols")
    return x


def _set(x) -> frozenset:
    if not isinstance(x, list):
        raise DocumentError(f"expected a list, got {x!r}")
    return frozenset(_dec(y) for y in x)


def _signs(pattern) -> list[tuple[str, ...]]:
    if isinstance(pattern, list):
        pattern = "".join(pattern)
    if not isinstance(pattern, str):
        raise DocumentError(f"sign pattern must be a string, got {pattern!r}")
    return expand_signs(pattern)


def _pattern(signs) -> str:
    """Sign pattern text, one entry per counter: ``"z,n"``."""
    return ",".join(signs)


def _rows(x, width: int, what: str) -> list[list]:
    if not isinstance(x, list) or any(not isinstance(r, list) or len(r) != width for r in x):
        raise DocumentError(f"{what} must be a list of {width}-element lists")
    return x


def _sorted(rows) -> list:
    return sorted(rows, key=repr)


# -- to JSON-ready dictionaries ----------------------------------------------

def to_document(obj) -> dict:
    if isinstance(obj, Nfa):
        return _wrap("nfa", states=_enc(obj.states), alphabet=list(obj.alphabet),
                     transitions=_sorted(_enc(t) for t in obj.transitions),
                     initial=_enc(obj.initial), finals=_enc(obj.finals))
    if isinstance(obj, Cfg):
        return _wrap("cfg", nonterminals=_enc(obj.nonterminals), terminals=list(obj.terminals),
                     productions=_sorted([_enc(h), _enc(b)] for h, b in obj.productions), start=_enc(obj.start))
    if isinstance(obj, Npda):
        return _wrap("npda", states=_enc(obj.states), alphabet=list(obj.alphabet),
                     stack_alphabet=_enc(obj.stack_alphabet),
                     transitions=_sorted(_enc(t) for t in obj.transitions),
                     initial=_enc(obj.initial), initial_stack=_enc(obj.initial_stack), finals=_enc(obj.finals))
    if isinstance(obj, Ncm):
        rows = [[_enc(t.source), t.letter, _pattern(t.signs), _enc(t.target), list(t.effect)] for t in obj.transitions]
        return _wrap("ncm", states=_enc(obj.states), alphabet=list(obj.alphabet), counters=obj.counters,
                     reversals=obj.reversals, transitions=_sorted(rows),
                     initial=_enc(obj.initial), finals=_enc(obj.finals))
    if isinstance(obj, Npcm):
        rows = [[_enc(t.source), t.letter, _enc(t.top), _pattern(t.signs), _enc(t.target), _enc(t.push),
                 list(t.effect)] for t in obj.transitions]
        return _wrap("npcm", states=_enc(obj.states), alphabet=list(obj.alphabet),
                     stack_alphabet=_enc(obj.stack_alphabet), counters=obj.counters, reversals=obj.reversals,
                     transitions=_sorted(rows), initial=_enc(obj.initial),
                     initial_stack=_enc(obj.initial_stack), finals=_enc(obj.finals))
    if isinstance(obj, IndexedGrammar):
        prods = []
        for p in obj.productions:
            row = {"head": _enc(p.head), "body": _enc(p.body)}
            if p.push is not None:
                row["pushed-index"] = _enc(p.push)
            if p.pop is not None:
                row["popped-index"] = _enc(p.pop)
            if obj.counters:
                row["increments"] = list(p.increments)
            prods.append(row)
        fields = dict(nonterminals=_enc(obj.nonterminals), terminals=list(obj.terminals),
                      indices=_enc(obj.indices), productions=prods, start=_enc(obj.start))
        if obj.counters:
            return _wrap("counter-indexed-grammar", counters=obj.counters, **fields)
        return _wrap("indexed-grammar", **fields)
    if isinstance(obj, Rncsa):
        write = [[_enc(t.source), t.letter, _pattern(t.signs), _enc(t.target), _enc(t.push), list(t.effect)]
                 for t in obj.write_transitions]
        read = [[_enc(t.source), _enc(t.symbol), _pattern(t.signs), _enc(t.target), t.move, list(t.effect)]
                for t in obj.read_transitions]
        return _wrap("rncsa", states=_enc(obj.states), read_states=_enc(obj.read_states),
                     alphabet=list(obj.alphabet), stack_alphabet=_enc(obj.stack_alphabet), counters=obj.counters,
                     reversals=obj.reversals, write_transitions=_sorted(write), read_transitions=_sorted(read),
                     switches=_sorted(_enc(s) for s in obj.switches), initial=_enc(obj.initial),
                     finals=_enc(obj.finals))
    if isinstance(obj, SemilinearSet):
        parts = [{"constant": list(p.constant), "periods": [list(v) for v in p.periods]} for p in obj.parts]
        return _wrap("semilinear", dimension=obj.dimension, parts=parts)
    if isinstance(obj, Homomorphism):
        return _wrap("homomorphism", domain=list(obj.domain), codomain=list(obj.codomain),
                     image={a: list(obj.image[a]) for a in obj.domain})
    raise DocumentError(f"no document kind for {type(obj).__name__}")


def _wrap(kind: str, **fields) -> dict:
    return {"kind": kind, "version": VERSION, **fields}


# -- from dictionaries ---------------------------------------------------------

def from_document(doc: dict):
    if not isinstance(doc, dict):
        raise DocumentError("a document must be a JSON object")
    kind = doc.get("kind")
    if kind not in _FIELDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    if doc.get("version") != VERSION:
        raise DocumentError(f"unsupported version {doc.get('version')!r}, expected {VERSION!r}")
    required, optional = _FIELDS[kind]
    present = set(doc) - {"kind", "version"}
    if present - required - optional:
        raise DocumentError(f"unknown fields for {kind}: {sorted(present - required - optional)}")
    if required - present:
        raise DocumentError(f"missing fields for {kind}: {sorted(required - present)}")
    try:
        return _BUILDERS[kind](doc)
    except DocumentError:
        raise
    except (SemitrioError, TypeError, ValueError, KeyError) as exc:
        raise DocumentError(f"invalid {kind} document: {exc}") from exc


def _nfa(d):
    rows = _rows(d["transitions"], 3, "transitions")
    return Nfa(_set(d["states"]), tuple(d["alphabet"]), frozenset(_dec(r) for r in rows),
               _dec(d["initial"]), _set(d["finals"]))


def _cfg(d):
    rows = _rows(d["productions"], 2, "productions")
    return Cfg(_set(d["nonterminals"]), tuple(d["terminals"]),
               frozenset((_dec(h), _dec(b)) for h, b in rows), _dec(d["start"]))


def _npda(d):
    rows = _rows(d["transitions"], 5, "transitions")
    return Npda(_set(d["states"]), tuple(d["alphabet"]), _dec(d["stack_alphabet"]),
                frozenset(_dec(r) for r in rows), _dec(d["initial"]), _dec(d["initial_stack"]), _set(d["finals"]))


def _ncm(d):
    moves = set()
    for p, a, signs, q, effect in _rows(d["transitions"], 5, "transitions"):
        for s in _signs(signs):
            moves.add(NcmTransition(_dec(p), a, s, _dec(q), tuple(effect)))
    return Ncm(_set(d["states"]), tuple(d["alphabet"]), d["counters"], d["reversals"], frozenset(moves),
               _dec(d["initial"]), _set(d["finals"]))


def _npcm(d):
    moves = set()
    for p, a, top, signs, q, push, effect in _rows(d["transitions"], 7, "transitions"):
        for s in _signs(signs):
            moves.add(NpcmTransition(_dec(p), a, _dec(top), s, _dec(q), _dec(push), tuple(effect)))
    return Npcm(_set(d["states"]), tuple(d["alphabet"]), _dec(d["stack_alphabet"]), d["counters"],
                d["reversals"], frozenset(moves), _dec(d["initial"]), _dec(d["initial_stack"]), _set(d["finals"]))


def _indexed(d, counters: int):
    prods = []
    for row in d["productions"]:
        if not isinstance(row, dict):
            raise DocumentError("each production must be an object")
        extra = set(row) - {"head", "body", "pushed-index", "popped-index", "increments"}
        if extra:
            raise DocumentError(f"unknown production fields {sorted(extra)}")
        if counters == 0 and "increments" in row:
            raise DocumentError("increments need a counter-indexed-grammar document")
        prods.append(Production(_dec(row["head"]), _dec(row["body"]), _dec(row.get("pushed-index")),
                                _dec(row.get("popped-index")), tuple(row.get("increments", (0,) * counters))))
    return IndexedGrammar(_set(d["nonterminals"]), tuple(d["terminals"]), _set(d["indices"]), tuple(prods),
                          _dec(d["start"]), counters)


def _counter_indexed(d):
    if not isinstance(d["counters"], int) or d["counters"] < 1:
        raise DocumentError("a counter-indexed-grammar needs at least one counter")
    return _indexed(d, d["counters"])


def _rncsa(d):
    write = set()
    for p, a, signs, q, push, effect in _rows(d["write_transitions"], 6, "write_transitions"):
        for s in _signs(signs):
            write.add(WriteTransition(_dec(p), a, s, _dec(q), _dec(push), tuple(effect)))
    read = set()
    for p, x, signs, q, move, effect in _rows(d["read_transitions"], 6, "read_transitions"):
        for s in _signs(signs):
            read.add(ReadTransition(_dec(p), _dec(x), s, _dec(q), move, tuple(effect)))
    switches = frozenset(_dec(r) for r in _rows(d["switches"], 2, "switches"))
    return Rncsa(_set(d["states"]), _set(d["read_states"]), tuple(d["alphabet"]), _dec(d["stack_alphabet"]),
                 d["counters"], d["reversals"], frozenset(write), frozenset(read), switches,
                 _dec(d["initial"]), _set(d["finals"]))


def _semilinear(d):
    parts = []
    for row in d["parts"]:
        if not isinstance(row, dict) or set(row) - {"constant", "periods"} or "constant" not in row:
            raise DocumentError("each linear set needs a constant and optional periods")
        parts.append(LinearSet(tuple(row["constant"]), tuple(tuple(p) for p in row.get("periods", []))))
    return SemilinearSet(d["dimension"], tuple(parts))


def _homomorphism(d):
    if not isinstance(d["image"], dict):
        raise DocumentError("image must be an object from letters to words")
    return Homomorphism(tuple(d["domain"]), tuple(d["codomain"]),
                        {a: tuple(w) for a, w in d["image"].items()})


_BUILDERS = {
    "nfa": _nfa, "cfg": _cfg, "npda": _npda, "ncm": _ncm, "npcm": _npcm,
    "indexed-grammar": lambda d: _indexed(d, 0), "counter-indexed-grammar": _counter_indexed,
    "rncsa": _rncsa, "semilinear": _semilinear, "homomorphism": _homomorphism,
}


# -- text --------------------------------------------------------------------

def dumps(obj, letters=None) -> str:
    doc = to_document(obj)
    if letters is not None and doc["kind"] == "semilinear":
        doc["letters"] = list(letters)
    return _format(doc)


def _format(doc: dict) -> str:
    """One field per line; lists of rows get one row per line."""
    def compact(x):
        return json.dumps(x, ensure_ascii=False, separators=(", ", ": "))

    lines = []
    for key, value in doc.items():
        if isinstance(value, list) and value and all(isinstance(v, (list, dict)) for v in value):
            rows = ",\n".join("    " + compact(v) for v in value)
            text = "[\n" + rows + "\n  ]"
        else:
            text = compact(value)
        lines.append(f"  {compact(key)}: {text}")
    return "{\n" + ",\n".join(lines) + "\n}"


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    return from_document(doc)


def loads_all(text: str) -> list:
    """Several documents written one after another, as ``convert`` emits them."""
    decoder = json.JSONDecoder()
    out, i = [], 0
    while True:
        while i < len(text) and text[i].isspace():
            i += 1
        if i == len(text):
            return out
        try:
            doc, i = decoder.raw_decode(text, i)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
        out.append(from_document(doc))


def load(path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


__all__ = ["KINDS", "VERSION", "to_document", "from_document", "dumps", "loads", "loads_all", "load"]
