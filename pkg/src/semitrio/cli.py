"""Command-line front end: ``semitrio parikh|decide|convert|enumerate|oracle-check``.

Exit codes: 0 yes / success, 1 no / disagreement, 3 unknown, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import documents, oracle, semilinear
from .counter import (Ncm, Npcm, accepted_words, decide_emptiness, decide_infiniteness, decide_membership,
                      parikh_ncm, parikh_npcm)
from .cstack import Rncsa, simulate_rncsa
from .errors import NotRightLinearError, SemitrioError
from .indexed import (IndexedGrammar, _is_right_linear, decide_emptiness_rli, decide_infiniteness_rli,
                      decide_membership_rli, explore, lem1_product, lem2_split, npcm_to_rli_counter, parikh_rli,
                      rli_counter_to_npcm, semi_decide_emptiness)
from .pushdown import Cfg, Npda, cfg_membership, npda_to_cfg, parikh_cfg
from .regular import Homomorphism, Nfa, parikh_nfa
from .semilinear import SemilinearSet
from .words import as_word, show

YES, NO, ERROR, UNKNOWN = 0, 1, 2, 3


class UsageError(SemitrioError):
    pass


def _word_text(w) -> str:
    return show(w) if w else "λ"


def _parse_word(text: str, alphabet) -> tuple[str, ...]:
    """Space-separated letters, or one letter per character; ``""`` or ``λ`` is the empty word."""
    if text in ("", "λ"):
        return ()
    if " " in text.strip():
        return tuple(text.split())
    if text in alphabet:
        return (text,)
    return as_word(text)


def _alphabet(model):
    if isinstance(model, (Homomorphism, SemilinearSet)):
        raise UsageError(f"{_kind(model)} documents have no input alphabet")
    return oracle.alphabet_of(model)


# -- parikh --------------------------------------------------------------------

def _plain(model):
    """An indexed grammar without indices or counters is an ordinary CFG."""
    if isinstance(model, IndexedGrammar) and not model.indices and not model.counters:
        prods = frozenset((p.head, p.body) for p in model.productions)
        return Cfg(model.nonterminals, model.terminals, prods, model.start)
    return model


def parikh_of(model) -> SemilinearSet:
    model = _plain(model)
    if isinstance(model, Nfa):
        return parikh_nfa(model)
    if isinstance(model, Cfg):
        return parikh_cfg(model)
    if isinstance(model, Npda):
        return parikh_cfg(npda_to_cfg(model), model.alphabet)
    if isinstance(model, Ncm):
        return parikh_ncm(model)
    if isinstance(model, Npcm):
        return parikh_npcm(model)
    if isinstance(model, IndexedGrammar) and model.counters and _is_right_linear(model):
        return parikh_rli(model)
    raise UsageError(f"no Parikh extraction for {_kind(model)} documents")


def _kind(model) -> str:
    try:
        return documents.to_document(model)["kind"]
    except SemitrioError:
        return type(model).__name__


def cmd_parikh(args) -> int:
    model = documents.load(args.file)
    S = parikh_of(model)
    print(documents.dumps(S, letters=_alphabet(model)))
    return YES


# -- decide --------------------------------------------------------------------

def _bounds_text(args) -> str:
    return f"unknown(max-len={args.max_len}, max-steps={args.max_steps})"


def _exact(model, question: str, word):
    """``True``/``False`` from an exact procedure, or ``None`` when there is none."""
    if isinstance(model, Npda):
        model = npda_to_cfg(model)
    model = _plain(model)
    if isinstance(model, Nfa):
        if question == "member":
            return model.accepts(word)
        if question == "empty":
            return model.is_empty()
        return not semilinear.is_finite(parikh_nfa(model))
    if isinstance(model, Cfg):
        if question == "member":
            return cfg_membership(model, word)
        S = parikh_cfg(model)
        return semilinear.is_empty(S) if question == "empty" else not semilinear.is_finite(S)
    if isinstance(model, (Ncm, Npcm)):
        if question == "member":
            return decide_membership(model, word)
        return decide_emptiness(model) if question == "empty" else decide_infiniteness(model)
    if isinstance(model, IndexedGrammar) and _is_right_linear(model):
        if question == "member":
            return decide_membership_rli(model, word)
        return decide_emptiness_rli(model) if question == "empty" else decide_infiniteness_rli(model)
    if isinstance(model, SemilinearSet):
        if question == "member":
            return semilinear.contains(model, word)
        return semilinear.is_empty(model) if question == "empty" else not semilinear.is_finite(model)
    return None


def _bounded(model, question: str, word, args):
    """Sound bounded verdicts for grammars and checking stack machines; ``None`` if inconclusive."""
    if isinstance(model, IndexedGrammar):
        if question == "member":
            ex = explore(model, len(word), args.max_steps)
            if word in ex.words:
                return True
            return False if ex.complete else None
        verdict = semi_decide_emptiness(model, args.max_len, args.max_steps)
        if question == "empty":
            return {"empty": True, "nonempty": False}.get(verdict.outcome)
        return False if verdict.outcome == "empty" else None
    if isinstance(model, Rncsa):
        if question == "member":
            return True if simulate_rncsa(model, word, counter_bound=args.counter_bound) else None
        if question == "empty":
            for w in oracle.enumerate_words(model.alphabet, args.max_len):
                if simulate_rncsa(model, w, counter_bound=args.counter_bound):
                    return False
        return None
    raise UsageError(f"cannot decide questions about {_kind(model)} documents")


def cmd_decide(args) -> int:
    model = documents.load(args.file)
    word = None
    if args.question == "member":
        if args.word is None:
            raise UsageError("member needs a word argument")
        if isinstance(model, SemilinearSet):
            word = tuple(int(x) for x in args.word.replace(",", " ").split())
        else:
            word = _parse_word(args.word, _alphabet(model))
    elif args.word is not None:
        raise UsageError(f"{args.question} takes no word argument")
    answer = _exact(model, args.question, word)
    if answer is None:
        answer = _bounded(model, args.question, word, args)
    if answer is None:
        print(_bounds_text(args))
        return UNKNOWN
    print("yes" if answer else "no")
    return YES if answer else NO


# -- convert -------------------------------------------------------------------

def cmd_convert(args) -> int:
    model = documents.load(args.file)
    other = documents.load(args.second) if args.second else None
    if (other is not None) != (args.target == "product"):
        raise UsageError("only the product conversion takes a second document")
    target = args.target
    if target == "cfg" and isinstance(model, Npda):
        out = [npda_to_cfg(model)]
    elif target == "grammar" and isinstance(model, Npcm):
        out = [npcm_to_rli_counter(model)]
    elif target == "npcm" and isinstance(model, IndexedGrammar):
        try:
            out = [rli_counter_to_npcm(model)]
        except NotRightLinearError as exc:
            raise UsageError(f"npcm conversion needs a right-linear grammar: {exc}") from exc
    elif target == "split" and isinstance(model, IndexedGrammar):
        s = lem2_split(model)
        out = [s.grammar, s.machine, s.eraser]
    elif target == "product" and isinstance(model, IndexedGrammar) and isinstance(other, Ncm):
        out = [lem1_product(model, other)]
    else:
        got = _kind(model) + (f" and {_kind(other)}" if other is not None else "")
        raise UsageError(f"unsupported conversion: {got} to {target}")
    for obj in out:
        print(documents.dumps(obj))
    return YES


# -- enumerate -----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    model = documents.load(args.file)
    if isinstance(model, IndexedGrammar):
        ex = explore(model, args.max_len, args.max_steps)
        words = ex.words
        if not ex.complete:
            print(f"note: search cut at {args.max_steps} steps; the list may be incomplete", file=sys.stderr)
    elif isinstance(model, (Ncm, Npcm)):
        words = accepted_words(model, args.max_len, counter_bound=args.counter_bound)
    elif isinstance(model, (Nfa, Cfg, Npda, Rncsa)):
        words = oracle.language(model, args.max_len, counter_bound=args.counter_bound)
    else:
        raise UsageError(f"cannot enumerate {_kind(model)} documents")
    for w in oracle.length_lex(words):
        print(_word_text(w))
    return YES


# -- oracle-check --------------------------------------------------------------

def _random_models(seed: int):
    rng = random.Random(seed)
    yield "nfa", oracle.random_nfa(rng)
    yield "cfg", oracle.random_cfg(rng)
    yield "ncm", oracle.random_ncm(rng)


def cmd_oracle_check(args) -> int:
    files = args.files
    if len(files) > 2:
        raise UsageError("oracle-check takes at most two documents")
    if len(files) == 2:
        a, b = documents.load(files[0]), documents.load(files[1])
        report = oracle.cross_check(a, b, args.max_len, max_steps=args.max_steps, counter_bound=args.counter_bound)
        print(report)
        for w in report.only_first:
            print(f"  only first:  {_word_text(w)}")
        for w in report.only_second:
            print(f"  only second: {_word_text(w)}")
        return YES if report.agree else NO
    if files:
        models = [(files[0], documents.load(files[0]))]
    else:
        seed = 0 if args.seed is None else args.seed
        print(f"seed {seed}")
        models = list(_random_models(seed))
    failed = False
    for name, model in models:
        problems = oracle.parikh_mismatches(parikh_of(model), model, args.max_len, counter_bound=args.counter_bound)
        print(f"{name}: {'ok' if not problems else 'MISMATCH'} (words up to length {args.max_len})")
        for p in problems:
            print(f"  {p}")
        failed |= bool(problems)
    return NO if failed else YES


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semitrio", description="Parikh images and decision procedures "
                                     "for counter machines, pushdown machines and indexed grammars.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-len", type=int, default=8, help="longest word searched (default 8)")
    common.add_argument("--max-steps", type=int, default=30, help="derivation step bound for grammars (default 30)")
    common.add_argument("--counter-bound", type=int, default=None, help="largest counter value in simulations")
    common.add_argument("--seed", type=int, default=None, help="seed for randomly generated models")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parikh", parents=[common], help="print the Parikh image as a semilinear document")
    p.add_argument("file")
    p.set_defaults(run=cmd_parikh)

    p = sub.add_parser("decide", parents=[common], help="answer empty / member / infinite")
    p.add_argument("question", choices=("empty", "member", "infinite"))
    p.add_argument("file")
    p.add_argument("word", nargs="?")
    p.set_defaults(run=cmd_decide)

    p = sub.add_parser("convert", parents=[common], help="convert between models")
    p.add_argument("target", choices=("cfg", "grammar", "npcm", "split", "product"))
    p.add_argument("file")
    p.add_argument("second", nargs="?")
    p.set_defaults(run=cmd_convert)

    p = sub.add_parser("enumerate", parents=[common], help="list accepted words, shortest first")
    p.add_argument("file")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("oracle-check", parents=[common],
                       help="compare two models, or one model's Parikh image, against enumeration")
    p.add_argument("files", nargs="*")
    p.set_defaults(run=cmd_oracle_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_len < 0 or args.max_steps < 0:
        print("semitrio: bounds must be non-negative", file=sys.stderr)
        return ERROR
    try:
        return args.run(args)
    except (SemitrioError, OSError, ValueError) as exc:
        print(f"semitrio: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
