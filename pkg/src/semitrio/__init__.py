"""Semilinear sets, Parikh images and decision procedures for counter
machines, pushdown machines and indexed grammars with counters."""

from .counter import Ncm, NcmTransition, Npcm, NpcmTransition
from .cstack import Rncsa, divisibility_witness, simulate_rncsa
from .errors import AlphabetError, DimensionError, DocumentError, NotRightLinearError, SemitrioError
from .indexed import CounterIndexedGrammar, IndexedGrammar, Production
from .pushdown import Cfg, Npda
from .regular import Homomorphism, Nfa
from .semilinear import LinearSet, SemilinearSet

__version__ = "0.1.0"

__all__ = [
    "Ncm", "NcmTransition", "Npcm", "NpcmTransition", "Rncsa", "divisibility_witness", "simulate_rncsa",
    "AlphabetError", "DimensionError", "DocumentError", "NotRightLinearError", "SemitrioError",
    "CounterIndexedGrammar", "IndexedGrammar", "Production", "Cfg", "Npda", "Homomorphism", "Nfa",
    "LinearSet", "SemilinearSet",
]
