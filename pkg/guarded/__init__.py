"""Guarded recursion, productive infinite traversals, and a law-checking harness."""
from .core import EXHAUSTED, Later, delay, lap, lfix
from .evaluation import ObsBudget, Terminator, bisimilar, leval, llift
from .traversals import ibackquence, isequence_bistream, isequence_itree, isequence_stream

__version__ = "1.0.0"

__all__ = [
    "EXHAUSTED",
    "Later",
    "ObsBudget",
    "Terminator",
    "bisimilar",
    "delay",
    "ibackquence",
    "isequence_bistream",
    "isequence_itree",
    "isequence_stream",
    "lap",
    "leval",
    "lfix",
    "llift",
]
