"""Hyperbolic structures for semigroups: regular combings with context-free
multiplication tables, plus the language machinery to build and check them."""

__version__ = "0.1.0"

from .words import Alphabet, FreeHom, MarkedWord, parse_word, format_word
from .regular import Nfa, compile as compile_regex
from .grammar import Cfg, parse_cfg, cyk_member, to_cnf
from .valence import ValenceAutomaton, figure2_automaton, figure3_automaton
from .oracle import (
    AdjoinedOracle,
    BicyclicOracle,
    FiniteOracle,
    FreeCommutativeOracle,
    FreeOracle,
    ImageOracle,
    RewritingOracle,
)
from .hyper import Combing, HyperbolicStructure, TableLanguage, verify_table, generate_table

__all__ = [
    "Alphabet", "FreeHom", "MarkedWord", "parse_word", "format_word", "Nfa", "compile_regex",
    "Cfg", "parse_cfg", "cyk_member", "to_cnf", "ValenceAutomaton", "figure2_automaton",
    "figure3_automaton", "AdjoinedOracle", "BicyclicOracle", "FiniteOracle", "FreeCommutativeOracle",
    "FreeOracle", "ImageOracle", "RewritingOracle", "Combing", "HyperbolicStructure", "TableLanguage",
    "verify_table", "generate_table", "__version__",
]
