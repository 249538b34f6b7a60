"""Regular-language workbench.

Compiles a restricted regular-expression syntax to an NFA, decides
membership, enumerates language strings in shortlex order, and computes the
minimum pumping length with a shortest witness and a valid decomposition.
The CLI lives in pumplab.cli, the HTTP JSON service in pumplab.service.
"""

from .automata import (EPSILON, Dfa, Nfa, StateSet, accepts, compile,
                       determinize, epsilon_closure, export_graph, transit)
from .config import CliConfig, load_config
from .enumeration import (EnumerationCursor, StringBatch, enumerate_strings,
                          next_strings, open_enumeration)
from .errors import RegexSyntaxError, ResourceLimitError
from .pumping import (MplResult, PumpSplit, is_pumpable,
                      min_pumping_length_exact, min_pumping_length_sampled,
                      pump, split_pumps, valid_splits)
from .syntax import (DEFAULT_RESERVED, Concat, EmptyLanguage, Epsilon,
                     OracleMatcher, RegexAst, ReservedSymbols, SegmentList,
                     Star, Symbol, SyntaxIssue, Union, oracle_match,
                     parse_ast, parse_segments, render, validate)

__version__ = "0.1.0"

__all__ = [
    "EPSILON", "Dfa", "Nfa", "StateSet", "accepts", "compile", "determinize",
    "epsilon_closure", "export_graph", "transit",
    "CliConfig", "load_config",
    "EnumerationCursor", "StringBatch", "enumerate_strings", "next_strings",
    "open_enumeration",
    "RegexSyntaxError", "ResourceLimitError",
    "MplResult", "PumpSplit", "is_pumpable", "min_pumping_length_exact",
    "min_pumping_length_sampled", "pump", "split_pumps", "valid_splits",
    "DEFAULT_RESERVED", "Concat", "EmptyLanguage", "Epsilon", "OracleMatcher",
    "RegexAst", "ReservedSymbols", "SegmentList", "Star", "Symbol",
    "SyntaxIssue", "Union", "oracle_match", "parse_ast", "parse_segments",
    "render", "validate",
]
