"""Random pattern corpora and small-language helpers.

Used by the experiment scripts and the test suite to cross-check the
automaton pipeline against the brute-force oracle on exhaustive short-string
sweeps.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator

from .automata import Dfa, Nfa, epsilon_closure, transit
from .syntax import (Concat, EmptyLanguage, Epsilon, OracleMatcher, RegexAst,
                     Star, Symbol, Union, render)


def random_ast(rng: random.Random, max_depth: int, symbols: str, *,
               leaf_prob: float = 0.3, epsilon_weight: float = 0.10,
               empty_weight: float = 0.05) -> RegexAst:
    """Random syntax tree of depth <= max_depth over the given symbols."""
    if max_depth == 0 or rng.random() < leaf_prob:
        roll = rng.random()
        if roll < empty_weight:
            return EmptyLanguage()
        if roll < empty_weight + epsilon_weight:
            return Epsilon()
        return Symbol(rng.choice(symbols))
    kwargs = dict(leaf_prob=leaf_prob, epsilon_weight=epsilon_weight,
                  empty_weight=empty_weight)
    roll = rng.random()
    if roll < 0.25:
        return Star(random_ast(rng, max_depth - 1, symbols, **kwargs))
    left = random_ast(rng, max_depth - 1, symbols, **kwargs)
    right = random_ast(rng, max_depth - 1, symbols, **kwargs)
    return Union(left, right) if roll < 0.60 else Concat(left, right)


def random_regex(rng: random.Random, max_depth: int = 4, pool: str = "01ab",
                 min_symbols: int = 1, max_symbols: int = 3) -> str:
    """Random well-formed pattern; each draw uses a fresh symbol subset."""
    count = rng.randint(min_symbols, max_symbols)
    symbols = "".join(rng.sample(pool, count))
    return render(random_ast(rng, max_depth, symbols))


def star_free_regex(rng: random.Random, max_depth: int = 3, pool: str = "01ab") -> str:
    """Random pattern without star, hence a finite (possibly empty) language."""
    symbols = "".join(rng.sample(pool, rng.randint(1, 2)))

    def build(depth: int) -> RegexAst:
        if depth == 0 or rng.random() < 0.35:
            roll = rng.random()
            if roll < 0.05:
                return EmptyLanguage()
            if roll < 0.15:
                return Epsilon()
            return Symbol(rng.choice(symbols))
        left, right = build(depth - 1), build(depth - 1)
        return Union(left, right) if rng.random() < 0.5 else Concat(left, right)

    return render(build(max_depth))


def all_strings(alphabet: Iterable[str], max_len: int) -> Iterator[str]:
    """Every string over `alphabet` of length <= max_len, in shortlex order."""
    symbols = sorted(alphabet)
    for length in range(max_len + 1):
        for chars in itertools.product(symbols, repeat=length):
            yield "".join(chars)


def oracle_language(ast: RegexAst, alphabet: Iterable[str], max_len: int) -> set[str]:
    """Brute-force language slice up to max_len, via the oracle matcher."""
    matcher = OracleMatcher(ast)
    return {w for w in all_strings(alphabet, max_len) if matcher.match(w)}


def nfa_language(nfa: Nfa, max_len: int) -> set[str]:
    """Language slice up to max_len by a shared-prefix NFA walk."""
    found: set[str] = set()
    symbols = sorted(nfa.alphabet)

    def walk(prefix: str, states) -> None:
        if states & nfa.accepts:
            found.add(prefix)
        if len(prefix) == max_len:
            return
        for ch in symbols:
            nxt = epsilon_closure(transit(ch, states, nfa), nfa)
            if nxt:
                walk(prefix + ch, nxt)

    walk("", epsilon_closure(frozenset({nfa.start}), nfa))
    return found


def dfa_language(dfa: Dfa, max_len: int) -> set[str]:
    """Language slice up to max_len by a shared-prefix DFA walk."""
    found: set[str] = set()

    def walk(prefix: str, state: int) -> None:
        if state in dfa.accepts:
            found.add(prefix)
        if len(prefix) == max_len or state == dfa.dead:
            return
        for ch in dfa.alphabet:
            walk(prefix + ch, dfa.step(state, ch))

    walk("", dfa.start)
    return found
