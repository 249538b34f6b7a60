"""Pumping decisions for regular languages.

A split s = xyz with |xy| <= p and |y| >= 1 is valid when x y^i z stays in
the language for every i >= 0. That unbounded quantifier is decided finitely
through the orbit of y: starting from the state reached on x, repeatedly
reading y visits an eventually-periodic state sequence whose distinct members
all appear within |Q| iterations, and the split is valid exactly when z is
accepted from every orbit state.

The minimum pumping length is computed two ways: a sampled mode that checks
every language string up to a length bound (cheap, not authoritative beyond
the bound) and an exact mode that decides, for each candidate p, whether any
accepted string of length >= p escapes every valid split, via breadth-first
reachability over a product automaton.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal

from .automata import DEFAULT_STATE_CAP, Dfa, Nfa, determinize
from .enumeration import DEFAULT_FRONTIER_CAP, next_strings, open_enumeration
from .errors import ResourceLimitError


@dataclass(frozen=True)
class PumpSplit:
    """One decomposition s = xyz; y is never empty."""

    x: str
    y: str
    z: str

    def __post_init__(self):
        if not self.y:
            raise ValueError("y must be non-empty")


@dataclass(frozen=True)
class MplResult:
    """Minimum pumping length with its evidence.

    `witness` is the shortlex-least language string of length >= p (absent
    when no such string exists) and `split` its first valid decomposition
    (smallest |x|, then smallest |y|). `counterexample_for_p_minus_1` is the
    shortlex-least language string of length >= p-1 with no valid split at
    window p-1, present whenever p > 1 and the mode can produce one.
    """

    p: int
    witness: str | None
    split: PumpSplit | None
    mode: Literal["sampled", "exact"]
    counterexample_for_p_minus_1: str | None


def pump(split: PumpSplit, i: int) -> str:
    """x y^i z; i = 0 deletes the pumped section."""
    if i < 0:
        raise ValueError("pump count must be non-negative")
    return split.x + split.y * i + split.z


def _orbit(dfa: Dfa, state: int, y: str) -> frozenset[int]:
    # States reached after y^i for all i >= 0; the walk enters a cycle
    # within |Q| steps, so the loop terminates at the first repeat.
    seen = {state}
    current = state
    while True:
        current = dfa.run(current, y)
        if current in seen:
            return frozenset(seen)
        seen.add(current)


def split_pumps(dfa: Dfa, x: str, y: str, z: str) -> bool:
    """True iff x y^i z is accepted for every i >= 0 (orbit decision)."""
    if not y:
        raise ValueError("y must be non-empty")
    start = dfa.run(dfa.start, x)
    return all(dfa.run(state, z) in dfa.accepts for state in _orbit(dfa, start, y))


def _candidate_splits(s: str, p: int):
    # |x| ascending, then |y| ascending; |xy| <= p and y non-empty.
    limit = min(p, len(s))
    for i in range(limit):
        for j in range(i + 1, limit + 1):
            yield PumpSplit(s[:i], s[i:j], s[j:])


def valid_splits(s: str, p: int, dfa: Dfa) -> list[PumpSplit]:
    """Every valid split of `s` for pumping length `p`, in tie-break order."""
    if p < 1:
        raise ValueError("p must be positive")
    return [split for split in _candidate_splits(s, p)
            if split_pumps(dfa, split.x, split.y, split.z)]


def is_pumpable(s: str, p: int, dfa: Dfa) -> bool:
    """Whether `s` has any valid split at window `p`.

    Also defined for |s| < p (outside the lemma's quantifier): the candidate
    splits are evaluated anyway and the result may simply be False.
    """
    if p < 1:
        raise ValueError("p must be positive")
    return any(split_pumps(dfa, split.x, split.y, split.z)
               for split in _candidate_splits(s, p))


def _strings_up_to(nfa: Nfa, max_len: int, max_frontier: int) -> list[str]:
    cursor = open_enumeration(nfa)
    out: list[str] = []
    while not cursor.exhausted:
        batch = next_strings(cursor, 256, max_frontier)
        for s in batch.strings:
            if len(s) > max_len:
                return out
            out.append(s)
    return out


def min_pumping_length_sampled(
    nfa: Nfa,
    max_len: int | None = None,
    state_cap: int = DEFAULT_STATE_CAP,
    max_frontier: int = DEFAULT_FRONTIER_CAP,
) -> MplResult:
    """Smallest p such that every language string of length in [p, max_len]
    is p-pumpable.

    Checks only the enumerated sample, so the result is not a proof for
    strings beyond `max_len`; the default bound is twice the determinized
    state count plus two, which covers the witness region at desk scale.
    """
    dfa = determinize(nfa, state_cap)
    if max_len is None:
        max_len = 2 * dfa.state_count + 2
    if max_len < 1:
        raise ValueError("max_len must be positive")
    strings = _strings_up_to(nfa, max_len, max_frontier)
    known_window: dict[str, int] = {}   # s -> |xy| of some valid split
    counterexample: str | None = None
    for p in range(1, max_len + 2):
        failing = None
        for s in strings:
            if len(s) < p:
                continue
            if not _pumpable_cached(s, p, dfa, known_window):
                failing = s
                break
        if failing is None:
            witness = next((s for s in strings if len(s) >= p), None)
            split = valid_splits(witness, p, dfa)[0] if witness is not None else None
            return MplResult(p, witness, split, "sampled", counterexample)
        counterexample = failing
    raise AssertionError("unreachable: p = max_len + 1 holds vacuously")


def _pumpable_cached(s: str, p: int, dfa: Dfa, known_window: dict[str, int]) -> bool:
    window = known_window.get(s)
    if window is not None and window <= p:
        return True
    for split in _candidate_splits(s, p):
        if split_pumps(dfa, split.x, split.y, split.z):
            known_window[s] = len(split.x) + len(split.y)
            return True
    return False


def min_pumping_length_exact(dfa: Dfa, state_cap: int = DEFAULT_STATE_CAP) -> MplResult:
    """True minimum pumping length of the DFA's language.

    Candidates p = 1, 2, ... are tested by searching for an accepted string
    of length >= p that no window-p split can pump; the first candidate with
    no such string wins. p = |Q| always passes (any run of length |Q| repeats
    a state), so the loop terminates.
    """
    counterexample: str | None = None
    for p in range(1, dfa.state_count + 2):
        bad = _shortest_unpumpable(dfa, p, state_cap)
        if bad is None:
            witness = _shortest_with_min_length(dfa, p)
            split = valid_splits(witness, p, dfa)[0] if witness is not None else None
            return MplResult(p, witness, split, "exact", counterexample)
        counterexample = bad
    raise AssertionError("unreachable: p = |Q| is always a valid pumping length")


def _shortest_with_min_length(dfa: Dfa, p: int) -> str | None:
    # Shortlex-least accepted string of length >= p, by BFS over
    # (state, saturating length); None when the language has no such string.
    seen = {(dfa.start, 0)}
    queue: deque[tuple[tuple[int, int], str]] = deque([((dfa.start, 0), "")])
    while queue:
        (state, length), s = queue.popleft()
        for ch in dfa.alphabet:
            nxt = dfa.step(state, ch)
            nlen = min(length + 1, p)
            if nlen == p and nxt in dfa.accepts:
                return s + ch
            node = (nxt, nlen)
            if node not in seen:
                seen.add(node)
                queue.append((node, s + ch))
    return None


def _shortest_unpumpable(dfa: Dfa, p: int, state_cap: int) -> str | None:
    """Shortlex-least accepted string of length >= p with no valid window-p
    split; None when every such string pumps (i.e. p is a pumping length).

    Works on a product of three tracks read in lockstep: the language DFA,
    a saturating length counter, and the determinized set of "split guesses".
    A guess nondeterministically fixes where y starts and ends while reading:
    phase A consumes x; phase B consumes y, accumulating y's state-to-state
    word function; phase C runs z simultaneously from every orbit state and
    accepts when all runners accept. A string is p-pumpable exactly when some
    guess accepts, so the target nodes are those whose guess set contains no
    accepting guess while the language track accepts at full count.
    """
    n = dfa.state_count
    step_fun = {ch: tuple(dfa.step(q, ch) for q in range(n)) for ch in dfa.alphabet}
    orbit_cache: dict[tuple[int, tuple[int, ...]], frozenset[int]] = {}

    def orbit_of(qx: int, f: tuple[int, ...]) -> frozenset[int]:
        key = (qx, f)
        cached = orbit_cache.get(key)
        if cached is None:
            seen_states = {qx}
            q = qx
            while True:
                q = f[q]
                if q in seen_states:
                    break
                seen_states.add(q)
            cached = frozenset(seen_states)
            orbit_cache[key] = cached
        return cached

    def guess_accepting(guess) -> bool:
        if guess[0] == "B":
            _, qx, f, _ = guess
            return orbit_of(qx, f) <= dfa.accepts
        if guess[0] == "C":
            return guess[1] <= dfa.accepts
        return False

    def guess_step(guess, ch: str):
        fun = step_fun[ch]
        if guess[0] == "A":
            _, q, k = guess
            out = [("B", q, fun, k + 1)]         # ch is the first symbol of y
            if k + 1 <= p - 1:
                out.append(("A", fun[q], k + 1))
            return out
        if guess[0] == "B":
            _, qx, f, k = guess
            out = [("C", frozenset(fun[q] for q in orbit_of(qx, f)))]
            if k + 1 <= p:
                out.append(("B", qx, tuple(fun[q] for q in f), k + 1))
            return out
        return [("C", frozenset(fun[q] for q in guess[1]))]

    subset_accepting: dict[frozenset, bool] = {}

    def any_accepting(guesses: frozenset) -> bool:
        cached = subset_accepting.get(guesses)
        if cached is None:
            cached = any(guess_accepting(g) for g in guesses)
            subset_accepting[guesses] = cached
        return cached

    start_node = (dfa.start, 0, frozenset({("A", dfa.start, 0)}))
    seen = {start_node}
    queue: deque[tuple[tuple, str]] = deque([(start_node, "")])
    while queue:
        (state, length, guesses), s = queue.popleft()
        for ch in dfa.alphabet:
            nxt = dfa.step(state, ch)
            nlen = min(length + 1, p)
            nguesses = frozenset(g for guess in guesses for g in guess_step(guess, ch))
            if nlen == p and nxt in dfa.accepts and not any_accepting(nguesses):
                return s + ch
            node = (nxt, nlen, nguesses)
            if node not in seen:
                if len(seen) >= state_cap:
                    raise ResourceLimitError(
                        "product",
                        f"pumpability product exceeded {state_cap} states")
                seen.add(node)
                queue.append((node, s + ch))
    return None
