"""Shortlex generation of an automaton's language in resumable batches.

A cursor walks the prefix tree breadth-first, one length level at a time,
extending prefixes in sorted symbol order so output is shortlex (shorter
first, lexicographic within a length). Each prefix carries its epsilon-closed
state set; a prefix whose set contains no state that can still reach an
accept state is a dead branch and is dropped. With that pruning, an empty
frontier means the language is fully emitted.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .automata import Nfa, StateSet, epsilon_closure, transit
from .errors import ResourceLimitError

DEFAULT_FRONTIER_CAP = 1_000_000


@dataclass(frozen=True)
class StringBatch:
    """One emitted page: strictly shortlex-increasing accepted strings."""

    strings: tuple[str, ...]
    next_offset: int
    exhausted: bool


@dataclass
class EnumerationCursor:
    """Single-owner enumeration state; hand off freely, never share calls.

    `frontier` holds (prefix, live state set) pairs, all of equal length and
    in strict lexicographic order. `_pending` buffers accepted strings of the
    last examined level that have not been returned yet.
    """

    nfa: Nfa
    frontier: list[tuple[str, StateSet]]
    live: frozenset[int]
    symbols: tuple[str, ...]
    emitted_count: int = 0
    exhausted: bool = False
    _pending: deque[str] = field(default_factory=deque)


def _coaccessible(nfa: Nfa) -> frozenset[int]:
    # States with any path (symbols or epsilon) into an accept state.
    rev: dict[int, list[int]] = {}
    for (src, _), dsts in nfa.transitions.items():
        for dst in dsts:
            rev.setdefault(dst, []).append(src)
    seen = set(nfa.accepts)
    stack = list(nfa.accepts)
    while stack:
        state = stack.pop()
        for prev in rev.get(state, ()):
            if prev not in seen:
                seen.add(prev)
                stack.append(prev)
    return frozenset(seen)


def open_enumeration(nfa: Nfa) -> EnumerationCursor:
    """Cursor positioned before the first language string."""
    live = _coaccessible(nfa)
    start = epsilon_closure(frozenset({nfa.start}), nfa) & live
    frontier = [("", start)] if start else []
    return EnumerationCursor(
        nfa=nfa,
        frontier=frontier,
        live=live,
        symbols=tuple(sorted(nfa.alphabet)),
        exhausted=not frontier,
    )


def next_strings(cursor: EnumerationCursor, k: int,
                 max_frontier: int = DEFAULT_FRONTIER_CAP) -> StringBatch:
    """Up to `k` further strings of the global shortlex sequence.

    Returns fewer than `k` strings only when the language is exhausted.
    Raises ResourceLimitError when a level would exceed `max_frontier`
    prefixes (a pathological pattern, not a wrong one); the cursor should be
    discarded afterwards.
    """
    if k < 1:
        raise ValueError("k must be positive")
    out: list[str] = []
    while len(out) < k:
        if cursor._pending:
            out.append(cursor._pending.popleft())
        elif cursor.frontier:
            _advance_level(cursor, max_frontier)
        else:
            break
    cursor.emitted_count += len(out)
    cursor.exhausted = not cursor.frontier and not cursor._pending
    return StringBatch(tuple(out), cursor.emitted_count, cursor.exhausted)


def _advance_level(cursor: EnumerationCursor, max_frontier: int) -> None:
    nfa = cursor.nfa
    for prefix, states in cursor.frontier:
        if states & nfa.accepts:
            cursor._pending.append(prefix)
    new_frontier: list[tuple[str, StateSet]] = []
    for prefix, states in cursor.frontier:
        for ch in cursor.symbols:
            nxt = epsilon_closure(transit(ch, states, nfa), nfa) & cursor.live
            if nxt:
                if len(new_frontier) >= max_frontier:
                    raise ResourceLimitError(
                        "frontier",
                        f"enumeration frontier exceeded {max_frontier} prefixes")
                new_frontier.append((prefix + ch, nxt))
    cursor.frontier = new_frontier


def enumerate_strings(nfa: Nfa, count: int, offset: int = 0,
                      max_frontier: int = DEFAULT_FRONTIER_CAP) -> StringBatch:
    """Stateless page [offset, offset+count) of the shortlex enumeration.

    Recomputes from the start each call; cursors and batches are
    deterministic, so pages with matching offsets tile the same sequence.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if offset < 0:
        raise ValueError("offset must be non-negative")
    cursor = open_enumeration(nfa)
    skipped = 0
    while skipped < offset and not cursor.exhausted:
        batch = next_strings(cursor, offset - skipped, max_frontier)
        skipped += len(batch.strings)
    return next_strings(cursor, count, max_frontier)
