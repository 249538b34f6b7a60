"""NFA construction, simulation, subset construction, and DOT export.

Patterns compile to a 5-tuple automaton by recursing over segment lists:
single symbols, the empty-string character, and the empty-language character
are base cases; star, concatenation, and union are applied over the segments
in that order (star binds tightest). Union and star always produce exactly
one accept state; the empty-language base case produces none.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ResourceLimitError
from .syntax import DEFAULT_RESERVED, ReservedSymbols, _segment_items, check

# Transition label for moves that consume no input.
EPSILON = ""

StateSet = frozenset[int]

DEFAULT_STATE_CAP = 100_000


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton with epsilon moves labeled ``EPSILON``.

    States are the dense integers 0..state_count-1, numbered in construction
    order and never renumbered, so equal patterns yield identical automata.
    """

    state_count: int
    alphabet: frozenset[str]
    transitions: dict[tuple[int, str], frozenset[int]]
    start: int
    accepts: frozenset[int]

    @property
    def states(self) -> range:
        return range(self.state_count)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton; ``dead`` absorbs undefined moves."""

    state_count: int
    alphabet: tuple[str, ...]
    transitions: dict[tuple[int, str], int]
    start: int
    accepts: frozenset[int]
    dead: int

    @property
    def states(self) -> range:
        return range(self.state_count)

    def step(self, state: int, symbol: str) -> int:
        return self.transitions.get((state, symbol), self.dead)

    def run(self, state: int, w: str) -> int:
        for ch in w:
            state = self.transitions.get((state, ch), self.dead)
        return state

    def accepts_string(self, w: str) -> bool:
        return self.run(self.start, w) in self.accepts


@dataclass
class _Fragment:
    start: int
    accept: int | None  # None: no accept state (empty-language branch)


class _NfaBuilder:
    def __init__(self, reserved: ReservedSymbols):
        self.reserved = reserved
        self.count = 0
        self.alphabet: set[str] = set()
        self.transitions: dict[tuple[int, str], set[int]] = {}

    def new_state(self) -> int:
        state = self.count
        self.count += 1
        return state

    def add(self, src: int, label: str, dst: int) -> None:
        self.transitions.setdefault((src, label), set()).add(dst)

    def fragment(self, pattern: str) -> _Fragment:
        r = self.reserved
        if pattern == r.empty_language:
            return _Fragment(self.new_state(), None)
        if pattern == r.epsilon:
            state = self.new_state()
            return _Fragment(state, state)
        if len(pattern) == 1:
            s0, s1 = self.new_state(), self.new_state()
            self.alphabet.add(pattern)
            self.add(s0, pattern, s1)
            return _Fragment(s0, s1)
        work: list[_Fragment | str] = [
            item if item in (r.union, r.concat, r.star) else self.fragment(item)
            for item in _segment_items(pattern, r)
        ]
        work = self._apply_star(work)
        work = self._apply_binary(work, r.concat, self.concat)
        work = self._apply_binary(work, r.union, self.union)
        assert len(work) == 1 and isinstance(work[0], _Fragment)
        return work[0]

    def _apply_star(self, work):
        out: list[_Fragment | str] = []
        for item in work:
            if item == self.reserved.star:
                out.append(self.star(out.pop()))
            else:
                out.append(item)
        return out

    def _apply_binary(self, work, marker, combine):
        out: list[_Fragment | str] = []
        pending = False
        for item in work:
            if item == marker:
                pending = True
            elif pending:
                out.append(combine(out.pop(), item))
                pending = False
            else:
                out.append(item)
        return out

    def star(self, frag: _Fragment) -> _Fragment:
        start, accept = self.new_state(), self.new_state()
        self.add(start, EPSILON, frag.start)
        self.add(start, EPSILON, accept)
        if frag.accept is not None:
            self.add(frag.accept, EPSILON, frag.start)
            self.add(frag.accept, EPSILON, accept)
        return _Fragment(start, accept)

    def concat(self, left: _Fragment, right: _Fragment) -> _Fragment:
        if left.accept is not None:
            self.add(left.accept, EPSILON, right.start)
        return _Fragment(left.start, right.accept)

    def union(self, left: _Fragment, right: _Fragment) -> _Fragment:
        start, accept = self.new_state(), self.new_state()
        self.add(start, EPSILON, left.start)
        self.add(start, EPSILON, right.start)
        if left.accept is not None:
            self.add(left.accept, EPSILON, accept)
        if right.accept is not None:
            self.add(right.accept, EPSILON, accept)
        return _Fragment(start, accept)


def compile(regex: str, reserved: ReservedSymbols = DEFAULT_RESERVED) -> Nfa:
    """Compile a validated pattern into an Nfa; raises RegexSyntaxError."""
    check(regex, reserved)
    builder = _NfaBuilder(reserved)
    frag = builder.fragment(regex)
    accepts = frozenset() if frag.accept is None else frozenset({frag.accept})
    return Nfa(
        state_count=builder.count,
        alphabet=frozenset(builder.alphabet),
        transitions={key: frozenset(val) for key, val in builder.transitions.items()},
        start=frag.start,
        accepts=accepts,
    )


def epsilon_closure(current: StateSet, nfa: Nfa) -> StateSet:
    """Least superset of `current` closed under epsilon moves.

    The membership check before insertion makes epsilon cycles terminate.
    """
    closed = set(current)
    stack = list(current)
    while stack:
        state = stack.pop()
        for nxt in nfa.transitions.get((state, EPSILON), ()):
            if nxt not in closed:
                closed.add(nxt)
                stack.append(nxt)
    return frozenset(closed)


def transit(symbol: str, current: StateSet, nfa: Nfa) -> StateSet:
    """All states one `symbol` move away from `current`.

    Epsilon returns `current` unchanged; epsilon reachability is the closure
    operation's job, not this one's.
    """
    if symbol == EPSILON:
        return current
    moved: set[int] = set()
    for state in current:
        moved.update(nfa.transitions.get((state, symbol), ()))
    return frozenset(moved)


def accepts(nfa: Nfa, w: str) -> bool:
    """Membership of `w`: closure, then per-symbol transit+closure steps.

    Characters outside the alphabet have no transitions and force rejection.
    """
    current = epsilon_closure(frozenset({nfa.start}), nfa)
    for ch in w:
        if not current:
            return False
        current = epsilon_closure(transit(ch, current, nfa), nfa)
    return bool(current & nfa.accepts)


def determinize(nfa: Nfa, state_cap: int = DEFAULT_STATE_CAP) -> Dfa:
    """Subset construction over epsilon closures, completed with a dead state.

    Only reachable subsets are materialized; ids follow discovery order with
    symbols scanned in sorted order, so the result is reproducible. Raises
    ResourceLimitError when more than `state_cap` subsets appear.
    """
    alphabet = tuple(sorted(nfa.alphabet))
    start_set = epsilon_closure(frozenset({nfa.start}), nfa)
    index: dict[StateSet, int] = {start_set: 0}
    order: list[StateSet] = [start_set]
    transitions: dict[tuple[int, str], int] = {}
    queue: deque[StateSet] = deque([start_set])
    while queue:
        subset = queue.popleft()
        src = index[subset]
        for ch in alphabet:
            nxt = epsilon_closure(transit(ch, subset, nfa), nfa)
            if nxt not in index:
                if len(order) >= state_cap:
                    raise ResourceLimitError(
                        "determinization",
                        f"determinization blow-up: more than {state_cap} subsets")
                index[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            transitions[(src, ch)] = index[nxt]
    empty: StateSet = frozenset()
    if empty not in index:
        index[empty] = len(order)
        order.append(empty)
        for ch in alphabet:
            transitions[(index[empty], ch)] = index[empty]
    return Dfa(
        state_count=len(order),
        alphabet=alphabet,
        transitions=transitions,
        start=0,
        accepts=frozenset(i for i, subset in enumerate(order) if subset & nfa.accepts),
        dead=index[empty],
    )


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_graph(nfa: Nfa, reserved: ReservedSymbols = DEFAULT_RESERVED) -> str:
    """Deterministic DOT digraph for the automaton.

    One node per state (accept states double-circled), an unlabeled arrow
    from a point marker into the start state, and one labeled edge per
    transition; epsilon edges carry the configured epsilon character. Output
    is byte-identical for equal automata (states and edges fully sorted).
    """
    lines = [
        "digraph nfa {",
        "  rankdir=LR;",
        '  entry [shape=point label=""];',
        f"  entry -> s{nfa.start};",
    ]
    for state in nfa.states:
        shape = "doublecircle" if state in nfa.accepts else "circle"
        lines.append(f"  s{state} [shape={shape} label={_quote(str(state))}];")
    edges = [
        (src, label, dst)
        for (src, label), dsts in nfa.transitions.items()
        for dst in dsts
    ]
    for src, label, dst in sorted(edges):
        text = reserved.epsilon if label == EPSILON else label
        lines.append(f"  s{src} -> s{dst} [label={_quote(text)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
