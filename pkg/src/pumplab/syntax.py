"""Restricted regular-expression syntax.

Patterns are plain strings over single-character symbols. Seven characters
are reserved (union, concatenation, star, empty language, empty string, and
the two parentheses); everything else printable is an alphabet symbol. This
module validates raw patterns, flattens them into segment lists, parses them
into syntax trees, and provides a brute-force matcher that serves as an
independent semantic oracle for the automaton pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RegexSyntaxError


@dataclass(frozen=True)
class ReservedSymbols:
    """The characters with special meaning; none may appear in an alphabet."""

    union: str = "U"
    concat: str = "."
    star: str = "*"
    empty_language: str = "\\"
    epsilon: str = "e"
    open_paren: str = "("
    close_paren: str = ")"

    def __post_init__(self):
        chars = self._all()
        if any(len(c) != 1 for c in chars):
            raise ValueError("reserved symbols must be single characters")
        if len(set(chars)) != len(chars):
            raise ValueError("reserved symbols must be pairwise distinct")

    def _all(self) -> tuple[str, ...]:
        return (self.union, self.concat, self.star, self.empty_language,
                self.epsilon, self.open_paren, self.close_paren)

    def is_reserved(self, ch: str) -> bool:
        return ch in self._all()


DEFAULT_RESERVED = ReservedSymbols()


@dataclass(frozen=True)
class SyntaxIssue:
    """One validation problem, anchored at a 0-based character position."""

    position: int
    message: str


def validate(regex: str, reserved: ReservedSymbols = DEFAULT_RESERVED) -> list[SyntaxIssue]:
    """Check a raw pattern. Returns [] when well formed; never raises.

    Rejects unbalanced parentheses, operators missing an operand (leading
    star or union, trailing or doubled binary operators), empty parenthesis
    groups, non-printable characters, and the empty pattern (the empty string
    is written with the epsilon character, not with zero characters).
    """
    if regex == "":
        return [SyntaxIssue(0, "empty pattern (the empty string is written "
                               f"{reserved.epsilon!r})")]
    issues: list[SyntaxIssue] = []
    opens: list[int] = []       # positions of currently unmatched '('
    prev = "start"              # start | operand | binop | open
    last_op_pos = -1
    for i, ch in enumerate(regex):
        if ch == reserved.open_paren:
            opens.append(i)
            prev = "open"
        elif ch == reserved.close_paren:
            if not opens:
                issues.append(SyntaxIssue(i, "unmatched closing parenthesis"))
            else:
                start = opens.pop()
                if prev == "open":
                    issues.append(SyntaxIssue(start, "empty parentheses group"))
                elif prev == "binop":
                    issues.append(SyntaxIssue(last_op_pos, "operator missing right operand"))
            prev = "operand"
        elif ch == reserved.star:
            if prev != "operand":
                issues.append(SyntaxIssue(i, "star without preceding operand"))
            prev = "operand"
        elif ch == reserved.union or ch == reserved.concat:
            if prev != "operand":
                issues.append(SyntaxIssue(i, "operator missing left operand"))
            prev = "binop"
            last_op_pos = i
        else:
            if not ch.isprintable():
                issues.append(SyntaxIssue(i, "non-printable character"))
            prev = "operand"
    if prev == "binop":
        issues.append(SyntaxIssue(last_op_pos, "operator missing right operand"))
    for pos in opens:
        issues.append(SyntaxIssue(pos, "unmatched opening parenthesis"))
    issues.sort(key=lambda issue: issue.position)
    return issues


def check(regex: str, reserved: ReservedSymbols = DEFAULT_RESERVED) -> None:
    """Raise RegexSyntaxError if the pattern does not validate."""
    issues = validate(regex, reserved)
    if issues:
        raise RegexSyntaxError(issues)


@dataclass(frozen=True)
class SegmentList:
    """Flat segmentation of a pattern: sub-expression strings interleaved
    with single-character operator markers (union, concat, star).

    A one-character item equal to an operator character is that operator;
    any other item is a sub-expression (reserved characters cannot be
    alphabet symbols, so the classification is unambiguous).
    """

    items: tuple[str, ...]
    reserved: ReservedSymbols = DEFAULT_RESERVED

    def is_operator(self, item: str) -> bool:
        r = self.reserved
        return item in (r.union, r.concat, r.star)


def parse_segments(regex: str, reserved: ReservedSymbols = DEFAULT_RESERVED) -> SegmentList:
    """Flatten a validated pattern into a SegmentList.

    Parenthesized groups become single isolated segments (outer parentheses
    stripped); concatenation markers are inserted explicitly wherever two
    segments are adjacent without an operator between them.
    """
    check(regex, reserved)
    return SegmentList(tuple(_segment_items(regex, reserved)), reserved)


def _segment_items(regex: str, reserved: ReservedSymbols) -> list[str]:
    # Assumes the pattern already validated.
    items: list[str] = []
    depth = 0
    temp = ""
    for i, ch in enumerate(regex):
        if ch == reserved.open_paren:
            depth += 1
            if depth == 1:
                continue
        elif ch == reserved.close_paren:
            depth -= 1
            if depth == 0:
                items.append(temp)
                temp = ""
                if _marker_needed(regex, i, temp_was_operator=False, reserved=reserved):
                    items.append(reserved.concat)
                continue
        temp += ch
        if depth == 0:
            items.append(temp)
            was_op = temp in (reserved.union, reserved.concat)
            temp = ""
            if _marker_needed(regex, i, temp_was_operator=was_op, reserved=reserved):
                items.append(reserved.concat)
    return items


def _marker_needed(regex: str, i: int, temp_was_operator: bool,
                   reserved: ReservedSymbols) -> bool:
    # A concatenation marker follows a completed segment unless the segment
    # was itself a binary operator or the next character continues/ends the
    # current expression (star, union, explicit concat, closing parenthesis).
    if temp_was_operator or i >= len(regex) - 1:
        return False
    nxt = regex[i + 1]
    return nxt not in (reserved.star, reserved.union, reserved.concat,
                       reserved.close_paren)


class RegexAst:
    """Base class for syntax-tree nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class EmptyLanguage(RegexAst):
    pass


@dataclass(frozen=True)
class Epsilon(RegexAst):
    pass


@dataclass(frozen=True)
class Symbol(RegexAst):
    char: str


@dataclass(frozen=True)
class Union(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Concat(RegexAst):
    left: RegexAst
    right: RegexAst


@dataclass(frozen=True)
class Star(RegexAst):
    child: RegexAst


def parse_ast(regex: str, reserved: ReservedSymbols = DEFAULT_RESERVED) -> RegexAst:
    """Parse a validated pattern into a RegexAst.

    Precedence: star binds tightest, then concatenation, then union.
    Binary operators associate to the right; the language is unaffected.
    """
    check(regex, reserved)
    parser = _AstParser(regex, reserved)
    node = parser.parse_union()
    if parser.pos != len(regex):  # unreachable after validation
        raise RegexSyntaxError([SyntaxIssue(parser.pos, "unexpected character")])
    return node


class _AstParser:
    def __init__(self, text: str, reserved: ReservedSymbols):
        self.text = text
        self.r = reserved
        self.pos = 0

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse_union(self) -> RegexAst:
        node = self.parse_concat()
        if self.peek() == self.r.union:
            self.pos += 1
            return Union(node, self.parse_union())
        return node

    def parse_concat(self) -> RegexAst:
        factors = [self.parse_starred()]
        while True:
            ch = self.peek()
            if ch == self.r.concat:
                self.pos += 1
                factors.append(self.parse_starred())
            elif ch is not None and ch not in (self.r.union, self.r.close_paren):
                factors.append(self.parse_starred())
            else:
                break
        node = factors[-1]
        for factor in reversed(factors[:-1]):
            node = Concat(factor, node)
        return node

    def parse_starred(self) -> RegexAst:
        node = self.parse_atom()
        while self.peek() == self.r.star:
            self.pos += 1
            node = Star(node)
        return node

    def parse_atom(self) -> RegexAst:
        ch = self.peek()
        if ch == self.r.open_paren:
            self.pos += 1
            node = self.parse_union()
            self.pos += 1  # validated: the matching ')'
            return node
        self.pos += 1
        if ch == self.r.epsilon:
            return Epsilon()
        if ch == self.r.empty_language:
            return EmptyLanguage()
        return Symbol(ch)


def render(node: RegexAst, reserved: ReservedSymbols = DEFAULT_RESERVED) -> str:
    """Raw pattern that parse_ast maps back to `node` (structurally equal)."""
    r = reserved

    def group(text: str) -> str:
        return r.open_paren + text + r.close_paren

    match node:
        case EmptyLanguage():
            return r.empty_language
        case Epsilon():
            return r.epsilon
        case Symbol(char):
            return char
        case Star(child):
            inner = render(child, r)
            if isinstance(child, (Symbol, Epsilon, EmptyLanguage)):
                return inner + r.star
            return group(inner) + r.star
        case Concat(left, right):
            lhs = render(left, r)
            # Left-nested concat must keep its grouping under the
            # right-associative parse; union is lower precedence.
            if isinstance(left, (Union, Concat)):
                lhs = group(lhs)
            rhs = render(right, r)
            if isinstance(right, Union):
                rhs = group(rhs)
            return lhs + rhs
        case Union(left, right):
            lhs = render(left, r)
            if isinstance(left, Union):
                lhs = group(lhs)
            return lhs + r.union + render(right, r)
    raise TypeError(f"not a RegexAst node: {node!r}")


class OracleMatcher:
    """Brute-force matcher over a syntax tree, memoized per instance.

    Tries every split point for concatenation and star, so it depends on
    nothing but the tree and standard regular-expression semantics. Keep one
    instance per tree when matching many strings; the memo table is shared
    across calls.
    """

    def __init__(self, ast: RegexAst):
        self.ast = ast
        self._memo: dict[tuple[RegexAst, str], bool] = {}

    def match(self, w: str) -> bool:
        return self._match(self.ast, w)

    def _match(self, node: RegexAst, s: str) -> bool:
        key = (node, s)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        match node:
            case EmptyLanguage():
                out = False
            case Epsilon():
                out = s == ""
            case Symbol(char):
                out = s == char
            case Union(left, right):
                out = self._match(left, s) or self._match(right, s)
            case Concat(left, right):
                out = any(self._match(left, s[:i]) and self._match(right, s[i:])
                          for i in range(len(s) + 1))
            case Star(child):
                # First chunk is non-empty, so recursion strictly shrinks s.
                out = s == "" or any(
                    self._match(child, s[:i]) and self._match(node, s[i:])
                    for i in range(1, len(s) + 1))
            case _:
                raise TypeError(f"not a RegexAst node: {node!r}")
        self._memo[key] = out
        return out


def oracle_match(ast: RegexAst, w: str) -> bool:
    """One-shot brute-force membership check of `w` against `ast`."""
    return OracleMatcher(ast).match(w)
