"""Exception types shared across the package."""

from __future__ import annotations


class RegexSyntaxError(ValueError):
    """Raised when an operation receives a pattern that fails validation.

    Carries the full issue list from ``syntax.validate``; ``position`` is the
    0-based offset of the first issue.
    """

    def __init__(self, issues):
        self.issues = list(issues)
        first = self.issues[0]
        super().__init__(f"{first.message} at position {first.position}")

    @property
    def position(self) -> int:
        return self.issues[0].position


class ResourceLimitError(RuntimeError):
    """A configured resource cap was exceeded (determinization, enumeration
    frontier, or product construction); signals a pathological input rather
    than a wrong one."""

    def __init__(self, limit_kind: str, message: str):
        self.limit_kind = limit_kind
        super().__init__(message)
