"""Shared error types and the work-budget convention.

Long-running exact computations (Buchberger, symbolic minors) run under a
work budget so that nontermination risk becomes a reported error instead of
a hang.  The default budget can be overridden per call or globally through
the SUPERTT_BUDGET environment variable.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 200_000


class SuperttError(Exception):
    pass


class BudgetExceededError(SuperttError):
    """A computation exceeded its work budget (exit code 3 at the CLI)."""


class OracleDisagreementError(SuperttError):
    """Two independent computations of the same fact disagree.

    This always signals an implementation bug, never a mathematical
    ambiguity, and is therefore a hard error (exit code 1 at the CLI).
    """


class ParseError(SuperttError):
    """CLI expression error; carries the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.text = text
        self.pos = pos

    def caret_diagnostic(self) -> str:
        return f"{self.text}\n{' ' * self.pos}^ {self.args[0]}"


def default_budget() -> int:
    env = os.environ.get("SUPERTT_BUDGET")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return DEFAULT_BUDGET
