"""Diagnostics shared by the lexer, parser, and syntax gate."""

from __future__ import annotations

from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class Diagnostic:
    """A single problem found in an assertion source text.

    ``line`` and ``col`` are 1-based. ``token`` is the offending token text
    ("" when the problem is positional, e.g. unexpected end of input).
    """

    line: int
    col: int
    message: str
    token: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        return {"line": d["line"], "col": d["col"], "token": d["token"], "message": d["message"]}

    def __str__(self) -> str:
        where = f"{self.line}:{self.col}"
        if self.token:
            return f"{where}: {self.message} (at '{self.token}')"
        return f"{where}: {self.message}"


class ParseError(Exception):
    """Raised when an assertion unit cannot be parsed.

    Carries the diagnostics so callers that prefer values over exceptions
    (the syntax gate, the repair loop) can recover them.
    """

    def __init__(self, diagnostics: list[Diagnostic]):
        self.diagnostics = list(diagnostics)
        first = self.diagnostics[0] if self.diagnostics else None
        super().__init__(str(first) if first else "parse error")
