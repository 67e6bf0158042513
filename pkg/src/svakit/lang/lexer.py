"""Tokenizer for the accepted assertion grammar."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Diagnostic, ParseError

KEYWORDS = frozenset(
    {
        "posedge",
        "negedge",
        "disable",
        "iff",
        "not",
        "and",
        "or",
        "until",
        "within",
        "var",
    }
)

# Multi-character operators, longest first so prefixes do not shadow them.
_OPERATORS = (
    "|->",
    "|=>",
    "##",
    "&&",
    "||",
    "==",
    "!=",
    "[->",
    "[*",
    "[=",
    "@",
    "(",
    ")",
    "[",
    "]",
    ":",
    ",",
    "=",
    "!",
    "$",
)


@dataclass(frozen=True)
class Token:
    kind: str  # "id" | "kw" | "int" | "sysfunc" | "op" | "eof"
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into tokens, raising :class:`ParseError` on bad input.

    Whitespace, ``// ...`` line comments, and ``/* ... */`` block comments
    are skipped.
    """
    tokens: list[Token] = []
    i = 0
    line = 1
    col = 1
    n = len(text)

    def advance(count: int) -> None:
        nonlocal i, line, col
        for _ in range(count):
            if text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        if text.startswith("//", i):
            while i < n and text[i] != "\n":
                advance(1)
            continue
        if text.startswith("/*", i):
            start_line, start_col = line, col
            advance(2)
            while i < n and not text.startswith("*/", i):
                advance(1)
            if i >= n:
                raise ParseError(
                    [Diagnostic(start_line, start_col, "unterminated block comment", "/*")]
                )
            advance(2)
            continue
        if ch.isalpha() or ch == "_":
            start = i
            start_line, start_col = line, col
            while i < n and (text[i].isalnum() or text[i] == "_"):
                advance(1)
            word = text[start:i]
            kind = "kw" if word in KEYWORDS else "id"
            tokens.append(Token(kind, word, start_line, start_col))
            continue
        if ch.isdigit():
            start = i
            start_line, start_col = line, col
            while i < n and text[i].isdigit():
                advance(1)
            tokens.append(Token("int", text[start:i], start_line, start_col))
            continue
        if ch == "$" and i + 1 < n and (text[i + 1].isalpha() or text[i + 1] == "_"):
            start = i
            start_line, start_col = line, col
            advance(1)
            while i < n and (text[i].isalnum() or text[i] == "_"):
                advance(1)
            tokens.append(Token("sysfunc", text[start:i], start_line, start_col))
            continue
        for op in _OPERATORS:
            if text.startswith(op, i):
                tokens.append(Token("op", op, line, col))
                advance(len(op))
                break
        else:
            raise ParseError([Diagnostic(line, col, f"unknown character {ch!r}", ch)])

    tokens.append(Token("eof", "", line, col))
    return tokens
