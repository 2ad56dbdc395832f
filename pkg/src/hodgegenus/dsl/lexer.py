"""Tokenizer for the input language.

Newlines are significant only outside brackets; ``#`` starts a comment.
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Token", "Diagnostic", "DslError", "tokenize"]

PUNCT2 = ("==", "!=")
PUNCT1 = "(){}[],;:=+-*/^"
OPEN = {"(": ")", "{": "}", "[": "]"}
CLOSE = {v: k for k, v in OPEN.items()}
HYPHENATED = ("trivial-monodromy",)


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, IDENT, STRING, OP, NEWLINE, EOF
    text: str
    line: int
    col: int

    def __str__(self):
        return "end of input" if self.kind == "EOF" else ("newline" if self.kind == "NEWLINE" else repr(self.text))


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    line: int
    col: int
    code: str
    message: str

    def __str__(self):
        where = f"{self.line}:{self.col}: " if self.line else ""
        return f"{where}{self.severity} [{self.code}] {self.message}"

    def to_json(self) -> dict:
        return {"severity": self.severity, "line": self.line, "col": self.col,
                "code": self.code, "message": self.message}


class DslError(Exception):
    """Carries one or more diagnostics; ``stage`` picks the exit code."""

    def __init__(self, diagnostics, stage: str = "parse"):
        self.diagnostics = list(diagnostics)
        self.stage = stage
        super().__init__("; ".join(str(d) for d in self.diagnostics))


def _err(line, col, code, msg):
    return DslError([Diagnostic("error", line, col, code, msg)])


def tokenize(source: str) -> list[Token]:
    out: list[Token] = []
    stack: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            if not stack and out and out[-1].kind != "NEWLINE":
                out.append(Token("NEWLINE", "\n", line, col))
            i, line, col = i + 1, line + 1, 1
            continue
        if c in " \t\r":
            i, col = i + 1, col + 1
            continue
        if c == "#":
            while i < n and source[i] != "\n":
                i += 1
            continue
        start = col
        if c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            out.append(Token("NUM", source[i:j], line, start))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            for h in HYPHENATED:
                if source.startswith(h, i):
                    word, j = h, i + len(h)
            out.append(Token("IDENT", word, line, start))
            col += j - i
            i = j
            continue
        if c == '"':
            j = i + 1
            while j < n and source[j] not in '"\n':
                j += 1
            if j >= n or source[j] != '"':
                raise _err(line, start, "E-LEX", "unterminated string literal")
            out.append(Token("STRING", source[i + 1:j], line, start))
            col += j + 1 - i
            i = j + 1
            continue
        two = source[i:i + 2]
        if two in PUNCT2:
            out.append(Token("OP", two, line, start))
            i, col = i + 2, col + 2
            continue
        if c in PUNCT1:
            tok = Token("OP", c, line, start)
            if c in OPEN:
                stack.append(tok)
            elif c in CLOSE:
                if not stack:
                    raise _err(line, start, "E-BRACKET", f"unmatched {c!r}")
                if OPEN[stack[-1].text] != c:
                    o = stack[-1]
                    raise _err(o.line, o.col, "E-BRACKET",
                               f"{o.text!r} opened here is closed by {c!r} at {line}:{start}")
                stack.pop()
            out.append(tok)
            i, col = i + 1, col + 1
            continue
        raise _err(line, start, "E-LEX", f"unexpected character {c!r}")
    if stack:
        o = stack[-1]
        raise _err(o.line, o.col, "E-UNCLOSED", f"{o.text!r} is never closed")
    if out and out[-1].kind != "NEWLINE":
        out.append(Token("NEWLINE", "\n", line, col))
    out.append(Token("EOF", "", line, col))
    return out
