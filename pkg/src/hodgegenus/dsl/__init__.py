"""Input language: ``let`` bindings, queries and assertions."""
from .evaluator import AssertionFailed, Evaluator, Result, to_json, to_text
from .lexer import Diagnostic, DslError, tokenize
from .parser import QUERY_KINDS, Script, parse

__all__ = [
    "AssertionFailed",
    "Diagnostic",
    "DslError",
    "Evaluator",
    "QUERY_KINDS",
    "Result",
    "Script",
    "parse",
    "to_json",
    "to_text",
    "tokenize",
]
