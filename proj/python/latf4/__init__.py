"""Noncommutative Groebner bases by lattice completion of reduction operators."""

from ._latf4 import (
    CompletionResult,
    Error,
    ParseError,
    Presentation,
    complete,
    oracle,
    parse,
)

__all__ = [
    "CompletionResult",
    "Error",
    "ParseError",
    "Presentation",
    "complete",
    "oracle",
    "parse",
]
