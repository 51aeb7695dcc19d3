"""Exact optimization over van der Corput exponent pairs."""

from ._core import (
    apply_operator,
    catalog,
    delta,
    eval_word,
    generation,
    gray_words,
    mu,
    optimize,
    thm4,
    thm6,
    word_to_string,
    xi,
)

__all__ = [
    "apply_operator",
    "catalog",
    "delta",
    "eval_word",
    "generation",
    "gray_words",
    "mu",
    "optimize",
    "thm4",
    "thm6",
    "word_to_string",
    "xi",
]
