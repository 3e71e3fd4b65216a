"""Shared helpers: token factories and deterministic fuzz-text generation."""

import random

import pytest

from orthower.tokens import Token, TokenKind


def word(value, **kwargs):
    return Token(kind=TokenKind.WORD, raw=value, value=value, **kwargs)


def number(value, **kwargs):
    return Token(kind=TokenKind.NUMBER, raw=value, value=value, **kwargs)


def punct(value, **kwargs):
    return Token(kind=TokenKind.PUNCTUATION, raw=value, value=value, **kwargs)


def symbol(value, **kwargs):
    return Token(kind=TokenKind.SYMBOL, raw=value, value=value, **kwargs)


_WORDS = [
    "the", "cat", "sat", "on", "a", "mat", "Hello", "world", "colour",
    "won't", "Mrs.", "ice-cream", "Fähre", "naïve", "QUIET", "running",
    "e.g.", "two", "thousand", "dollars", "fifty", "percent", "hmm",
]
_AFFIX_BITS = [
    " ", "  ", "\t", "\n", " — ", "—", '"', "“", "”",
    "‘", "’", "(", ")", "[", "]", "<", ">", "«", "»",
    " -- ", "…", "–",
]
_CORES = ["3.14", "1,000", "42", "$", "%", "€", ".", ",", "!", "?", ";", ":"]


def fuzz_text(rng: random.Random) -> str:
    """A transcript-like string: words, numbers, punctuation, unicode affixes."""
    pieces = []
    for _ in range(rng.randint(1, 14)):
        roll = rng.random()
        if roll < 0.55:
            pieces.append(rng.choice(_WORDS))
        elif roll < 0.75:
            pieces.append(rng.choice(_CORES))
        else:
            pieces.append(rng.choice(_AFFIX_BITS))
        if rng.random() < 0.7:
            pieces.append(" ")
    pieces.append(rng.choice(_WORDS))  # guarantee at least one token
    return "".join(pieces)


@pytest.fixture(scope="session")
def fuzz_corpus():
    rng = random.Random(20240817)
    return [fuzz_text(rng) for _ in range(2000)]
