"""Token model shared by the whole pipeline.

A token keeps the original characters it was lexed from (``raw``) plus any
surrounding non-word characters (``prefix``/``suffix``), so the source string
can always be rebuilt from a token list. The ``value`` field is what gets
compared during alignment; normalisers rewrite it and leave a trail of their
names behind.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

# Sentence punctuation: the only characters that form Punctuation tokens.
SENTENCE_PUNCTUATION = frozenset(".,!?;:")

# Per-cent and currency signs form Symbol tokens; anything else that is not a
# word character is absorbed into token prefixes/suffixes.
SYMBOL_CHARS = frozenset("%$€£¥")


class TokenKind(Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"
    SYMBOL = "symbol"


@dataclass(frozen=True)
class Token:
    """One categorised unit of text.

    ``prefix + raw + suffix`` reproduces the exact characters the token was
    read from; ``span`` is the half-open offset range of that full extent in
    the source string. ``value`` starts out equal to ``raw`` and is only
    changed by normalisers, each of which appends its name to
    ``normalisations``.
    """

    kind: TokenKind
    raw: str
    value: str
    prefix: str = ""
    suffix: str = ""
    normalisations: tuple[str, ...] = ()
    span: tuple[int, int] = (0, 0)

    @property
    def is_punctuation(self) -> bool:
        return self.kind is TokenKind.PUNCTUATION

    def with_value(self, value: str, normaliser: str) -> "Token":
        """Copy of this token with a rewritten value and an extended trail."""
        if value == self.value:
            return self
        return replace(self, value=value, normalisations=self.normalisations + (normaliser,))


def rejoin(tokens: list[Token]) -> str:
    """Rebuild the source text of a token list (the non-destructive oracle)."""
    return "".join(t.prefix + t.raw + t.suffix for t in tokens)


def merge_tokens(tokens: list[Token], value: str, kind: TokenKind, normaliser: str) -> Token:
    """Merge consecutive tokens into one, preserving every original character.

    The merged token keeps the first token's prefix and span and the last
    token's suffix; the characters in between (inner affixes included) become
    the merged ``raw``, so rejoin() still reproduces the source. Trails are
    concatenated and the merging normaliser appended.
    """
    if not tokens:
        raise ValueError("cannot merge an empty token run")
    first, last = tokens[0], tokens[-1]
    # Inner affixes belong to the merged raw so nothing is lost.
    raw = first.raw
    for prev, tok in zip(tokens, tokens[1:]):
        raw += prev.suffix + tok.prefix + tok.raw
    trail: tuple[str, ...] = ()
    for tok in tokens:
        trail += tok.normalisations
    return Token(
        kind=kind,
        raw=raw,
        value=value,
        prefix=first.prefix,
        suffix=last.suffix,
        normalisations=trail + (normaliser,),
        span=first.span,
    )
