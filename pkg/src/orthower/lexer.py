"""Lexer: split a string into categorised tokens without losing a character.

Splitting rules, in order of precedence while scanning a word core:

* letters and digits extend the core (combining marks stay attached to their
  base character);
* ``.`` or ``,`` between two digits stays inside a number ("3.14", "1,000");
* a period after a known abbreviation or a single letter stays attached to
  the word ("Mrs.", "e.g.", "J."), and the token ends right after it;
* ``'`` and ``-`` (and the curly apostrophe) stay inside a word only between
  two letters ("won't", "ice-cream").

Sentence punctuation and per-cent/currency signs form their own tokens.
Everything else (spaces, quotes, brackets, dashes, ...) is affix material:
non-whitespace directly after a core becomes that token's suffix, and from
the first whitespace onwards it becomes the next token's prefix. Trailing
text with no following token joins the last token's suffix, so concatenating
``prefix + raw + suffix`` over the list always rebuilds the input. An input
with no core characters at all (e.g. only spaces) yields no tokens.
"""

from __future__ import annotations

import unicodedata
from functools import lru_cache

from .lexicons import default_lexicons
from .tokens import SENTENCE_PUNCTUATION, SYMBOL_CHARS, Token, TokenKind

_APOSTROPHES = {"'", "’"}
_IN_WORD_JOINERS = _APOSTROPHES | {"-"}


def _is_letter(ch: str) -> bool:
    return len(ch) == 1 and unicodedata.category(ch).startswith("L")


def _is_digit(ch: str) -> bool:
    return len(ch) == 1 and unicodedata.category(ch) == "Nd"


def _is_mark(ch: str) -> bool:
    return len(ch) == 1 and unicodedata.category(ch).startswith("M")


def _unit_end(source: str, i: int) -> int:
    """End offset of the character at ``i`` plus its combining marks."""
    j = i + 1
    while j < len(source) and _is_mark(source[j]):
        j += 1
    return j


def _prev_base(source: str, i: int) -> str:
    """Base character before offset ``i``, skipping combining marks."""
    j = i - 1
    while j >= 0 and _is_mark(source[j]):
        j -= 1
    return source[j] if j >= 0 else ""


class _AbbrevMatcher:
    """Period-absorption decisions for a fixed abbreviation lexicon."""

    def __init__(self, entries: frozenset[str]):
        self.entries = entries
        self.prefixes = {e[:k] for e in entries for k in range(1, len(e))}

    def is_entry(self, candidate: str) -> bool:
        return candidate in self.entries

    def can_extend(self, candidate: str) -> bool:
        return candidate in self.prefixes


@lru_cache(maxsize=8)
def _abbrev_matcher(entries: frozenset[str]) -> _AbbrevMatcher:
    return _AbbrevMatcher(entries)


def _number_core(core: str) -> bool:
    if not core or not _is_digit(core[0]) or not _is_digit(core[-1]):
        return False
    return all(_is_digit(ch) or ch in ".," for ch in core)


def _scan_core(source: str, start: int, abbrev: _AbbrevMatcher) -> int:
    """Scan a word/number core beginning at ``start``; return its end offset."""
    n = len(source)
    i = _unit_end(source, start)
    while i < n:
        ch = source[i]
        if _is_letter(ch) or _is_digit(ch):
            i = _unit_end(source, i)
            continue
        nxt = source[i + 1] if i + 1 < n else ""
        if ch in ".," and _is_digit(_prev_base(source, i)) and _is_digit(nxt):
            i += 1
            continue
        if ch == ".":
            core = source[start:i]
            candidate = (core + ".").lower()
            single_letter = len(core) == 1 and _is_letter(core)
            if abbrev.is_entry(candidate) or single_letter or (
                _is_letter(nxt) and abbrev.can_extend(candidate)
            ):
                i += 1
                # "e." may grow into "e.g."; otherwise the token ends here.
                if _is_letter(nxt) and abbrev.can_extend(candidate):
                    continue
            break
        if ch in _IN_WORD_JOINERS and _is_letter(_prev_base(source, i)) and _is_letter(nxt):
            i += 1
            continue
        break
    return i


def tokenize(source: str, abbreviations: frozenset[str] | None = None) -> list[Token]:
    """Parse ``source`` into Word/Number/Punctuation/Symbol tokens.

    ``abbreviations`` overrides the known-abbreviation spellings used by the
    period rule; by default they come from the packaged lexicon.
    """
    if abbreviations is None:
        abbreviations = default_lexicons().abbreviation_keys()
    abbrev = _abbrev_matcher(frozenset(abbreviations))

    # prefix, core, kind, suffix — assembled into Tokens once affixes settle.
    parts: list[list] = []
    pending = ""
    suffix_open = False
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if _is_letter(ch) or _is_digit(ch):
            end = _scan_core(source, i, abbrev)
            core = source[i:end]
            kind = TokenKind.NUMBER if _number_core(core) else TokenKind.WORD
            parts.append([pending, core, kind, ""])
            pending = ""
            suffix_open = True
            i = end
        elif ch in SENTENCE_PUNCTUATION:
            parts.append([pending, ch, TokenKind.PUNCTUATION, ""])
            pending = ""
            suffix_open = True
            i += 1
        elif ch in SYMBOL_CHARS:
            parts.append([pending, ch, TokenKind.SYMBOL, ""])
            pending = ""
            suffix_open = True
            i += 1
        else:
            if suffix_open and parts and not ch.isspace():
                parts[-1][3] += ch
            else:
                suffix_open = False
                pending += ch
            i += 1
    if pending and parts:
        parts[-1][3] += pending

    tokens: list[Token] = []
    offset = 0
    for prefix, core, kind, suffix in parts:
        end = offset + len(prefix) + len(core) + len(suffix)
        tokens.append(
            Token(
                kind=kind,
                raw=core,
                value=core,
                prefix=prefix,
                suffix=suffix,
                span=(offset, end),
            )
        )
        offset = end
    return tokens
