"""Non-destructive token normalisers.

Each normaliser rewrites, splits, merges, or removes tokens while keeping
the original characters in ``raw``/``prefix``/``suffix`` and appending its
name to the trail of anything it touched. Removed tokens are kept on the
side so reports can count them and the source text stays reconstructible.

The chain order is fixed: removals first (annotations, interjections) so
later passes never see annotation text; value rewrites next; Numbers last
because it consumes the Symbol tokens the Symbols pass rewrites.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum

from . import numbers as num
from .lexicons import Lexicons, default_lexicons
from .tokens import Token, TokenKind, merge_tokens


class NormaliserId(Enum):
    ANNOTATIONS = "annotations"
    INTERJECTIONS = "interjections"
    ABBREVIATIONS = "abbreviations"
    CONTRACTIONS = "contractions"
    BRITISH_SPELLING = "british_spelling"
    DIACRITICS = "diacritics"
    SYMBOLS = "symbols"
    NUMBERS = "numbers"


ALL_NORMALISERS = frozenset(NormaliserId)


@dataclass(frozen=True)
class NormaliserConfig:
    """Which normalisers run; default is all of them."""

    enabled: frozenset[NormaliserId] = ALL_NORMALISERS

    @classmethod
    def none(cls) -> "NormaliserConfig":
        return cls(enabled=frozenset())

    @classmethod
    def without(cls, *disabled: NormaliserId) -> "NormaliserConfig":
        return cls(enabled=ALL_NORMALISERS - frozenset(disabled))

    @classmethod
    def from_names(cls, names: list[str]) -> "NormaliserConfig":
        ids = frozenset(NormaliserId(n.strip().lower().replace("-", "_")) for n in names if n.strip())
        return cls(enabled=ids)

    def is_enabled(self, normaliser: NormaliserId) -> bool:
        return normaliser in self.enabled


@dataclass(frozen=True)
class RemovedToken:
    token: Token
    normaliser: str


@dataclass
class NormalisationResult:
    tokens: list[Token]
    removed: list[RemovedToken] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        """Applications per normaliser: trail entries plus removals."""
        totals: dict[str, int] = {}
        for tok in self.tokens:
            for name in tok.normalisations:
                totals[name] = totals.get(name, 0) + 1
        for rem in self.removed:
            totals[rem.normaliser] = totals.get(rem.normaliser, 0) + 1
        return totals


def reconstruct(result: NormalisationResult) -> str:
    """Rebuild the source from surviving raws plus recorded removals.

    Only valid for results of a full chain run on lexer output: removals
    happen before any split/merge, so every removed token still carries its
    original span and can be slotted back in order.
    """
    everything = list(result.tokens) + [r.token for r in result.removed]
    everything.sort(key=lambda t: t.span)
    return "".join(t.prefix + t.raw + t.suffix for t in everything)


def _transfer_case(original: str, replacement: str) -> str:
    """Carry a leading capital from the original spelling to the replacement."""
    for ch in original:
        if ch.isalpha():
            if ch.isupper() and replacement and replacement[0].isalpha():
                return replacement[0].upper() + replacement[1:]
            break
    return replacement


def _expand(token: Token, expansion: str, name: str) -> list[Token]:
    """Replace a token's value, splitting on spaces into several tokens.

    The first part keeps the raw text, prefix, and span; the last part keeps
    the suffix; inner parts are value-only tokens with an empty raw.
    """
    parts = expansion.split()
    first_value = _transfer_case(token.value, parts[0])
    out: list[Token] = []
    for idx, part in enumerate(parts):
        value = first_value if idx == 0 else part
        out.append(
            Token(
                kind=TokenKind.WORD,
                raw=token.raw if idx == 0 else "",
                value=value,
                prefix=token.prefix if idx == 0 else "",
                suffix=token.suffix if idx == len(parts) - 1 else "",
                normalisations=(token.normalisations if idx == 0 else ()) + (name,),
                span=token.span,
            )
        )
    return out


# --- individual passes -----------------------------------------------------

_BRACKETS = {"(": ")", "[": "]", "<": ">"}


def _remove_annotations(tokens: list[Token]) -> tuple[list[Token], list[RemovedToken]]:
    name = NormaliserId.ANNOTATIONS.value
    kept: list[Token] = []
    removed: list[RemovedToken] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        closer = next((_BRACKETS[ch] for ch in tok.prefix if ch in _BRACKETS), None)
        if closer is not None:
            end = next((j for j in range(i, len(tokens)) if closer in tokens[j].suffix), None)
            if end is not None:
                removed.extend(RemovedToken(t, name) for t in tokens[i : end + 1])
                i = end + 1
                continue
        kept.append(tok)
        i += 1
    return kept, removed


def _remove_interjections(tokens: list[Token], lex: Lexicons) -> tuple[list[Token], list[RemovedToken]]:
    name = NormaliserId.INTERJECTIONS.value
    kept: list[Token] = []
    removed: list[RemovedToken] = []
    for tok in tokens:
        if tok.kind is TokenKind.WORD and tok.value.lower() in lex.interjections:
            removed.append(RemovedToken(tok, name))
        else:
            kept.append(tok)
    return kept, removed


def _apply_abbreviations(tokens: list[Token], lex: Lexicons) -> list[Token]:
    name = NormaliserId.ABBREVIATIONS.value
    out: list[Token] = []
    for tok in tokens:
        expansion = lex.abbreviations.get(tok.value.lower()) if tok.kind is TokenKind.WORD else None
        if expansion:
            out.extend(_expand(tok, expansion, name))
        else:
            out.append(tok)
    return out


def _apply_contractions(tokens: list[Token], lex: Lexicons) -> list[Token]:
    name = NormaliserId.CONTRACTIONS.value
    out: list[Token] = []
    for tok in tokens:
        key = tok.value.lower().replace("’", "'") if tok.kind is TokenKind.WORD else ""
        expansion = lex.contractions.get(key)
        if expansion:
            out.extend(_expand(tok, expansion, name))
        else:
            out.append(tok)
    return out


def _apply_british(tokens: list[Token], lex: Lexicons) -> list[Token]:
    name = NormaliserId.BRITISH_SPELLING.value
    out: list[Token] = []
    for tok in tokens:
        us = lex.uk_us.get(tok.value.lower()) if tok.kind is TokenKind.WORD else None
        if us:
            out.append(tok.with_value(_transfer_case(tok.value, us), name))
        else:
            out.append(tok)
    return out


def fold_diacritics(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def _apply_diacritics(tokens: list[Token]) -> list[Token]:
    name = NormaliserId.DIACRITICS.value
    out: list[Token] = []
    for tok in tokens:
        folded = fold_diacritics(tok.value)
        out.append(tok.with_value(folded, name) if folded != tok.value else tok)
    return out


_SYMBOL_WORDS = {"$": "dollars", "€": "euros", "£": "pounds", "¥": "yen", "%": "percent"}


def _apply_symbols(tokens: list[Token]) -> list[Token]:
    name = NormaliserId.SYMBOLS.value
    out: list[Token] = []
    for tok in tokens:
        if tok.kind is TokenKind.SYMBOL and tok.value in _SYMBOL_WORDS:
            out.append(
                replace(
                    tok,
                    kind=TokenKind.WORD,
                    value=_SYMBOL_WORDS[tok.value],
                    normalisations=tok.normalisations + (name,),
                )
            )
        else:
            out.append(tok)
    return out


# --- number merging ---------------------------------------------------------

_NAME = NormaliserId.NUMBERS.value


def _is_digit_number(tok: Token) -> bool:
    return tok.kind is TokenKind.NUMBER and all(ch.isdigit() or ch in ".," for ch in tok.value)


def _currency_symbol(tok: Token) -> str | None:
    if tok.kind is TokenKind.SYMBOL and tok.value in num.CURRENCY_SYMBOLS:
        return tok.value
    if tok.kind is TokenKind.WORD:
        return num.CURRENCY_WORDS.get(tok.value.lower())
    return None


def _percent_width(tokens: list[Token], i: int) -> int:
    """0 if no per-cent marker at ``i``; else how many tokens it spans."""
    if i >= len(tokens):
        return 0
    tok = tokens[i]
    if tok.kind is TokenKind.SYMBOL and tok.value == "%":
        return 1
    if tok.kind is TokenKind.WORD and tok.value.lower() in num.PERCENT_WORDS:
        return 1
    if (
        tok.kind is TokenKind.WORD
        and tok.value.lower() == "per"
        and i + 1 < len(tokens)
        and tokens[i + 1].kind is TokenKind.WORD
        and tokens[i + 1].value.lower() == "cent"
    ):
        return 2
    return 0


def _adjacent(left: Token, right: Token) -> bool:
    """Whether two tokens sit next to each other in the source.

    Lexer spans tile the input, so a gap can only come from a removal (or a
    split); merging across one would fabricate text that never existed and
    break reconstruction, so such runs are never merged.
    """
    return left.span[1] == right.span[0]


def normalise_numbers(tokens: list[Token]) -> list[Token]:
    """Merge spoken numbers, currency, and per-cent into canonical Number tokens."""
    out: list[Token] = []
    i = 0
    n = len(tokens)
    while i < n:
        tok = tokens[i]

        # Spoken word run: "two thousand", "twenty-one", "three point one four"
        if tok.kind is TokenKind.WORD and num.is_number_word(tok.value):
            run_end = i
            atoms: list[str] = []
            atom_ends: list[int] = []  # atoms consumed after each whole token
            while (
                run_end < n
                and tokens[run_end].kind is TokenKind.WORD
                and num.is_number_word(tokens[run_end].value)
                and (run_end == i or _adjacent(tokens[run_end - 1], tokens[run_end]))
            ):
                atoms.extend(tokens[run_end].value.lower().split("-"))
                atom_ends.append(len(atoms))
                run_end += 1
            parsed = num.parse_number_atoms(atoms)
            if parsed and parsed.consumed in atom_ends:
                token_count = atom_ends.index(parsed.consumed) + 1
                j = i + token_count
                value = parsed.text
                lead = None
                if not parsed.ordinal:
                    attachable = j < n and _adjacent(tokens[j - 1], tokens[j])
                    symbol = _currency_symbol(tokens[j]) if attachable else None
                    pct = _percent_width(tokens, j) if attachable else 0
                    if pct == 2 and not _adjacent(tokens[j], tokens[j + 1]):
                        pct = 0
                    prev_symbol = (
                        _currency_symbol(out[-1])
                        if out and _adjacent(out[-1], tokens[i])
                        else None
                    )
                    if symbol:
                        value = symbol + value
                        j += 1
                    elif pct:
                        value = value + "%"
                        j += pct
                    elif prev_symbol:  # "$ two thousand" / literalised "dollars 2000"
                        value = prev_symbol + value
                        lead = out.pop()
                run = ([lead] if lead else []) + tokens[i:j]
                out.append(merge_tokens(run, value, TokenKind.NUMBER, _NAME))
                i = j
                continue

        # Digit token: strip grouping commas, attach neighbouring currency/per-cent
        if _is_digit_number(tok):
            value = tok.value.replace(",", "")
            prev_symbol = (
                _currency_symbol(out[-1]) if out and _adjacent(out[-1], tok) else None
            )
            if prev_symbol:
                lead = out.pop()
                out.append(merge_tokens([lead, tok], prev_symbol + value, TokenKind.NUMBER, _NAME))
                i += 1
                continue
            attachable = i + 1 < n and _adjacent(tok, tokens[i + 1])
            next_symbol = _currency_symbol(tokens[i + 1]) if attachable else None
            pct = _percent_width(tokens, i + 1) if attachable else 0
            if pct == 2 and not _adjacent(tokens[i + 1], tokens[i + 2]):
                pct = 0
            if next_symbol:
                out.append(
                    merge_tokens(tokens[i : i + 2], next_symbol + value, TokenKind.NUMBER, _NAME)
                )
                i += 2
                continue
            if pct:
                out.append(
                    merge_tokens(tokens[i : i + 1 + pct], value + "%", TokenKind.NUMBER, _NAME)
                )
                i += 1 + pct
                continue
            out.append(tok.with_value(value, _NAME))
            i += 1
            continue

        out.append(tok)
        i += 1
    return out


# --- chain ------------------------------------------------------------------


def run_normalisers(
    tokens: list[Token],
    config: NormaliserConfig | None = None,
    lexicons: Lexicons | None = None,
) -> NormalisationResult:
    """Apply every enabled normaliser once, in declaration order."""
    config = config or NormaliserConfig()
    lex = lexicons or default_lexicons()
    result = NormalisationResult(tokens=list(tokens))

    if config.is_enabled(NormaliserId.ANNOTATIONS):
        result.tokens, removed = _remove_annotations(result.tokens)
        result.removed.extend(removed)
    if config.is_enabled(NormaliserId.INTERJECTIONS):
        result.tokens, removed = _remove_interjections(result.tokens, lex)
        result.removed.extend(removed)
    if config.is_enabled(NormaliserId.ABBREVIATIONS):
        result.tokens = _apply_abbreviations(result.tokens, lex)
    if config.is_enabled(NormaliserId.CONTRACTIONS):
        result.tokens = _apply_contractions(result.tokens, lex)
    if config.is_enabled(NormaliserId.BRITISH_SPELLING):
        result.tokens = _apply_british(result.tokens, lex)
    if config.is_enabled(NormaliserId.DIACRITICS):
        result.tokens = _apply_diacritics(result.tokens)
    if config.is_enabled(NormaliserId.SYMBOLS):
        result.tokens = _apply_symbols(result.tokens)
    if config.is_enabled(NormaliserId.NUMBERS):
        result.tokens = normalise_numbers(result.tokens)
    return result


def normalise(
    tokens: list[Token],
    config: NormaliserConfig | None = None,
    lexicons: Lexicons | None = None,
) -> list[Token]:
    """Normalised token list (see run_normalisers for removal records)."""
    return run_normalisers(tokens, config, lexicons).tokens
