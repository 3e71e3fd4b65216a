"""Granular classification of substitution errors.

Checks run from the most to the least specific class, first match wins:
punctuation, capitalisation, number, compound, then affix containment
(prefix/suffix/affix), equal Porter stems, matching phonetic codes, and
finally the catch-all word error. The order matters: a case-only pair must
never reach the stem check, and containment must be tried before stems so
"walk"/"walked" reads as a suffix error rather than a stem match.
"""

from __future__ import annotations

import re
from enum import Enum

from .align import OperationKind, RouteElement, compound_key
from .metaphone import double_metaphone
from .normalise import fold_diacritics
from .stemmer import stem
from .tokens import Token, TokenKind


class ErrorClass(Enum):
    PUNCTUATION = "punctuation"
    CAPITALISATION = "capitalisation"
    COMPOUND = "compound"
    NUMBER = "number"
    PREFIX = "prefix"
    SUFFIX = "suffix"
    AFFIX = "affix"
    STEM = "stem"
    HOMOPHONE = "homophone"
    WORD = "word"


_NUMBERISH = re.compile(r"[$€£¥]?\d[\d.,]*%?")


def _is_numberish(token: Token) -> bool:
    return token.kind is TokenKind.NUMBER or _NUMBERISH.fullmatch(token.value) is not None


def _phonetic_word(value: str) -> str:
    return fold_diacritics(value.lower())


def classify_pair(ref: Token, hyp: Token, homophone_loose: bool = False) -> ErrorClass:
    """Error class of one substituted reference/hypothesis token pair."""
    if ref.is_punctuation or hyp.is_punctuation:
        return ErrorClass.PUNCTUATION
    a, b = ref.value, hyp.value
    if a.lower() == b.lower():
        return ErrorClass.CAPITALISATION
    if (_is_numberish(ref) or _is_numberish(hyp)) and a != b:
        return ErrorClass.NUMBER
    if compound_key(a) == compound_key(b):
        return ErrorClass.COMPOUND
    low_a, low_b = a.lower(), b.lower()
    shorter, longer = (low_a, low_b) if len(low_a) < len(low_b) else (low_b, low_a)
    if shorter and len(shorter) < len(longer):
        if longer.startswith(shorter):
            return ErrorClass.SUFFIX
        if longer.endswith(shorter):
            return ErrorClass.PREFIX
        if shorter in longer:
            return ErrorClass.AFFIX
    if low_a.isalpha() and low_b.isalpha() and stem(low_a) == stem(low_b):
        return ErrorClass.STEM
    pa, sa = double_metaphone(_phonetic_word(a))
    pb, sb = double_metaphone(_phonetic_word(b))
    if pa and pa == pb:
        return ErrorClass.HOMOPHONE
    if homophone_loose and pa and pb and {pa, sa} & {pb, sb}:
        return ErrorClass.HOMOPHONE
    return ErrorClass.WORD


def classify_route(
    route: list[RouteElement], homophone_loose: bool = False
) -> list[RouteElement]:
    """Fill in the error class of every substitution element of a route."""
    for element in route:
        if element.op is OperationKind.SUBSTITUTION:
            element.error_class = classify_pair(element.ref, element.hyp, homophone_loose)
        else:
            element.error_class = None
    return route
