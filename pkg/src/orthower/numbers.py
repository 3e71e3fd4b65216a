"""Spoken-number parsing: turn runs of number words into canonical digits.

Covers cardinals up to 999,999,999 ("two thousand" -> "2000"), ordinals
("twenty first" -> "21st"), decimals ("three point one four" -> "3.14") and
currency/per-cent attachment ("two thousand dollars" -> "$2000",
"fifty percent" -> "50%"). Hyphenated forms ("twenty-one") are split before
parsing. Anything outside this grammar is left alone; the parser never
guesses at dates or other ambiguous readings.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_CARDINAL = 999_999_999

UNITS = {
    "zero": 0, "one": 1, "two": 2, "three": 3, "four": 4,
    "five": 5, "six": 6, "seven": 7, "eight": 8, "nine": 9,
}
TEENS = {
    "ten": 10, "eleven": 11, "twelve": 12, "thirteen": 13, "fourteen": 14,
    "fifteen": 15, "sixteen": 16, "seventeen": 17, "eighteen": 18, "nineteen": 19,
}
TENS = {
    "twenty": 20, "thirty": 30, "forty": 40, "fifty": 50,
    "sixty": 60, "seventy": 70, "eighty": 80, "ninety": 90,
}
SCALES = {"hundred": 100, "thousand": 1_000, "million": 1_000_000}

ORDINAL_UNITS = {
    "first": 1, "second": 2, "third": 3, "fourth": 4, "fifth": 5,
    "sixth": 6, "seventh": 7, "eighth": 8, "ninth": 9,
}
ORDINAL_TEENS = {
    "tenth": 10, "eleventh": 11, "twelfth": 12, "thirteenth": 13,
    "fourteenth": 14, "fifteenth": 15, "sixteenth": 16, "seventeenth": 17,
    "eighteenth": 18, "nineteenth": 19,
}
ORDINAL_TENS = {
    "twentieth": 20, "thirtieth": 30, "fortieth": 40, "fiftieth": 50,
    "sixtieth": 60, "seventieth": 70, "eightieth": 80, "ninetieth": 90,
}
ORDINAL_SCALES = {"hundredth": 100, "thousandth": 1_000, "millionth": 1_000_000}

CURRENCY_WORDS = {
    "dollar": "$", "dollars": "$",
    "euro": "€", "euros": "€",
    "pound": "£", "pounds": "£",
    "yen": "¥",
}
CURRENCY_SYMBOLS = {"$", "€", "£", "¥"}
PERCENT_WORDS = {"percent"}

_NUMBER_WORDS = (
    set(UNITS) | set(TEENS) | set(TENS) | set(SCALES)
    | set(ORDINAL_UNITS) | set(ORDINAL_TEENS) | set(ORDINAL_TENS) | set(ORDINAL_SCALES)
    | {"point", "and"}
)


def is_number_word(word: str) -> bool:
    """True if every hyphen-separated part of ``word`` is number vocabulary."""
    parts = word.lower().split("-")
    return all(p in _NUMBER_WORDS for p in parts)


def ordinal_suffix(value: int) -> str:
    if value % 100 in (11, 12, 13):
        return "th"
    return {1: "st", 2: "nd", 3: "rd"}.get(value % 10, "th")


@dataclass(frozen=True)
class ParsedNumber:
    consumed: int  # number of atoms consumed
    text: str  # canonical digit string
    ordinal: bool


def parse_number_atoms(atoms: list[str]) -> ParsedNumber | None:
    """Longest valid number phrase at the start of ``atoms`` (lowercase words).

    Returns None if the atoms do not begin a valid phrase. The grammar is
    deliberately strict so that digit dictation ("one two three") converts
    word by word instead of being summed up.
    """
    best: ParsedNumber | None = None
    total = 0
    current = 0
    last_scale = None  # smallest scale folded so far
    started = False
    last_kind = None  # unit | teen | ten | hundred | scale | and

    def complete(consumed: int, ordinal: bool = False, suffix: str = "") -> None:
        nonlocal best
        value = total + current
        if not started or value > MAX_CARDINAL:
            return
        text = str(value) + (ordinal_suffix(value) if ordinal else "") + suffix
        best = ParsedNumber(consumed, text, ordinal or bool(suffix))

    i = 0
    n = len(atoms)
    while i < n:
        word = atoms[i]
        if word == "zero":
            if started:
                break
            started = True
            current = 0
            i += 1
            complete(i)
            # "zero point five" is the only continuation for zero
            if i < n and atoms[i] == "point":
                dec = _parse_decimal_tail(atoms, i)
                if dec:
                    consumed, digits = dec
                    return ParsedNumber(consumed, "0." + digits, False)
            return best
        if word in UNITS:
            if last_kind in ("unit", "teen"):
                break
            current += UNITS[word]
            started = True
            last_kind = "unit"
            i += 1
            complete(i)
            continue
        if word in TEENS:
            if last_kind in ("unit", "teen", "ten"):
                break
            current += TEENS[word]
            started = True
            last_kind = "teen"
            i += 1
            complete(i)
            continue
        if word in TENS:
            if last_kind in ("unit", "teen", "ten"):
                break
            current += TENS[word]
            started = True
            last_kind = "ten"
            i += 1
            complete(i)
            continue
        if word == "hundred":
            if not started or not (1 <= current <= 99):
                break
            current *= 100
            last_kind = "hundred"
            i += 1
            complete(i)
            continue
        if word in SCALES and word != "hundred":
            scale = SCALES[word]
            if not started or current == 0:
                break
            if last_scale is not None and scale >= last_scale:
                break
            total += current * scale
            current = 0
            last_scale = scale
            last_kind = "scale"
            i += 1
            complete(i)
            continue
        if word == "and":
            # only meaningful between a hundred/scale and a smaller part
            if last_kind not in ("hundred", "scale") or i + 1 >= n:
                break
            nxt = atoms[i + 1]
            if nxt in UNITS and nxt != "zero" or nxt in TEENS or nxt in TENS:
                last_kind = "and"
                i += 1
                continue
            break
        if word == "point":
            if not started:
                break
            dec = _parse_decimal_tail(atoms, i)
            if dec:
                consumed, digits = dec
                value = total + current
                if value <= MAX_CARDINAL:
                    return ParsedNumber(consumed, f"{value}.{digits}", False)
            break
        ordinal_value = _ordinal_value(word, current, started, last_kind, last_scale)
        if ordinal_value is not None:
            current = ordinal_value
            i += 1
            total_value = total + current
            if total_value <= MAX_CARDINAL:
                return ParsedNumber(i, str(total_value) + ordinal_suffix(total_value), True)
            break
        break
    return best


def _parse_decimal_tail(atoms: list[str], point_index: int) -> tuple[int, str] | None:
    """Consume "point" plus following digit words; return (consumed, digits)."""
    digits = []
    j = point_index + 1
    while j < len(atoms) and atoms[j] in UNITS:
        digits.append(str(UNITS[atoms[j]]))
        j += 1
    if not digits:
        return None
    return j, "".join(digits)


def _ordinal_value(word, current, started, last_kind, last_scale):
    """Value of the whole phrase if ``word`` is a valid closing ordinal."""
    if word in ORDINAL_UNITS:
        if last_kind in ("unit", "teen") or (started and last_kind not in ("ten", "hundred", "scale", "and")):
            return None
        return current + ORDINAL_UNITS[word]
    if word in ORDINAL_TEENS or word in ORDINAL_TENS:
        value = ORDINAL_TEENS.get(word) or ORDINAL_TENS.get(word)
        if started and last_kind not in ("hundred", "scale", "and"):
            return None
        return current + value
    if word in ORDINAL_SCALES:
        scale = ORDINAL_SCALES[word]
        if scale == 100:
            if started and 1 <= current <= 99:
                return current * 100
            return None
        if started and current >= 1 and (last_scale is None or scale < last_scale):
            return current * scale
        return None
    return None
