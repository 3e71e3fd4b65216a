"""Lexicon data used by the lexer and the normalisers.

Each lexicon is a plain-text file of ``key=value`` lines (``#`` starts a
comment, blank lines are skipped). Keys are matched case-insensitively.
The packaged defaults live in ``orthower/data/`` and can be overridden by
pointing ``--lexicon-dir`` (or the ORTHOWER_LEXICON_DIR environment variable)
at a directory containing files with the same names:

    abbreviations.txt   mr.=mister          (expansion may be several words)
    contractions.txt    won't=will not
    uk_us.txt           colour=color
    interjections.txt   hmm=                (value unused; key is removed)
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

ENV_LEXICON_DIR = "ORTHOWER_LEXICON_DIR"

_FILES = {
    "abbreviations": "abbreviations.txt",
    "contractions": "contractions.txt",
    "uk_us": "uk_us.txt",
    "interjections": "interjections.txt",
}


def parse_lexicon(text: str) -> dict[str, str]:
    """Parse ``key=value`` lines into a dict with lowercase keys."""
    entries: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lower()
        if not key:
            raise ValueError(f"lexicon line {lineno}: empty key in {line!r}")
        entries[key] = value.strip()
    return entries


@dataclass(frozen=True)
class Lexicons:
    """All lexicons bundled together, loaded once and shared read-only."""

    abbreviations: dict[str, str] = field(default_factory=dict)
    contractions: dict[str, str] = field(default_factory=dict)
    uk_us: dict[str, str] = field(default_factory=dict)
    interjections: frozenset[str] = frozenset()

    def abbreviation_keys(self) -> frozenset[str]:
        """Lowercase abbreviation spellings, used by the lexer's period rule."""
        return frozenset(self.abbreviations)


def _read_default(name: str) -> str:
    return resources.files("orthower").joinpath("data", name).read_text(encoding="utf-8")


def load_lexicons(directory: str | os.PathLike | None = None) -> Lexicons:
    """Load lexicons from ``directory``, falling back to the packaged defaults.

    Resolution order per file: explicit ``directory`` argument, then the
    ORTHOWER_LEXICON_DIR environment variable, then the packaged data. A
    directory only needs to contain the files it wants to replace.
    """
    search: list[Path] = []
    if directory is not None:
        search.append(Path(directory))
    env_dir = os.environ.get(ENV_LEXICON_DIR)
    if env_dir:
        search.append(Path(env_dir))

    def load(name: str) -> dict[str, str]:
        filename = _FILES[name]
        for base in search:
            candidate = base / filename
            if candidate.is_file():
                return parse_lexicon(candidate.read_text(encoding="utf-8"))
        return parse_lexicon(_read_default(filename))

    return Lexicons(
        abbreviations=load("abbreviations"),
        contractions=load("contractions"),
        uk_us=load("uk_us"),
        interjections=frozenset(load("interjections")),
    )


_cache: dict[str | None, Lexicons] = {}


def default_lexicons() -> Lexicons:
    """Packaged lexicons (honouring ORTHOWER_LEXICON_DIR), cached per env value."""
    key = os.environ.get(ENV_LEXICON_DIR)
    if key not in _cache:
        _cache[key] = load_lexicons()
    return _cache[key]
