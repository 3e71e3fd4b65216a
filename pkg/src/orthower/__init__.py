"""Orthography-aware ASR transcript evaluation.

Computes a robust word error rate while keeping punctuation and
capitalisation assessable: a lexer preserves every source character,
normalisers remove non-semantic differences non-destructively, an extended
Levenshtein alignment with variable costs and compound-word detection finds
the cheapest edit route, and each substitution is classified before WER,
SER, and F1 figures are derived.
"""

from .align import Alignment, CostModel, OperationKind, RouteElement, align, cost_indel, cost_sub
from .classify import ErrorClass, classify_pair, classify_route
from .evaluate import (
    SCHEMA_VERSION,
    CorpusManifest,
    CorpusResult,
    EvalConfig,
    EvaluationReport,
    evaluate_corpus,
    evaluate_pair,
    legacy_wer,
)
from .html_report import render_html
from .lexer import tokenize
from .lexicons import Lexicons, load_lexicons
from .metaphone import double_metaphone
from .metrics import AspectCounts, MetricsReport, compute_metrics
from .normalise import (
    NormaliserConfig,
    NormaliserId,
    NormalisationResult,
    normalise,
    normalise_numbers,
    run_normalisers,
)
from .stemmer import stem
from .tokens import Token, TokenKind, rejoin

__version__ = "0.1.0"

__all__ = [
    "Alignment",
    "AspectCounts",
    "CorpusManifest",
    "CorpusResult",
    "CostModel",
    "ErrorClass",
    "EvalConfig",
    "EvaluationReport",
    "Lexicons",
    "MetricsReport",
    "NormalisationResult",
    "NormaliserConfig",
    "NormaliserId",
    "OperationKind",
    "RouteElement",
    "SCHEMA_VERSION",
    "Token",
    "TokenKind",
    "align",
    "classify_pair",
    "classify_route",
    "compute_metrics",
    "cost_indel",
    "cost_sub",
    "double_metaphone",
    "evaluate_corpus",
    "evaluate_pair",
    "legacy_wer",
    "load_lexicons",
    "normalise",
    "normalise_numbers",
    "rejoin",
    "render_html",
    "run_normalisers",
    "stem",
    "tokenize",
]
