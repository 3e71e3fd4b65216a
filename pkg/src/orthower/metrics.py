"""WER, SER, and F1 computation from a classified route.

Three aspects are tracked. Word counts cover every non-punctuation token;
punctuation counts cover sentence punctuation; capitalisation is an overlay
over aligned word pairs. Case-only substitutions are correct for the word
aspect (they only count against capitalisation), compound matches are
correct (one count per reference token consumed), and a cross-type
substitution decomposes into a deletion on one aspect plus an insertion on
the other, so each reference token lands in exactly one of C/S/D.

Rates follow WER = SER = (S+D+I)/(C+S+D) and F1 = 2C/(2C+2S+D+I). When a
rate's denominator is zero it is 0.0 for a perfect empty aspect and
infinity when only insertions exist; F1 of an empty aspect is 1.0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .align import INF, OperationKind, RouteElement
from .classify import ErrorClass
from .tokens import Token, TokenKind


@dataclass
class AspectCounts:
    correct: int = 0
    substitutions: int = 0
    deletions: int = 0
    insertions: int = 0

    def error_rate(self) -> float:
        """(S+D+I)/(C+S+D), infinite when only insertions exist."""
        denominator = self.correct + self.substitutions + self.deletions
        errors = self.substitutions + self.deletions + self.insertions
        if denominator == 0:
            return 0.0 if errors == 0 else INF
        return errors / denominator

    def f1(self) -> float:
        denominator = 2 * self.correct + 2 * self.substitutions + self.deletions + self.insertions
        if denominator == 0:
            return 1.0
        return 2 * self.correct / denominator

    def add(self, other: "AspectCounts") -> None:
        self.correct += other.correct
        self.substitutions += other.substitutions
        self.deletions += other.deletions
        self.insertions += other.insertions


@dataclass
class MetricsReport:
    word: AspectCounts
    punctuation: AspectCounts
    capitalisation: AspectCounts
    error_classes: dict[str, int] = field(default_factory=dict)
    operations: dict[str, int] = field(default_factory=dict)
    normalisations: dict[str, int] = field(default_factory=dict)

    @property
    def wer(self) -> float:
        return self.word.error_rate()

    @property
    def punct_ser(self) -> float:
        return self.punctuation.error_rate()

    @property
    def punct_f1(self) -> float:
        return self.punctuation.f1()

    @property
    def cap_ser(self) -> float:
        return self.capitalisation.error_rate()

    @property
    def cap_f1(self) -> float:
        return self.capitalisation.f1()


def _case_assessable(token: Token | None) -> bool:
    return token is not None and token.kind is TokenKind.WORD


def compute_metrics(
    route: list[RouteElement],
    strict_caps: bool = False,
    normalisations: dict[str, int] | None = None,
) -> MetricsReport:
    """Aggregate a classified route into aspect counts and rates.

    ``strict_caps`` restricts capitalisation counts to aligned pairs whose
    lowercase values match, instead of charging unassessable reference and
    hypothesis words as deletions/insertions.
    """
    word = AspectCounts()
    punct = AspectCounts()
    caps = AspectCounts()
    error_classes: dict[str, int] = {}
    operations: dict[str, int] = {}

    for element in route:
        operations[element.op.value] = operations.get(element.op.value, 0) + 1
        ref, hyp = element.ref, element.hyp
        if element.op is OperationKind.OK:
            if ref.is_punctuation:
                punct.correct += 1
            else:
                word.correct += 1
                if _case_assessable(ref):
                    caps.correct += 1
        elif element.op is OperationKind.SUBSTITUTION:
            if element.error_class is not None:
                key = element.error_class.value
                error_classes[key] = error_classes.get(key, 0) + 1
            if ref.is_punctuation and hyp.is_punctuation:
                punct.substitutions += 1
            elif ref.is_punctuation:  # cross-type: punctuation lost, word added
                punct.deletions += 1
                word.insertions += 1
                if _case_assessable(hyp):
                    caps.insertions += 1
            elif hyp.is_punctuation:
                word.deletions += 1
                punct.insertions += 1
                if _case_assessable(ref):
                    caps.deletions += 1
            elif element.error_class is ErrorClass.CAPITALISATION:
                word.correct += 1
                caps.substitutions += 1
            else:
                word.substitutions += 1
                if _case_assessable(ref):
                    caps.deletions += 1
                if _case_assessable(hyp):
                    caps.insertions += 1
        elif element.op is OperationKind.DELETION:
            if ref.is_punctuation:
                punct.deletions += 1
            else:
                word.deletions += 1
                if _case_assessable(ref):
                    caps.deletions += 1
        elif element.op is OperationKind.INSERTION:
            if hyp.is_punctuation:
                punct.insertions += 1
            else:
                word.insertions += 1
                if _case_assessable(hyp):
                    caps.insertions += 1
        elif element.op in (OperationKind.COMPOUND_END, OperationKind.COMPOUND_REF):
            # compound matching is case-sensitive, so the casing is correct
            word.correct += 1
            if _case_assessable(ref):
                caps.correct += 1
        # COMPOUND_HYP carries only the extra hypothesis tokens of a run

    if strict_caps:
        caps.deletions = 0
        caps.insertions = 0

    return MetricsReport(
        word=word,
        punctuation=punct,
        capitalisation=caps,
        error_classes=error_classes,
        operations=operations,
        normalisations=dict(normalisations or {}),
    )
