"""Full evaluation pipeline and report plumbing.

evaluate_pair runs tokenize -> normalise -> align -> classify -> metrics and
wraps the outcome in a versioned, JSON-serialisable EvaluationReport. Every
report also carries the config-independent legacy WER baseline (punctuation
stripped, case folded, unit costs, no compounds) so consumers can show the
traditional figure next to the orthography-aware one.

evaluate_corpus scores a manifest of reference/hypothesis file pairs with a
small worker pool and aggregates both micro (pooled counts) and macro
(mean/stdev of per-file rates) summaries.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .align import INF, Alignment, CostModel, OperationKind, RouteElement, align
from .classify import ErrorClass, classify_route
from .lexer import tokenize
from .lexicons import Lexicons, load_lexicons
from .metrics import AspectCounts, MetricsReport, compute_metrics
from .normalise import NormaliserConfig, NormaliserId, run_normalisers
from .tokens import Token, TokenKind

SCHEMA_VERSION = "1.0"

_LEGACY_COSTS = CostModel(
    indel_punct=1.0,
    indel_other=1.0,
    sub_cross_type=2.0,
    sub_punct_punct=1.0,
    sub_case_only=1.0,
    sub_other=1.0,
    compound_limit=0,
)


@dataclass(frozen=True)
class EvalConfig:
    normalisers: NormaliserConfig = NormaliserConfig()
    cost_model: CostModel = CostModel()
    strict_caps: bool = False
    homophone_loose: bool = False
    lexicon_dir: str | None = None


@dataclass
class EvaluationReport:
    version: str
    config: EvalConfig
    metrics: MetricsReport
    legacy_wer: float
    route: list[RouteElement]

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "config": _config_to_dict(self.config),
            "metrics": _metrics_to_dict(self.metrics),
            "legacy_wer": _rate_to_dict(self.legacy_wer),
            "route": [_element_to_dict(e) for e in self.route],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "EvaluationReport":
        version = data.get("version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema version: {version!r}")
        return cls(
            version=version,
            config=_config_from_dict(data["config"]),
            metrics=_metrics_from_dict(data["metrics"]),
            legacy_wer=_rate_from_dict(data["legacy_wer"]),
            route=[_element_from_dict(e) for e in data["route"]],
        )

    @classmethod
    def from_json(cls, text: str) -> "EvaluationReport":
        return cls.from_dict(json.loads(text))


# --- serialisation helpers ---------------------------------------------------


def _rate_to_dict(value: float) -> dict:
    if value == INF:
        return {"value": None, "infinite": True}
    return {"value": value, "infinite": False}


def _rate_from_dict(data: dict) -> float:
    return INF if data["infinite"] else data["value"]


def _token_to_dict(token: Token | None) -> dict | None:
    if token is None:
        return None
    return {
        "kind": token.kind.value,
        "raw": token.raw,
        "value": token.value,
        "prefix": token.prefix,
        "suffix": token.suffix,
        "normalisations": list(token.normalisations),
        "span": list(token.span),
    }


def _token_from_dict(data: dict | None) -> Token | None:
    if data is None:
        return None
    return Token(
        kind=TokenKind(data["kind"]),
        raw=data["raw"],
        value=data["value"],
        prefix=data["prefix"],
        suffix=data["suffix"],
        normalisations=tuple(data["normalisations"]),
        span=tuple(data["span"]),
    )


def _element_to_dict(element: RouteElement) -> dict:
    return {
        "op": element.op.value,
        "cost": element.cost,
        "error_class": element.error_class.value if element.error_class else None,
        "ref": _token_to_dict(element.ref),
        "hyp": _token_to_dict(element.hyp),
    }


def _element_from_dict(data: dict) -> RouteElement:
    return RouteElement(
        op=OperationKind(data["op"]),
        ref=_token_from_dict(data["ref"]),
        hyp=_token_from_dict(data["hyp"]),
        cost=data["cost"],
        error_class=ErrorClass(data["error_class"]) if data["error_class"] else None,
    )


def _counts_to_dict(counts: AspectCounts) -> dict:
    return {
        "correct": counts.correct,
        "substitutions": counts.substitutions,
        "deletions": counts.deletions,
        "insertions": counts.insertions,
    }


def _counts_from_dict(data: dict) -> AspectCounts:
    return AspectCounts(
        correct=data["correct"],
        substitutions=data["substitutions"],
        deletions=data["deletions"],
        insertions=data["insertions"],
    )


def _metrics_to_dict(metrics: MetricsReport) -> dict:
    return {
        "word": {
            "wer": _rate_to_dict(metrics.wer),
            "counts": _counts_to_dict(metrics.word),
        },
        "punctuation": {
            "ser": _rate_to_dict(metrics.punct_ser),
            "f1": metrics.punct_f1,
            "counts": _counts_to_dict(metrics.punctuation),
        },
        "capitalisation": {
            "ser": _rate_to_dict(metrics.cap_ser),
            "f1": metrics.cap_f1,
            "counts": _counts_to_dict(metrics.capitalisation),
        },
        "error_classes": dict(sorted(metrics.error_classes.items())),
        "operations": dict(sorted(metrics.operations.items())),
        "normalisations": dict(sorted(metrics.normalisations.items())),
    }


def _metrics_from_dict(data: dict) -> MetricsReport:
    return MetricsReport(
        word=_counts_from_dict(data["word"]["counts"]),
        punctuation=_counts_from_dict(data["punctuation"]["counts"]),
        capitalisation=_counts_from_dict(data["capitalisation"]["counts"]),
        error_classes=dict(data["error_classes"]),
        operations=dict(data["operations"]),
        normalisations=dict(data["normalisations"]),
    )


def _config_to_dict(config: EvalConfig) -> dict:
    return {
        "normalisers": sorted(n.value for n in config.normalisers.enabled),
        "cost_model": {
            "indel_punct": config.cost_model.indel_punct,
            "indel_other": config.cost_model.indel_other,
            "sub_cross_type": config.cost_model.sub_cross_type,
            "sub_punct_punct": config.cost_model.sub_punct_punct,
            "sub_case_only": config.cost_model.sub_case_only,
            "sub_other": config.cost_model.sub_other,
            "compound_limit": config.cost_model.compound_limit,
        },
        "strict_caps": config.strict_caps,
        "homophone_loose": config.homophone_loose,
        "lexicon_dir": config.lexicon_dir,
    }


def _config_from_dict(data: dict) -> EvalConfig:
    model = data["cost_model"]
    return EvalConfig(
        normalisers=NormaliserConfig(
            enabled=frozenset(NormaliserId(n) for n in data["normalisers"])
        ),
        cost_model=CostModel(
            indel_punct=model["indel_punct"],
            indel_other=model["indel_other"],
            sub_cross_type=model["sub_cross_type"],
            sub_punct_punct=model["sub_punct_punct"],
            sub_case_only=model["sub_case_only"],
            sub_other=model["sub_other"],
            compound_limit=model["compound_limit"],
        ),
        strict_caps=data["strict_caps"],
        homophone_loose=data["homophone_loose"],
        lexicon_dir=data.get("lexicon_dir"),
    )


# --- pipeline ----------------------------------------------------------------


def legacy_wer(ref_text: str, hyp_text: str, lexicons: Lexicons | None = None) -> float:
    """Traditional WER: strip punctuation, fold case, unit costs, no compounds."""
    abbrev = lexicons.abbreviation_keys() if lexicons else None
    ref = _legacy_tokens(ref_text, abbrev)
    hyp = _legacy_tokens(hyp_text, abbrev)
    distance = align(ref, hyp, _LEGACY_COSTS).total_cost
    if not ref:
        return 0.0 if not hyp else INF
    return distance / len(ref)


def _legacy_tokens(text: str, abbrev) -> list[Token]:
    return [
        t.with_value(t.value.lower(), "legacy")
        for t in tokenize(text, abbrev)
        if not t.is_punctuation
    ]


def evaluate_pair(
    ref_text: str,
    hyp_text: str,
    config: EvalConfig | None = None,
    lexicons: Lexicons | None = None,
) -> EvaluationReport:
    """Run the whole pipeline on one reference/hypothesis pair."""
    config = config or EvalConfig()
    lex = lexicons or load_lexicons(config.lexicon_dir)
    abbrev = lex.abbreviation_keys()

    ref_result = run_normalisers(tokenize(ref_text, abbrev), config.normalisers, lex)
    hyp_result = run_normalisers(tokenize(hyp_text, abbrev), config.normalisers, lex)

    alignment: Alignment = align(ref_result.tokens, hyp_result.tokens, config.cost_model)
    classify_route(alignment.route, config.homophone_loose)

    normalisation_counts: dict[str, int] = {}
    for counts in (ref_result.counts(), hyp_result.counts()):
        for name, count in counts.items():
            normalisation_counts[name] = normalisation_counts.get(name, 0) + count

    metrics = compute_metrics(
        alignment.route,
        strict_caps=config.strict_caps,
        normalisations=normalisation_counts,
    )
    return EvaluationReport(
        version=SCHEMA_VERSION,
        config=config,
        metrics=metrics,
        legacy_wer=legacy_wer(ref_text, hyp_text, lex),
        route=alignment.route,
    )


# --- corpus ------------------------------------------------------------------


@dataclass(frozen=True)
class ManifestEntry:
    pair_id: str
    reference: str
    hypothesis: str


@dataclass
class CorpusManifest:
    entries: list[ManifestEntry]

    @classmethod
    def load(cls, path: str | Path) -> "CorpusManifest":
        """Read a manifest: CSV with an id,reference,hypothesis header or a
        JSON array of objects with those keys."""
        text = Path(path).read_text(encoding="utf-8")
        stripped = text.lstrip()
        if stripped.startswith("["):
            rows = json.loads(text)
            entries = [
                ManifestEntry(str(r["id"]), str(r["reference"]), str(r["hypothesis"]))
                for r in rows
            ]
        else:
            reader = csv.DictReader(io.StringIO(text))
            required = {"id", "reference", "hypothesis"}
            if reader.fieldnames is None or not required.issubset(reader.fieldnames):
                raise ValueError(
                    "manifest CSV needs an 'id,reference,hypothesis' header"
                )
            entries = [
                ManifestEntry(row["id"], row["reference"], row["hypothesis"])
                for row in reader
            ]
        seen = set()
        for entry in entries:
            if entry.pair_id in seen:
                raise ValueError(f"duplicate manifest id: {entry.pair_id}")
            seen.add(entry.pair_id)
        return cls(entries=entries)


@dataclass
class PairOutcome:
    pair_id: str
    report: EvaluationReport | None = None
    error: str | None = None


@dataclass
class CorpusResult:
    outcomes: list[PairOutcome]

    @property
    def failures(self) -> list[PairOutcome]:
        return [o for o in self.outcomes if o.error is not None]

    def summary(self) -> dict:
        succeeded = [o for o in self.outcomes if o.report is not None]
        pooled = {
            "word": AspectCounts(),
            "punctuation": AspectCounts(),
            "capitalisation": AspectCounts(),
        }
        per_file: dict[str, list[float]] = {name: [] for name in _SUMMARY_METRICS}
        for outcome in succeeded:
            m = outcome.report.metrics
            pooled["word"].add(m.word)
            pooled["punctuation"].add(m.punctuation)
            pooled["capitalisation"].add(m.capitalisation)
            for name in _SUMMARY_METRICS:
                value = getattr(m, name)
                if value != INF:
                    per_file[name].append(value)
        micro = {
            "wer": _rate_to_dict(pooled["word"].error_rate()),
            "punct_ser": _rate_to_dict(pooled["punctuation"].error_rate()),
            "punct_f1": pooled["punctuation"].f1(),
            "cap_ser": _rate_to_dict(pooled["capitalisation"].error_rate()),
            "cap_f1": pooled["capitalisation"].f1(),
        }
        macro = {}
        for name, values in per_file.items():
            macro[name] = {
                "mean": statistics.fmean(values) if values else None,
                "stdev": statistics.pstdev(values) if values else None,
                "count": len(values),
            }
        return {
            "pairs_total": len(self.outcomes),
            "pairs_failed": len(self.failures),
            "failed_ids": [o.pair_id for o in self.failures],
            "micro": micro,
            "macro": macro,
        }

    def to_dict(self, include_reports: bool = False) -> dict:
        pairs = []
        for outcome in self.outcomes:
            entry: dict = {"id": outcome.pair_id}
            if outcome.error is not None:
                entry["status"] = "failed"
                entry["error"] = outcome.error
            else:
                entry["status"] = "ok"
                entry["metrics"] = _metrics_to_dict(outcome.report.metrics)
                entry["legacy_wer"] = _rate_to_dict(outcome.report.legacy_wer)
                if include_reports:
                    entry["report"] = outcome.report.to_dict()
            pairs.append(entry)
        return {
            "version": SCHEMA_VERSION,
            "summary": self.summary(),
            "pairs": pairs,
        }


_SUMMARY_METRICS = ("wer", "punct_ser", "punct_f1", "cap_ser", "cap_f1")


def evaluate_corpus(
    manifest: CorpusManifest,
    config: EvalConfig | None = None,
    jobs: int = 1,
) -> CorpusResult:
    """Score every manifest pair; unreadable files fail their pair only."""
    config = config or EvalConfig()
    lex = load_lexicons(config.lexicon_dir)

    def run(entry: ManifestEntry) -> PairOutcome:
        try:
            ref_text = Path(entry.reference).read_text(encoding="utf-8")
            hyp_text = Path(entry.hypothesis).read_text(encoding="utf-8")
        except OSError as exc:
            return PairOutcome(pair_id=entry.pair_id, error=str(exc))
        report = evaluate_pair(ref_text, hyp_text, config, lex)
        return PairOutcome(pair_id=entry.pair_id, report=report)

    if jobs <= 1:
        outcomes = [run(entry) for entry in manifest.entries]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(run, manifest.entries))
    return CorpusResult(outcomes=outcomes)
