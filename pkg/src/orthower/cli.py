"""Command line front end.

    orthower eval REF HYP [options]      score one pair (paths, or --text)
    orthower corpus MANIFEST [options]   score a manifest of pairs

Exit codes: 0 success, 1 usage or input error, 2 corpus finished but at
least one pair failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .align import CostModel
from .evaluate import (
    INF,
    CorpusManifest,
    EvalConfig,
    evaluate_corpus,
    evaluate_pair,
)
from .html_report import render_html
from .normalise import ALL_NORMALISERS, NormaliserConfig


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value: float) -> str:
    return "inf" if value == INF else f"{value:.4f}"


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--disable",
        metavar="LIST|all",
        default="",
        help="comma-separated normalisers to disable, or 'all'",
    )
    parser.add_argument(
        "--compound-limit",
        metavar="K|inf",
        default="inf",
        help="max tokens per side of a compound match (default: unbounded)",
    )
    parser.add_argument("--strict-caps", action="store_true",
                        help="capitalisation metrics over matched pairs only")
    parser.add_argument("--homophone-loose", action="store_true",
                        help="accept secondary phonetic codes for homophones")
    parser.add_argument("--lexicon-dir", metavar="DIR", default=None,
                        help="directory overriding the packaged lexicons "
                             "(ORTHOWER_LEXICON_DIR is the fallback)")


def _build_config(args: argparse.Namespace) -> EvalConfig:
    disable = args.disable.strip()
    if disable.lower() == "all":
        normalisers = NormaliserConfig.none()
    elif disable:
        try:
            disabled = NormaliserConfig.from_names(disable.split(",")).enabled
        except ValueError as exc:
            raise SystemExit(f"orthower: error: unknown normaliser in --disable: {exc}")
        normalisers = NormaliserConfig(enabled=ALL_NORMALISERS - disabled)
    else:
        normalisers = NormaliserConfig()
    limit_text = args.compound_limit.strip().lower()
    if limit_text in ("inf", "none", ""):
        limit = None
    else:
        try:
            limit = int(limit_text)
        except ValueError:
            raise SystemExit("orthower: error: --compound-limit must be an integer or 'inf'")
    return EvalConfig(
        normalisers=normalisers,
        cost_model=CostModel(compound_limit=limit),
        strict_caps=args.strict_caps,
        homophone_loose=args.homophone_loose,
        lexicon_dir=args.lexicon_dir,
    )


def _write_json(payload: str, target: str) -> None:
    if target == "-":
        sys.stdout.write(payload + "\n")
    else:
        Path(target).write_text(payload + "\n", encoding="utf-8")


def _print_summary(report, legacy_only: bool) -> None:
    if legacy_only:
        print(f"legacy_wer {_fmt(report.legacy_wer)}")
        return
    m = report.metrics
    print(f"wer        {_fmt(m.wer)}")
    print(f"punct_ser  {_fmt(m.punct_ser)}")
    print(f"punct_f1   {_fmt(m.punct_f1)}")
    print(f"cap_ser    {_fmt(m.cap_ser)}")
    print(f"cap_f1     {_fmt(m.cap_f1)}")
    print(f"legacy_wer {_fmt(report.legacy_wer)}")


def _cmd_eval(args: argparse.Namespace) -> int:
    config = _build_config(args)
    if args.text:
        ref_text, hyp_text = args.reference, args.hypothesis
    else:
        try:
            ref_text = Path(args.reference).read_text(encoding="utf-8")
            hyp_text = Path(args.hypothesis).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"orthower: error: {exc}", file=sys.stderr)
            return 1
    report = evaluate_pair(ref_text, hyp_text, config)
    if args.json:
        _write_json(report.to_json(), args.json)
    if args.html:
        Path(args.html).write_text(render_html(report), encoding="utf-8")
    if args.json != "-":
        _print_summary(report, args.legacy_wer)
    return 0


def _cmd_corpus(args: argparse.Namespace) -> int:
    config = _build_config(args)
    try:
        manifest = CorpusManifest.load(args.manifest)
    except (OSError, ValueError, KeyError) as exc:
        print(f"orthower: error: invalid manifest: {exc}", file=sys.stderr)
        return 1
    result = evaluate_corpus(manifest, config, jobs=args.jobs)
    if args.report_dir:
        out_dir = Path(args.report_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for outcome in result.outcomes:
            if outcome.report is not None:
                path = out_dir / f"{outcome.pair_id}.json"
                path.write_text(outcome.report.to_json() + "\n", encoding="utf-8")
    if args.json:
        payload = json.dumps(result.to_dict(), ensure_ascii=False, indent=2)
        _write_json(payload, args.json)
    summary = result.summary()
    if args.json != "-":
        micro = summary["micro"]
        wer = micro["wer"]["value"]
        print(f"pairs      {summary['pairs_total']} ({summary['pairs_failed']} failed)")
        print(f"micro wer  {_fmt(wer if wer is not None else INF)}")
        for name in ("punct_ser", "cap_ser"):
            value = micro[name]["value"]
            print(f"micro {name}  {_fmt(value if value is not None else INF)}")
        for outcome in result.failures:
            print(f"failed: {outcome.pair_id}: {outcome.error}", file=sys.stderr)
    return 2 if result.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="orthower", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one reference/hypothesis pair")
    p_eval.add_argument("reference", help="reference file (or literal text with --text)")
    p_eval.add_argument("hypothesis", help="hypothesis file (or literal text with --text)")
    p_eval.add_argument("--text", action="store_true",
                        help="treat the positional arguments as literal text")
    p_eval.add_argument("--json", metavar="PATH|-", default=None,
                        help="write the full report as JSON (- for stdout)")
    p_eval.add_argument("--html", metavar="PATH", default=None,
                        help="write a self-contained HTML diff page")
    p_eval.add_argument("--legacy-wer", action="store_true",
                        help="print only the traditional WER figure")
    _add_config_flags(p_eval)

    p_corpus = sub.add_parser("corpus", help="evaluate a manifest of pairs")
    p_corpus.add_argument("manifest", help="CSV or JSON manifest of id,reference,hypothesis")
    p_corpus.add_argument("--json", metavar="PATH|-", default=None,
                          help="write the summary as JSON (- for stdout)")
    p_corpus.add_argument("--report-dir", metavar="DIR", default=None,
                          help="write one full report per pair into DIR")
    p_corpus.add_argument("--jobs", type=int, default=1, metavar="N",
                          help="worker threads for pair evaluation")
    _add_config_flags(p_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return _cmd_eval(args)
    return _cmd_corpus(args)


if __name__ == "__main__":
    sys.exit(main())
