"""Static, self-contained HTML diff page for one evaluation report."""

from __future__ import annotations

import html

from .align import OperationKind, RouteElement
from .evaluate import EvaluationReport
from .metrics import AspectCounts

_CSS = """
body { font-family: system-ui, sans-serif; margin: 2rem auto; max-width: 60rem; color: #222; }
h1 { font-size: 1.4rem; }
table.metrics { border-collapse: collapse; margin-bottom: 1.5rem; }
table.metrics td, table.metrics th { border: 1px solid #ccc; padding: 0.3rem 0.8rem; text-align: right; }
table.metrics th { background: #f2f2f2; }
.stream { line-height: 2.2; font-size: 1.05rem; }
.tok { padding: 0.1rem 0.15rem; border-radius: 3px; }
.tok.op-insertion { background: #d2f8d2; text-decoration: underline; }
.tok.op-deletion { background: #ffd6d6; text-decoration: line-through; }
.tok.op-compound_ref, .tok.op-compound_hyp, .tok.op-compound_end { border-bottom: 3px double #7a5cc4; }
.tok.cls-punctuation { background: #ffe9b8; }
.tok.cls-capitalisation { background: #cfe6ff; }
.tok.cls-number { background: #ffd9f2; }
.tok.cls-compound { background: #e6dcff; }
.tok.cls-prefix, .tok.cls-suffix, .tok.cls-affix { background: #fff3c4; }
.tok.cls-stem { background: #e2f0cb; }
.tok.cls-homophone { background: #d4f1f4; }
.tok.cls-word { background: #ffc9c9; }
.legend span { margin-right: 0.8rem; white-space: nowrap; }
.counts { color: #555; font-size: 0.9rem; }
"""

_LEGEND = [
    ("cls-punctuation", "punctuation"),
    ("cls-capitalisation", "capitalisation"),
    ("cls-number", "number"),
    ("cls-compound", "compound"),
    ("cls-affix", "prefix/suffix/affix"),
    ("cls-stem", "stem"),
    ("cls-homophone", "homophone"),
    ("cls-word", "word"),
    ("op-insertion", "insertion"),
    ("op-deletion", "deletion"),
]


def _fmt(value: float) -> str:
    if value == float("inf"):
        return "inf"
    return f"{value:.4f}"


def _counts(counts: AspectCounts) -> str:
    return (
        f"C={counts.correct} S={counts.substitutions} "
        f"D={counts.deletions} I={counts.insertions}"
    )


def _tooltip(element: RouteElement) -> str:
    bits = [element.op.value]
    if element.ref is not None:
        bits.append(f"ref: {element.ref.raw!r} -> {element.ref.value!r}")
    if element.hyp is not None:
        bits.append(f"hyp: {element.hyp.raw!r} -> {element.hyp.value!r}")
    bits.append(f"cost: {element.cost}")
    trails = []
    for token in (element.ref, element.hyp):
        if token is not None and token.normalisations:
            trails.extend(token.normalisations)
    if trails:
        bits.append("normalised: " + ", ".join(trails))
    return " | ".join(bits)


def _element_html(element: RouteElement) -> str:
    classes = ["tok", f"op-{element.op.value}"]
    if element.error_class is not None:
        classes.append(f"cls-{element.error_class.value}")
    if element.op is OperationKind.DELETION:
        shown = element.ref.value
    elif element.op is OperationKind.SUBSTITUTION:
        shown = f"{element.ref.value}→{element.hyp.value}"
    elif element.hyp is not None:
        shown = element.hyp.value
    else:
        shown = element.ref.value
    return (
        f'<span class="{" ".join(classes)}" title="{html.escape(_tooltip(element), quote=True)}">'
        f"{html.escape(shown)}</span>"
    )


def render_html(report: EvaluationReport, title: str = "Transcript evaluation") -> str:
    m = report.metrics
    rows = [
        ("Word WER", _fmt(m.wer), _counts(m.word)),
        ("Punctuation SER", _fmt(m.punct_ser), _counts(m.punctuation)),
        ("Punctuation F1", _fmt(m.punct_f1), ""),
        ("Capitalisation SER", _fmt(m.cap_ser), _counts(m.capitalisation)),
        ("Capitalisation F1", _fmt(m.cap_f1), ""),
        ("Legacy WER", _fmt(report.legacy_wer), "punctuation stripped, case folded"),
    ]
    metric_rows = "\n".join(
        f"<tr><th>{html.escape(name)}</th><td>{value}</td>"
        f'<td class="counts">{html.escape(extra)}</td></tr>'
        for name, value, extra in rows
    )
    legend = " ".join(
        f'<span><span class="tok {cls}">&nbsp;&nbsp;</span> {label}</span>'
        for cls, label in _LEGEND
    )
    stream = "\n".join(_element_html(e) for e in report.route)
    norm_counts = ", ".join(
        f"{name}: {count}" for name, count in sorted(m.normalisations.items())
    ) or "none"
    return f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>{html.escape(title)}</title>
<style>{_CSS}</style>
</head>
<body>
<h1>{html.escape(title)}</h1>
<table class="metrics">
<tr><th>Metric</th><th>Value</th><th></th></tr>
{metric_rows}
</table>
<p class="legend">{legend}</p>
<div class="stream">
{stream}
</div>
<p class="counts">Normalisations: {html.escape(norm_counts)}</p>
</body>
</html>
"""
