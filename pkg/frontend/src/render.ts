/** Pure HTML renderers: report in, markup out. The UI shows numbers exactly
 * as the engine reported them and never does metric arithmetic itself. */

import {
  EvaluationReport,
  NORMALISERS,
  NormaliserName,
  RouteElementView,
  formatRate,
} from "./types.js";

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function tooltip(element: RouteElementView): string {
  const bits: string[] = [element.op];
  if (element.ref) {
    bits.push(`ref: ${element.ref.raw || element.ref.value}`);
  }
  if (element.hyp) {
    bits.push(`hyp: ${element.hyp.raw || element.hyp.value}`);
  }
  bits.push(`cost: ${element.cost}`);
  const trail = [
    ...(element.ref?.normalisations ?? []),
    ...(element.hyp?.normalisations ?? []),
  ];
  if (trail.length > 0) {
    bits.push(`normalised: ${trail.join(", ")}`);
  }
  return bits.join(" | ");
}

function elementLabel(element: RouteElementView): string {
  if (element.op === "deletion") {
    return element.ref?.value ?? "";
  }
  if (element.op === "substitution") {
    return `${element.ref?.value ?? ""}→${element.hyp?.value ?? ""}`;
  }
  return element.hyp?.value ?? element.ref?.value ?? "";
}

/** One span per route element; non-ok elements carry styling classes and
 * compound runs share a grouping class for the joined underline. A chart
 * selection dims every styled token of a different error class. */
export function renderDiff(report: EvaluationReport, selection: string | null = null): string {
  const spans = report.route.map((element) => {
    const classes = ["tok", `op-${element.op}`];
    if (element.op !== "ok") {
      classes.push("styled");
    }
    if (element.op.startsWith("compound")) {
      classes.push("compound-run");
    }
    if (element.error_class) {
      classes.push(`cls-${element.error_class}`);
    }
    if (selection !== null && element.op !== "ok" && element.error_class !== selection) {
      classes.push("dimmed");
    }
    return `<span class="${classes.join(" ")}" title="${escapeHtml(tooltip(element))}">${escapeHtml(
      elementLabel(element),
    )}</span>`;
  });
  return `<div class="diff-stream">${spans.join(" ")}</div>`;
}

/** Current metrics side by side with the config-independent baseline. */
export function renderMetrics(report: EvaluationReport): string {
  const m = report.metrics;
  const rows = [
    ["Word WER", formatRate(m.word.wer)],
    ["Punctuation SER", formatRate(m.punctuation.ser)],
    ["Punctuation F1", m.punctuation.f1.toFixed(4)],
    ["Capitalisation SER", formatRate(m.capitalisation.ser)],
    ["Capitalisation F1", m.capitalisation.f1.toFixed(4)],
  ]
    .map(
      ([name, value]) =>
        `<tr><th>${name}</th><td data-metric="${name}">${value}</td></tr>`,
    )
    .join("");
  const legacy = formatRate(report.legacy_wer);
  return (
    `<table class="metrics"><tbody>${rows}</tbody></table>` +
    `<p class="legacy-panel">Traditional WER: <strong data-metric="legacy-wer">${legacy}</strong></p>`
  );
}

function bars(counts: Record<string, number>, kind: string): string {
  const entries = Object.entries(counts).sort((a, b) => a[0].localeCompare(b[0]));
  if (entries.length === 0) {
    return `<p class="empty">none</p>`;
  }
  const max = Math.max(...entries.map(([, n]) => n));
  return entries
    .map(([name, count]) => {
      const width = max > 0 ? Math.round((count / max) * 100) : 0;
      return (
        `<div class="bar-row" data-${kind}="${name}">` +
        `<span class="bar-label">${escapeHtml(name)}</span>` +
        `<span class="bar" style="width:${width}%"></span>` +
        `<span class="bar-count">${count}</span></div>`
      );
    })
    .join("");
}

/** Error-class histogram and normalisation counts. */
export function renderCharts(report: EvaluationReport): string {
  return (
    `<div class="chart"><h3>Errors by class</h3>${bars(report.metrics.error_classes, "error")}</div>` +
    `<div class="chart"><h3>Normalisations</h3>${bars(report.metrics.normalisations, "normaliser")}</div>`
  );
}

/** Normaliser checkboxes reflecting the disabled set. */
export function renderToggles(disabled: ReadonlySet<NormaliserName>): string {
  return NORMALISERS.map((name) => {
    const checked = disabled.has(name) ? "" : " checked";
    return (
      `<label class="toggle"><input type="checkbox" data-normaliser="${name}"${checked}>` +
      `${name.replace("_", " ")}</label>`
    );
  }).join("");
}
