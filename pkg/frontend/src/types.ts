/** Types mirroring the evaluation-report JSON schema (version 1.0). */

export const SCHEMA_VERSION = "1.0";

export const NORMALISERS = [
  "annotations",
  "interjections",
  "abbreviations",
  "contractions",
  "british_spelling",
  "diacritics",
  "symbols",
  "numbers",
] as const;

export type NormaliserName = (typeof NORMALISERS)[number];

export interface Rate {
  value: number | null;
  infinite: boolean;
}

export interface AspectCounts {
  correct: number;
  substitutions: number;
  deletions: number;
  insertions: number;
}

export interface TokenView {
  kind: "word" | "number" | "punctuation" | "symbol";
  raw: string;
  value: string;
  prefix: string;
  suffix: string;
  normalisations: string[];
  span: [number, number];
}

export type OperationName =
  | "ok"
  | "insertion"
  | "deletion"
  | "substitution"
  | "compound_hyp"
  | "compound_ref"
  | "compound_end";

export interface RouteElementView {
  op: OperationName;
  cost: number;
  error_class: string | null;
  ref: TokenView | null;
  hyp: TokenView | null;
}

export interface MetricsView {
  word: { wer: Rate; counts: AspectCounts };
  punctuation: { ser: Rate; f1: number; counts: AspectCounts };
  capitalisation: { ser: Rate; f1: number; counts: AspectCounts };
  error_classes: Record<string, number>;
  operations: Record<string, number>;
  normalisations: Record<string, number>;
}

export interface EvaluationReport {
  version: string;
  config: {
    normalisers: string[];
    cost_model: Record<string, number | null>;
    strict_caps: boolean;
    homophone_loose: boolean;
    lexicon_dir: string | null;
  };
  metrics: MetricsView;
  legacy_wer: Rate;
  route: RouteElementView[];
}

/** Shallow structural validation; throws on anything unusable. */
export function validateReport(data: unknown): EvaluationReport {
  if (typeof data !== "object" || data === null) {
    throw new Error("report is not an object");
  }
  const report = data as Partial<EvaluationReport>;
  if (report.version !== SCHEMA_VERSION) {
    throw new Error(`unsupported report version: ${String(report.version)}`);
  }
  if (!report.metrics || !report.metrics.word || !report.metrics.word.wer) {
    throw new Error("report has no word metrics");
  }
  if (!report.legacy_wer || typeof report.legacy_wer.infinite !== "boolean") {
    throw new Error("report has no legacy WER baseline");
  }
  if (!Array.isArray(report.route)) {
    throw new Error("report has no route");
  }
  return report as EvaluationReport;
}

export function formatRate(rate: Rate): string {
  if (rate.infinite || rate.value === null) {
    return "inf";
  }
  return rate.value.toFixed(4);
}
