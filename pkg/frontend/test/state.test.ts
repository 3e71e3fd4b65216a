import { describe, expect, it } from "vitest";

import { Engine, EngineRequest } from "../src/engine.js";
import { ExplorerStore } from "../src/state.js";
import { EvaluationReport } from "../src/types.js";

import reportDefault from "./fixtures/report_default.json";
import reportNoNumbers from "./fixtures/report_no_numbers.json";
import reportDisabledAll from "./fixtures/report_disabled_all.json";

const fixtures: Record<string, EvaluationReport> = {
  "": reportDefault as EvaluationReport,
  numbers: reportNoNumbers as EvaluationReport,
  "abbreviations,annotations,british_spelling,contractions,diacritics,interjections,numbers,symbols":
    reportDisabledAll as EvaluationReport,
};

/** Engine keyed on the disabled-set; optionally gated for ordering tests. */
class FakeEngine implements Engine {
  requests: EngineRequest[] = [];
  private gates: Array<() => void> = [];
  gated = false;

  evaluate(request: EngineRequest): Promise<EvaluationReport> {
    this.requests.push(request);
    const key = [...request.disabled].sort().join(",");
    const report = fixtures[key];
    const result = report
      ? Promise.resolve(structuredClone(report))
      : Promise.reject(new Error(`engine exploded for: ${key}`));
    if (!this.gated) {
      return result;
    }
    return new Promise((resolve, reject) => {
      this.gates.push(() => result.then(resolve, reject));
    });
  }

  release(index: number): void {
    const gate = this.gates[index];
    if (!gate) {
      throw new Error(`no gated request ${index}`);
    }
    gate();
  }
}

function makeStore(engine: Engine): ExplorerStore {
  const store = new ExplorerStore(engine);
  store.setTexts("ref text", "hyp text");
  return store;
}

describe("toggling a normaliser", () => {
  it("updates the displayed WER to the engine's value", async () => {
    const store = makeStore(new FakeEngine());
    await store.recompute();
    expect(store.getState().report?.metrics.word.wer.value).toBeCloseTo(0.0909, 3);

    await store.toggleNormaliser("numbers");
    expect(store.getState().report?.metrics.word.wer.value).toBeCloseTo(0.3077, 3);
  });

  it("never alters the legacy-WER baseline", async () => {
    const store = makeStore(new FakeEngine());
    await store.recompute();
    const baseline = store.getState().report?.legacy_wer.value;
    expect(baseline).toBe(0.5);

    await store.toggleNormaliser("numbers");
    expect(store.getState().report?.legacy_wer.value).toBe(baseline);
  });

  it("round-trips: enabling then disabling returns the identical report", async () => {
    const store = makeStore(new FakeEngine());
    await store.recompute();
    const before = store.getState().report;

    await store.toggleNormaliser("numbers");
    await store.toggleNormaliser("numbers");
    expect(store.getState().report).toEqual(before);
  });

  it("sends the toggle set to the engine", async () => {
    const engine = new FakeEngine();
    const store = makeStore(engine);
    await store.toggleNormaliser("numbers");
    expect(engine.requests.at(-1)?.disabled).toEqual(["numbers"]);
  });
});

describe("request sequencing", () => {
  it("discards stale responses that arrive after a newer one", async () => {
    const engine = new FakeEngine();
    const store = makeStore(engine);
    await store.recompute(); // settled default report

    engine.gated = true;
    const first = store.toggleNormaliser("numbers"); // request 0 (gated)
    const second = store.toggleNormaliser("numbers"); // request 1 (gated, default config again)

    engine.release(1); // newest finishes first
    await second;
    expect(store.getState().report?.metrics.word.wer.value).toBeCloseTo(0.0909, 3);

    engine.release(0); // stale response must be dropped
    await first;
    expect(store.getState().report?.metrics.word.wer.value).toBeCloseTo(0.0909, 3);
  });
});

describe("failure handling", () => {
  it("shows a toast and reverts toggles when the engine fails", async () => {
    const store = makeStore(new FakeEngine());
    await store.recompute();

    // no fixture for this set: the fake engine rejects
    await store.toggleNormaliser("diacritics");
    const state = store.getState();
    expect(state.toast).toContain("engine exploded");
    expect(state.disabled.size).toBe(0); // reverted to the applied config
    expect(state.report?.metrics.word.wer.value).toBeCloseTo(0.0909, 3);
  });

  it("raises the banner and keeps the previous view on a malformed report", async () => {
    const switchable: Engine & { inner: Engine } = {
      inner: new FakeEngine(),
      evaluate(request) {
        return this.inner.evaluate(request);
      },
    };
    const store = new ExplorerStore(switchable);
    store.setTexts("a", "b");
    await store.recompute();
    const before = store.getState().report;

    switchable.inner = {
      evaluate: () => Promise.resolve({ version: "9.9" } as unknown as EvaluationReport),
    };
    await store.recompute();

    const state = store.getState();
    expect(state.banner).toContain("unsupported report");
    expect(state.report).toEqual(before);
  });
});
