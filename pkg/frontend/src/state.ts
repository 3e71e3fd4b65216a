/** View state and its transitions.
 *
 * One evaluation may be in flight at a time conceptually, but rapid toggling
 * can overlap requests; every request carries a sequence number and a
 * response is dropped unless it is the newest. Failed requests revert the
 * toggles to the last applied configuration; malformed reports raise the
 * error banner and keep the previous view.
 */

import { Engine } from "./engine.js";
import { EvaluationReport, NormaliserName, validateReport } from "./types.js";

export interface ViewState {
  referenceText: string;
  hypothesisText: string;
  disabled: ReadonlySet<NormaliserName>;
  sampleId: string | null;
  report: EvaluationReport | null;
  chartSelection: string | null; // highlighted error class, if any
  busy: boolean;
  banner: string | null; // persistent error (malformed report)
  toast: string | null; // transient failure notice (engine error)
}

type Listener = (state: ViewState) => void;

export class ExplorerStore {
  private state: ViewState = {
    referenceText: "",
    hypothesisText: "",
    disabled: new Set(),
    sampleId: null,
    report: null,
    chartSelection: null,
    busy: false,
    banner: null,
    toast: null,
  };

  /** toggles matching the report currently on screen (revert target) */
  private appliedDisabled: ReadonlySet<NormaliserName> = new Set();
  private sequence = 0;
  private listeners: Listener[] = [];

  constructor(private readonly engine: Engine) {}

  getState(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  setTexts(reference: string, hypothesis: string, sampleId: string | null = null): void {
    this.update({
      referenceText: reference,
      hypothesisText: hypothesis,
      sampleId,
    });
  }

  selectChartBar(errorClass: string): void {
    this.update({
      chartSelection: this.state.chartSelection === errorClass ? null : errorClass,
    });
  }

  toggleNormaliser(name: NormaliserName): Promise<void> {
    const disabled = new Set(this.state.disabled);
    if (disabled.has(name)) {
      disabled.delete(name);
    } else {
      disabled.add(name);
    }
    this.update({ disabled });
    return this.recompute();
  }

  async recompute(): Promise<void> {
    const requested = new Set(this.state.disabled);
    const seq = ++this.sequence;
    this.update({ busy: true, toast: null });
    let report: EvaluationReport;
    try {
      const raw = await this.engine.evaluate({
        reference: this.state.referenceText,
        hypothesis: this.state.hypothesisText,
        disabled: [...requested].sort(),
      });
      if (seq !== this.sequence) {
        return; // superseded by a newer toggle; discard silently
      }
      report = validateReport(raw);
    } catch (error) {
      if (seq !== this.sequence) {
        return;
      }
      const message = error instanceof Error ? error.message : String(error);
      if (message.startsWith("unsupported report") || message.startsWith("report ")) {
        // malformed report: banner, previous view retained
        this.update({ busy: false, banner: message });
      } else {
        // engine failure: toast and revert the toggles
        this.update({
          busy: false,
          toast: message,
          disabled: new Set(this.appliedDisabled),
        });
      }
      return;
    }
    this.appliedDisabled = requested;
    this.update({ busy: false, banner: null, report });
  }
}
