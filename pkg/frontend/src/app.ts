/** Browser wiring: connects the store to the DOM. */

import { HttpEngine } from "./engine.js";
import { renderCharts, renderDiff, renderMetrics, renderToggles } from "./render.js";
import { SAMPLES } from "./samples.js";
import { ExplorerStore, ViewState } from "./state.js";
import { NormaliserName } from "./types.js";

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (!element) {
    throw new Error(`missing element #${id}`);
  }
  return element as T;
}

export function startApp(): ExplorerStore {
  const store = new ExplorerStore(new HttpEngine());

  const referenceInput = byId<HTMLTextAreaElement>("reference");
  const hypothesisInput = byId<HTMLTextAreaElement>("hypothesis");
  const sampleSelect = byId<HTMLSelectElement>("samples");
  const togglesBox = byId<HTMLDivElement>("toggles");
  const metricsBox = byId<HTMLDivElement>("metrics");
  const diffBox = byId<HTMLDivElement>("diff");
  const chartsBox = byId<HTMLDivElement>("charts");
  const bannerBox = byId<HTMLDivElement>("banner");
  const toastBox = byId<HTMLDivElement>("toast");

  for (const sample of SAMPLES) {
    const option = document.createElement("option");
    option.value = sample.id;
    option.textContent = sample.label;
    sampleSelect.appendChild(option);
  }

  function renderAll(state: ViewState): void {
    togglesBox.innerHTML = renderToggles(state.disabled);
    togglesBox.querySelectorAll<HTMLInputElement>("input[data-normaliser]").forEach((box) => {
      box.addEventListener("change", () => {
        void store.toggleNormaliser(box.dataset.normaliser as NormaliserName);
      });
    });
    if (state.report) {
      metricsBox.innerHTML = renderMetrics(state.report);
      diffBox.innerHTML = renderDiff(state.report, state.chartSelection);
      chartsBox.innerHTML = renderCharts(state.report);
      chartsBox.querySelectorAll<HTMLElement>("[data-error]").forEach((bar) => {
        bar.addEventListener("click", () => {
          store.selectChartBar(bar.dataset.error ?? "");
        });
      });
    }
    bannerBox.textContent = state.banner ?? "";
    bannerBox.hidden = state.banner === null;
    toastBox.textContent = state.toast ?? "";
    toastBox.hidden = state.toast === null;
    document.body.classList.toggle("busy", state.busy);
  }

  store.subscribe(renderAll);
  renderAll(store.getState());

  byId<HTMLButtonElement>("evaluate").addEventListener("click", () => {
    store.setTexts(referenceInput.value, hypothesisInput.value);
    void store.recompute();
  });

  sampleSelect.addEventListener("change", () => {
    const sample = SAMPLES.find((s) => s.id === sampleSelect.value);
    if (sample) {
      referenceInput.value = sample.reference;
      hypothesisInput.value = sample.hypothesis;
      store.setTexts(sample.reference, sample.hypothesis, sample.id);
      void store.recompute();
    }
  });

  return store;
}

startApp();
