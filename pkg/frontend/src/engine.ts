/** Boundary to the evaluation engine: anything that turns a text pair plus
 * normaliser toggles into a schema-1.0 report. The bundled server endpoint
 * shells out to the CLI; tests substitute a fake. */

import { EvaluationReport, NormaliserName, validateReport } from "./types.js";

export interface EngineRequest {
  reference: string;
  hypothesis: string;
  disabled: NormaliserName[];
}

export interface Engine {
  evaluate(request: EngineRequest): Promise<EvaluationReport>;
}

export class HttpEngine implements Engine {
  constructor(private readonly endpoint = "/api/evaluate") {}

  async evaluate(request: EngineRequest): Promise<EvaluationReport> {
    const response = await fetch(this.endpoint, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!response.ok) {
      const detail = await response.text().catch(() => "");
      throw new Error(`engine responded ${response.status}: ${detail.slice(0, 200)}`);
    }
    return validateReport(await response.json());
  }
}
