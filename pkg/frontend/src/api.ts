/** Thin fetch client for the gateway; the UI never computes geometry or
 * costs itself, it only renders what the server returns. */

import type { FixtureInfo, RunRecord, ScenarioRequestBody } from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GatewayError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(message);
  }
}

export class GatewayClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      throw new GatewayError(`${path} failed with ${response.status}`, response.status, body);
    }
    return body as T;
  }

  getHealth(): Promise<{ ok: boolean }> {
    return this.request('/health');
  }

  getFixtures(): Promise<FixtureInfo[]> {
    return this.request('/fixtures');
  }

  async submitScenario(body: ScenarioRequestBody): Promise<string> {
    const out = await this.request<{ run_id: string }>('/scenarios', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    return out.run_id;
  }

  getRun(runId: string): Promise<RunRecord> {
    return this.request(`/runs/${runId}`);
  }

  /** Poll until the run reaches a terminal state. */
  async pollRun(runId: string, intervalMs = 1000, timeoutMs = 120_000): Promise<RunRecord> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const record = await this.getRun(runId);
      if (record.status === 'completed' || record.status === 'failed') {
        return record;
      }
      if (Date.now() > deadline) {
        throw new Error(`run ${runId} still ${record.status} after ${timeoutMs} ms`);
      }
      await new Promise((resolve) => setTimeout(resolve, intervalMs));
    }
  }
}
