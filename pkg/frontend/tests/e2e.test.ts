/**
 * End-to-end check against a real gateway: spawns the Python server,
 * submits the bundled coast-to-coast scenario through the form layer,
 * and verifies the run view the way the UI consumes it.
 *
 * Skipped automatically when the backend package is not importable.
 */

import { ChildProcess, spawn, spawnSync } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { GatewayClient } from '../src/api.js';
import { buildComparison } from '../src/compare.js';
import { buildRequestBody, defaultFormState, formFromRequest } from '../src/form.js';
import { MODE_CLASSES, projectOverlay } from '../src/mapview.js';
import type { RunRecord } from '../src/types.js';
import { planOf, reportOf } from '../src/types.js';

const PYTHON = process.env.FT_PYTHON ?? 'python3';
const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

function backendAvailable(): boolean {
  const probe = spawnSync(PYTHON, ['-c', 'import freighttwin'], { timeout: 30_000 });
  return probe.status === 0;
}

const available = backendAvailable();

describe.skipIf(!available)('gateway end-to-end', () => {
  let server: ChildProcess;
  const client = new GatewayClient(BASE);

  beforeAll(async () => {
    server = spawn(PYTHON, ['-m', 'freighttwin.cli', 'serve', '--host', '127.0.0.1', '--port', String(PORT)], {
      stdio: 'ignore',
    });
    const deadline = Date.now() + 60_000;
    for (;;) {
      try {
        const health = await client.getHealth();
        if (health.ok) return;
      } catch {
        // not up yet
      }
      if (Date.now() > deadline) throw new Error('gateway did not come up');
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }, 90_000);

  afterAll(() => {
    server?.kill('SIGTERM');
  });

  async function submitDemo(carbonPrice: number): Promise<RunRecord> {
    const fixtures = await client.getFixtures();
    const fixture14 = fixtures.find((f) => f.name === 'fixture14');
    expect(fixture14).toBeDefined();
    const seattle = fixture14!.nodes.find((n) => n.name === 'Seattle');
    const orlando = fixture14!.nodes.find((n) => n.name === 'Orlando');
    const form = {
      ...defaultFormState('fixture14'),
      origin: seattle!.id,
      destination: orlando!.id,
      carbonPrice,
      samples: 2000,
    };
    const runId = await client.submitScenario(buildRequestBody(form));
    return client.pollRun(runId, 100);
  }

  it('completes the demo run with map overlay and faithful cost breakdown', async () => {
    const record = await submitDemo(0.25);
    expect(record.status).toBe('completed');
    expect(record.explanation).toContain('250 containers');
    expect(record.explanation).toContain('GHG tax');

    // map overlay: highway and rail legs in distinct styles
    expect(record.geojson).not.toBeNull();
    const primitives = projectOverlay(record.geojson!);
    const classes = new Set(primitives.map((p) => p.className));
    expect(classes.has(MODE_CLASSES.Highway)).toBe(true);
    expect(classes.has(MODE_CLASSES.Rail)).toBe(true);

    // cost breakdown the view renders must match the gateway JSON to the cent
    const plan = planOf(record);
    expect(plan).not.toBeNull();
    const match = record.explanation!.match(/total cost of \$([\d,]+\.\d{2})/);
    expect(match).not.toBeNull();
    const narrated = Number(match![1].replaceAll(',', ''));
    expect(Math.abs(narrated - plan!.total_usd)).toBeLessThan(0.005);
    const sum = plan!.linehaul_usd + plan!.transfer_usd + plan!.ghg_tax_usd;
    expect(plan!.total_usd).toBeCloseTo(sum, 9);
    expect(reportOf(record)!.samples).toBe(2000);

    // form round-trip from the stored request
    const reloaded = formFromRequest(record.request);
    expect(reloaded.containers).toBe(250);
    expect(reloaded.deadlineHours).toBe(36);
  }, 120_000);

  it('two-run carbon-price comparison shows the monotone direction', async () => {
    const low = await submitDemo(0.25);
    const high = await submitDemo(1.0);
    const { rows, omitted } = buildComparison([low, high]);
    expect(omitted).toEqual([]);
    expect(rows).toHaveLength(2);
    const [cheapCarbon, pricedCarbon] = rows;
    expect(pricedCarbon.totalUsd).toBeGreaterThanOrEqual(cheapCarbon.totalUsd);
    // same route with a higher tax, or a different route with lower emissions
    const sameRoute = pricedCarbon.emissionsKg === cheapCarbon.emissionsKg;
    if (sameRoute) {
      expect(pricedCarbon.ghgTaxUsd).toBeGreaterThanOrEqual(cheapCarbon.ghgTaxUsd);
    } else {
      expect(pricedCarbon.emissionsKg).toBeLessThanOrEqual(cheapCarbon.emissionsKg);
    }
  }, 120_000);

  it('surfaces an infeasible deadline as a failed run with the minimum time', async () => {
    const fixtures = await client.getFixtures();
    const nodes = fixtures.find((f) => f.name === 'fixture14')!.nodes;
    const form = {
      ...defaultFormState('fixture14'),
      origin: nodes[0].id,
      destination: nodes[nodes.length - 1].id,
      deadlineHours: 0.001,
    };
    const runId = await client.submitScenario(buildRequestBody(form));
    const record = await client.pollRun(runId, 100);
    expect(record.status).toBe('failed');
    expect(record.error?.data?.error).toBe('DeadlineInfeasible');
    expect(record.error?.data?.min_achievable_hours).toBeGreaterThan(0);
  }, 120_000);
});
