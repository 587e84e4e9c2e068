/** Side-by-side what-if comparison of completed runs. */

import type { RunRecord } from './types.js';
import { planOf, reportOf } from './types.js';

export interface ComparisonRow {
  runId: string;
  totalUsd: number;
  ghgTaxUsd: number;
  emissionsKg: number;
  totalTimeHours: number;
  onTimeProbability: number;
  carbonPrice: number;
  deltaTotalUsd: number;
  deltaGhgTaxUsd: number;
  deltaEmissionsKg: number;
}

export interface Comparison {
  rows: ComparisonRow[];
  omitted: string[]; // run ids skipped because they are not completed
}

export function buildComparison(records: RunRecord[]): Comparison {
  const rows: ComparisonRow[] = [];
  const omitted: string[] = [];
  for (const record of records) {
    const plan = record.status === 'completed' ? planOf(record) : null;
    const report = record.status === 'completed' ? reportOf(record) : null;
    if (!plan || !report) {
      omitted.push(record.run_id);
      continue;
    }
    rows.push({
      runId: record.run_id,
      totalUsd: plan.total_usd,
      ghgTaxUsd: plan.ghg_tax_usd,
      emissionsKg: plan.emissions_kg,
      totalTimeHours: plan.total_time_hours,
      onTimeProbability: report.on_time_probability,
      carbonPrice: record.request.scenario.carbon_price_usd_per_kg,
      deltaTotalUsd: 0,
      deltaGhgTaxUsd: 0,
      deltaEmissionsKg: 0,
    });
  }
  const base = rows[0];
  if (base) {
    for (const row of rows) {
      row.deltaTotalUsd = row.totalUsd - base.totalUsd;
      row.deltaGhgTaxUsd = row.ghgTaxUsd - base.ghgTaxUsd;
      row.deltaEmissionsKg = row.emissionsKg - base.emissionsKg;
    }
  }
  return { rows, omitted };
}

export function formatUsd(value: number): string {
  return value.toLocaleString('en-US', { style: 'currency', currency: 'USD' });
}

export function formatDelta(value: number, unit: string): string {
  const sign = value > 0 ? '+' : '';
  return `${sign}${value.toFixed(2)} ${unit}`;
}
